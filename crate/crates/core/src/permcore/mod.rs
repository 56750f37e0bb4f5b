//! Permutation arithmetic, stabilizer chains and the searches built on them.

mod chain;
mod classes;
mod coset;
mod fingerprint;
mod group;
mod morph;
mod perm;
mod search;
mod subgroups;

pub use chain::StabChain;
pub use classes::{conjugacy_classes, derived_series, is_solvable, normal_subgroups, ConjugacyClass};
pub use coset::{coset_action, CosetActionResult};
pub use fingerprint::{abelian_invariants, group_fingerprint, GroupFingerprint};
pub use group::{PermGroup, ELEMENT_BOUND};
pub use morph::{
    find_monomorphisms, is_isomorphic, is_isomorphic_with_budget, small_generating_set,
    transitive_embeddings, ElementIndex, Homomorphism, MonomorphismConstraints, TARGET_ELEMENT_BOUND,
};
pub use perm::{format_generator_list, parse_generator_list, Permutation, MAX_DEGREE};
pub use search::{
    centralizer_in, centralizer_in_with_budget, conjugating_element, normalizer_in,
    normalizer_in_with_budget, Budget, DEFAULT_BUDGET,
};
pub use subgroups::{subgroup_classes, SubgroupClass, SUBGROUP_ENUMERATION_BOUND};

#[allow(unused_imports)]
pub(crate) use perm::{gcd, lcm};
