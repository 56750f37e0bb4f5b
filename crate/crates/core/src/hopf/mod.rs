//! Deciding whether `(G, G')` is Galois, almost classically Galois, Hopf
//! Galois, or none of these, with witnesses for each positive answer.

mod byott;
mod classify;
mod compose;
mod oracle;
mod problem;

pub use byott::{
    byott_embeddings, byott_obstruction, byott_search, byott_to_regular, format_cycle_type, transport, ByottSearch, HGStructureWitness,
    Obstruction, ObstructionKind, Transport, TRANSPORT,
};
pub use classify::{
    acg_check, byott_structures, classify, classify_extension, intermediate_problems, intermediate_scan, prime_degree_classify,
    ClassifyOptions, HGClassification, IntermediateProblem, IntermediateRow, UndecidedReason, Verdict,
};
pub use compose::{product_embedding, transitivity_compose, transitivity_compose_with_budget, Composition};
pub use oracle::{gp_oracle, oracle_applies, small_regular_subgroups, ORACLE_PRIME_BOUND, ORACLE_SMALL_DEGREE};
pub use problem::ExtensionProblem;
