#![allow(dead_code)]

use hopf_galois_core::catalog::{self, GroupId};
use hopf_galois_core::hopf::ExtensionProblem;
use hopf_galois_core::permcore::parse_generator_list;
use hopf_galois_core::PermGroup;

pub fn grp(text: &str, degree: usize) -> PermGroup {
    PermGroup::new(degree, parse_generator_list(text, degree).unwrap()).unwrap()
}

pub fn transitive(label: &str) -> PermGroup {
    catalog::embedded().transitive_by_label(label).unwrap().group.clone()
}

pub fn natural(label: &str) -> ExtensionProblem {
    ExtensionProblem::from_transitive(transitive(label)).unwrap()
}

pub fn id_of(order: u64, name: &str) -> GroupId {
    catalog::groups_of_order(order)
        .unwrap()
        .into_iter()
        .find(|e| e.name == name)
        .unwrap_or_else(|| panic!("no group {name} of order {order}"))
        .id
}

/// Smallest subgroup class of `G'` (the stabilizer of 0) whose order is `order`
/// and which contains an element satisfying `pick`.
pub fn inside_stabilizer(g: &PermGroup, order: u64, pick: impl Fn(&hopf_galois_core::Permutation) -> bool) -> PermGroup {
    let gp = g.stabilizer(0);
    hopf_galois_core::permcore::subgroup_classes(g, &gp)
        .unwrap()
        .into_iter()
        .map(|c| c.representative)
        .find(|h| h.order() == order && h.elements().unwrap().iter().any(&pick))
        .unwrap()
}
