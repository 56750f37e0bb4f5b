use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use super::group::{PermGroup, ELEMENT_BOUND};
use super::perm::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Lexicographically least member.
    pub representative: Permutation,
    pub size: u64,
    pub elements: Vec<Permutation>,
}

impl ConjugacyClass {
    pub fn element_order(&self) -> u64 {
        self.representative.order()
    }
}

/// Classes sorted by element order, then representative.
pub fn conjugacy_classes(g: &PermGroup) -> Result<Vec<ConjugacyClass>> {
    let elements = g.elements()?;
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut assigned = vec![false; elements.len()];
    let mut classes = Vec::new();
    for start in 0..elements.len() {
        if assigned[start] {
            continue;
        }
        assigned[start] = true;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let x = &elements[members[i]];
            for s in g.generators() {
                let y = x.conjugate_by(s);
                let j = index[&y];
                if !assigned[j] {
                    assigned[j] = true;
                    members.push(j);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        classes.push(ConjugacyClass {
            representative: elements[start].clone(),
            size: members.len() as u64,
            elements: members.iter().map(|&m| elements[m].clone()).collect(),
        });
    }
    classes.sort_by(|a, b| {
        (a.element_order(), &a.representative).cmp(&(b.element_order(), &b.representative))
    });
    Ok(classes)
}

fn class_bits(group: &PermGroup, classes: &[ConjugacyClass]) -> Vec<bool> {
    classes.iter().map(|c| group.contains(&c.representative)).collect()
}

/// Every normal subgroup, sorted by order and then by the classes it contains.
pub fn normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let classes = conjugacy_classes(g)?;
    let n = g.degree();
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut list: Vec<(Vec<bool>, PermGroup)> = Vec::new();

    let trivial = PermGroup::trivial(n);
    let bits = class_bits(&trivial, &classes);
    seen.insert(bits.clone());
    list.push((bits, trivial));

    let mut minimal: Vec<(Vec<bool>, PermGroup)> = Vec::new();
    for c in classes.iter().skip(1) {
        let closure = PermGroup::from_generators(n, vec![c.representative.clone()]).normal_closure_in(g);
        let bits = class_bits(&closure, &classes);
        if seen.insert(bits.clone()) {
            list.push((bits.clone(), closure.clone()));
            minimal.push((bits, closure));
        }
    }

    let mut i = 1;
    while i < list.len() {
        for (mbits, m) in &minimal {
            let a = &list[i].0;
            if mbits.iter().zip(a).all(|(x, y)| !*x || *y) {
                continue;
            }
            let join = list[i].1.join(m);
            let bits = class_bits(&join, &classes);
            if seen.insert(bits.clone()) {
                list.push((bits, join));
            }
        }
        i += 1;
    }
    list.sort_by(|a, b| (a.1.order(), &a.0).cmp(&(b.1.order(), &b.0)));
    Ok(list.into_iter().map(|(_, grp)| grp).collect())
}

/// `G, G', G'', ..` ending at the first repeated term.
pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let next = last.derived_subgroup();
        if next.order() == last.order() {
            return series;
        }
        let done = next.is_trivial();
        series.push(next);
        if done {
            return series;
        }
    }
}

pub fn is_solvable(g: &PermGroup) -> bool {
    derived_series(g).last().unwrap().order() == 1
}

/// Orders of all elements, as a sorted list of `(order, count)`.
pub(crate) fn element_order_histogram(g: &PermGroup) -> Result<Vec<(u64, u64)>> {
    let order = g.order();
    if order > ELEMENT_BOUND {
        return Err(Error::OrderBound {
            order,
            bound: ELEMENT_BOUND,
        });
    }
    let mut counts: HashMap<u64, u64> = HashMap::new();
    g.chain().for_each_element(|x| *counts.entry(x.order()).or_default() += 1);
    let mut out: Vec<(u64, u64)> = counts.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}
