//! Subgroups of a small group, fused under conjugation in a larger group.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use super::group::PermGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Largest group whose full subgroup list is computed.
pub const SUBGROUP_ENUMERATION_BOUND: u64 = 1024;

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: PermGroup,
    pub order: u64,
    /// Number of subgroups of the inner group in this class.
    pub members: usize,
}

type Bits = Vec<u64>;

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

struct Table {
    elements: Vec<Permutation>,
    mul: Vec<Vec<u32>>,
}

impl Table {
    fn closure(&self, gens: &[usize]) -> Bits {
        let n = self.elements.len();
        let mut bits = vec![0u64; n.div_ceil(64)];
        set_bit(&mut bits, 0);
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &g in gens {
                let y = self.mul[g][x] as usize;
                if !bit(&bits, y) {
                    set_bit(&mut bits, y);
                    queue.push(y);
                }
            }
            i += 1;
        }
        bits
    }
}

/// Classes of subgroups of `inner` under conjugation by `ambient`, sorted by
/// order and then by canonical signature. `inner` must be a subgroup of
/// `ambient` of order at most [`SUBGROUP_ENUMERATION_BOUND`].
pub fn subgroup_classes(ambient: &PermGroup, inner: &PermGroup) -> Result<Vec<SubgroupClass>> {
    if !inner.is_subgroup_of(ambient) {
        return Err(Error::NotSubgroup);
    }
    let order = inner.order();
    if order > SUBGROUP_ENUMERATION_BOUND {
        return Err(Error::OrderBound {
            order,
            bound: SUBGROUP_ENUMERATION_BOUND,
        });
    }
    let deg = inner.degree();
    let elements = inner.elements_unbounded();
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mul: Vec<Vec<u32>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&a.mul_unchecked(b)] as u32).collect())
        .collect();
    let table = Table {
        elements: elements.clone(),
        mul,
    };

    // cyclic subgroups, keyed by their bitsets
    let mut cyclic: Vec<(usize, Bits)> = Vec::new();
    let mut seen: HashSet<Bits> = HashSet::new();
    for i in 1..elements.len() {
        let b = table.closure(&[i]);
        if seen.insert(b.clone()) {
            cyclic.push((i, b));
        }
    }
    let trivial = table.closure(&[]);
    seen.insert(trivial.clone());
    let mut all: Vec<(Vec<usize>, Bits)> = vec![(Vec::new(), trivial)];
    all.extend(cyclic.iter().map(|(i, b)| (vec![*i], b.clone())));
    let mut k = 1;
    while k < all.len() {
        for (c, cb) in &cyclic {
            if subset(cb, &all[k].1) {
                continue;
            }
            let mut gens = all[k].0.clone();
            gens.push(*c);
            let b = table.closure(&gens);
            if seen.insert(b.clone()) {
                all.push((gens, b));
            }
        }
        k += 1;
    }

    let member_sets: HashMap<Vec<Permutation>, usize> = all
        .iter()
        .enumerate()
        .map(|(i, (_, b))| {
            let set: Vec<Permutation> = (0..elements.len()).filter(|&e| bit(b, e)).map(|e| elements[e].clone()).collect();
            (set, i)
        })
        .collect();
    let mut class_of = vec![usize::MAX; all.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut keys: Vec<(&Vec<Permutation>, usize)> = member_sets.iter().map(|(k, &v)| (k, v)).collect();
    keys.sort_by_key(|&(_, v)| v);
    for (set, i) in keys {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = Vec::new();
        let mut orbit: HashSet<Vec<Permutation>> = HashSet::new();
        orbit.insert(set.clone());
        let mut queue = vec![set.clone()];
        while let Some(s) = queue.pop() {
            if let Some(&j) = member_sets.get(&s) {
                if class_of[j] == usize::MAX {
                    class_of[j] = c;
                    members.push(j);
                }
            }
            for g in ambient.generators() {
                let mut conj: Vec<Permutation> = s.iter().map(|x| x.conjugate_by(g)).collect();
                conj.sort_unstable();
                if orbit.insert(conj.clone()) {
                    queue.push(conj);
                }
            }
        }
        classes.push(members);
    }

    let mut out: Vec<(u64, Vec<Permutation>, SubgroupClass)> = classes
        .iter()
        .map(|members| {
            let mut best: Option<(Vec<Permutation>, PermGroup)> = None;
            for &j in members {
                let gens = all[j].0.iter().map(|&e| elements[e].clone()).collect();
                let grp = PermGroup::from_generators(deg, gens);
                let sig = grp.canonical_signature();
                if best.as_ref().is_none_or(|(s, _)| sig < *s) {
                    best = Some((sig, grp));
                }
            }
            let (sig, rep) = best.unwrap();
            let order = rep.order();
            (
                order,
                sig,
                SubgroupClass {
                    representative: rep,
                    order,
                    members: members.len(),
                },
            )
        })
        .collect();
    out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(out.into_iter().map(|(_, _, c)| c).collect())
}
