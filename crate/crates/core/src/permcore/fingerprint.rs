use alloc::vec::Vec;

use hashbrown::HashMap;

use super::classes::{element_order_histogram, is_solvable};
use super::coset::coset_action;
use super::group::{PermGroup, ELEMENT_BOUND};
use crate::error::{Error, Result};

/// Cheap isomorphism invariants. The cycle-type field depends on the
/// permutation representation; the others do not.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupFingerprint {
    pub order: u64,
    /// `(element order, count)`, sorted by order.
    pub element_order_histogram: Vec<(u64, u64)>,
    /// `(cycle type, count)`, sorted by cycle type.
    pub cycle_type_multiset: Vec<(Vec<usize>, u64)>,
    /// Prime-power orders of the cyclic factors of `G/G'`, ascending.
    pub abelian_invariants: Vec<u64>,
    pub is_solvable: bool,
}

impl GroupFingerprint {
    /// Equality of the representation-independent fields.
    pub fn abstractly_equal(&self, other: &GroupFingerprint) -> bool {
        self.order == other.order
            && self.element_order_histogram == other.element_order_histogram
            && self.abelian_invariants == other.abelian_invariants
            && self.is_solvable == other.is_solvable
    }

    pub fn has_cycle_type(&self, cycle_type: &[usize]) -> bool {
        self.cycle_type_multiset.iter().any(|(c, _)| c == cycle_type)
    }
}

pub fn group_fingerprint(g: &PermGroup) -> Result<GroupFingerprint> {
    let order = g.order();
    if order > ELEMENT_BOUND {
        return Err(Error::OrderBound {
            order,
            bound: ELEMENT_BOUND,
        });
    }
    let mut types: HashMap<Vec<usize>, u64> = HashMap::new();
    g.chain().for_each_element(|x| *types.entry(x.cycle_type()).or_default() += 1);
    let mut cycle_type_multiset: Vec<(Vec<usize>, u64)> = types.into_iter().collect();
    cycle_type_multiset.sort_unstable();
    Ok(GroupFingerprint {
        order,
        element_order_histogram: element_order_histogram(g)?,
        cycle_type_multiset,
        abelian_invariants: abelian_invariants(g)?,
        is_solvable: is_solvable(g),
    })
}

/// Elementary divisors of the abelianization.
pub fn abelian_invariants(g: &PermGroup) -> Result<Vec<u64>> {
    let quotient = coset_action(g, &g.derived_subgroup())?.image;
    let hist = element_order_histogram(&quotient)?;
    let q = quotient.order();
    let mut out = Vec::new();
    let mut rest = q;
    let mut p = 2;
    while rest > 1 {
        if rest % p != 0 {
            p += 1;
            continue;
        }
        let mut full = 0u32;
        while rest % p == 0 {
            rest /= p;
            full += 1;
        }
        // log_p of #{x : x^(p^k) = 1}, for k = 0, 1, ..
        let mut logs: Vec<u32> = Vec::new();
        let mut k = 0u32;
        loop {
            let pk = p.pow(k);
            let count: u64 = hist
                .iter()
                .filter(|(o, _)| pk % o == 0)
                .map(|(_, c)| c)
                .sum();
            let l = count.ilog(p);
            logs.push(l);
            if l == full {
                break;
            }
            k += 1;
        }
        // logs[k] - logs[k-1] factors have exponent >= k
        for k in 1..logs.len() {
            let at_least_k = logs[k] - logs[k - 1];
            let at_least_next = if k + 1 < logs.len() { logs[k + 1] - logs[k] } else { 0 };
            for _ in 0..(at_least_k - at_least_next) {
                out.push(p.pow(k as u32));
            }
        }
        p += 1;
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::parse_generator_list;

    fn grp(s: &str, n: usize) -> PermGroup {
        PermGroup::new(n, parse_generator_list(s, n).unwrap()).unwrap()
    }

    #[test]
    fn trivial_group() {
        let f = group_fingerprint(&PermGroup::trivial(3)).unwrap();
        assert_eq!(f.order, 1);
        assert_eq!(f.element_order_histogram, alloc::vec![(1, 1)]);
        assert!(f.abelian_invariants.is_empty());
    }

    #[test]
    fn abelianizations() {
        assert_eq!(abelian_invariants(&PermGroup::symmetric(4)).unwrap(), alloc::vec![2]);
        assert_eq!(abelian_invariants(&PermGroup::cyclic(12)).unwrap(), alloc::vec![3, 4]);
        assert_eq!(abelian_invariants(&grp("(1,2);(3,4);(5,6,7,8)", 8)).unwrap(), alloc::vec![2, 2, 4]);
        assert!(abelian_invariants(&PermGroup::alternating(5)).unwrap().is_empty());
    }

    #[test]
    fn c6_and_s3_differ() {
        let a = group_fingerprint(&PermGroup::cyclic(6)).unwrap();
        let b = group_fingerprint(&PermGroup::symmetric(3)).unwrap();
        assert!(!a.abstractly_equal(&b));
    }
}
