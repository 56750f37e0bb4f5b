//! Backtrack searches over a stabilizer chain.
//!
//! Subgroups are found level by level from the bottom of the ambient chain.
//! At each level only base images outside the orbit of the part already
//! found are tried, and partial base images are pruned by a caller predicate.

use alloc::vec;
use alloc::vec::Vec;
use core::cell::Cell;

use hashbrown::HashMap;

use super::chain::StabChain;
use super::group::{PermGroup, ELEMENT_BOUND};
use super::perm::Permutation;
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Counts search nodes; exceeding the limit is an error, never an empty result.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: Cell::new(0),
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn tick(&self) -> Result<()> {
        let u = self.used.get() + 1;
        self.used.set(u);
        if u > self.limit {
            Err(Error::BudgetExhausted { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

/// Points reachable from `seeds` under `gens`.
fn orbit_marks(degree: usize, gens: &[Permutation], seeds: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; degree];
    let mut queue: Vec<usize> = Vec::new();
    for &s in seeds {
        if !seen[s] {
            seen[s] = true;
            queue.push(s);
        }
    }
    let mut i = 0;
    while i < queue.len() {
        let p = queue[i];
        for g in gens {
            let q = g.apply(p);
            if !seen[q] {
                seen[q] = true;
                queue.push(q);
            }
        }
        i += 1;
    }
    seen
}

/// `{g in ambient : property(g)}`, assumed to be a subgroup containing `known`.
///
/// `prune(base, images)` sees the base of the search chain and a prefix of
/// the images of its points; returning false discards every element with
/// those images.
pub(crate) fn subgroup_search<P, Q>(
    ambient: &PermGroup,
    known: &[Permutation],
    base_prefix: &[usize],
    property: P,
    prune: Q,
    budget: &Budget,
) -> Result<PermGroup>
where
    P: Fn(&Permutation) -> bool,
    Q: Fn(&[usize], &[usize]) -> bool,
{
    let n = ambient.degree();
    let chain = ambient.chain_with_base(base_prefix);
    let base = chain.base();
    let k = base.len();
    let mut found: Vec<Permutation> = known.iter().filter(|g| !g.is_identity()).cloned().collect();

    for i in (0..k).rev() {
        let mut relevant: Vec<Permutation> = found
            .iter()
            .filter(|g| base[..i].iter().all(|&b| g.apply(b) == b))
            .cloned()
            .collect();
        let mut covered = orbit_marks(n, &relevant, &[base[i]]);
        let mut rejected: Vec<usize> = Vec::new();
        let mut orbit = chain.levels[i].orbit.clone();
        orbit.sort_unstable();
        for &p in &orbit {
            if covered[p] {
                continue;
            }
            if !rejected.is_empty() && orbit_marks(n, &relevant, &rejected)[p] {
                continue;
            }
            let mut images: Vec<usize> = base[..i].to_vec();
            images.push(p);
            let start = chain.levels[i].rep(p).unwrap().clone();
            match find_in_coset(&chain, &base, i + 1, start, &mut images, &property, &prune, budget)? {
                Some(g) => {
                    relevant.push(g.clone());
                    found.push(g);
                    covered = orbit_marks(n, &relevant, &[base[i]]);
                }
                None => rejected.push(p),
            }
        }
    }
    Ok(PermGroup::from_generators(n, found))
}

#[allow(clippy::too_many_arguments)]
fn find_in_coset<P, Q>(
    chain: &StabChain,
    base: &[usize],
    level: usize,
    x: Permutation,
    images: &mut Vec<usize>,
    property: &P,
    prune: &Q,
    budget: &Budget,
) -> Result<Option<Permutation>>
where
    P: Fn(&Permutation) -> bool,
    Q: Fn(&[usize], &[usize]) -> bool,
{
    budget.tick()?;
    if !prune(base, images) {
        return Ok(None);
    }
    if level == chain.levels.len() {
        return Ok(if property(&x) { Some(x) } else { None });
    }
    let lv = &chain.levels[level];
    let mut choices: Vec<(usize, usize)> = lv.orbit.iter().map(|&q| (x.apply(q), q)).collect();
    choices.sort_unstable();
    for (img, q) in choices {
        images.push(img);
        let next = x.mul_unchecked(lv.rep(q).unwrap());
        let r = find_in_coset(chain, base, level + 1, next, images, property, prune, budget)?;
        images.pop();
        if r.is_some() {
            return Ok(r);
        }
    }
    Ok(None)
}

/// Pairs `(a, b)` mapped to the elements of a small group sending `a` to `b`.
struct PairTable {
    by_pair: HashMap<(u16, u16), Vec<usize>>,
    elements: Vec<Permutation>,
    cycle_types: Vec<Vec<usize>>,
}

impl PairTable {
    fn new(elements: Vec<Permutation>) -> Self {
        let mut by_pair: HashMap<(u16, u16), Vec<usize>> = HashMap::new();
        for (idx, e) in elements.iter().enumerate() {
            for a in 0..e.degree() {
                by_pair.entry((a as u16, e.apply(a) as u16)).or_default().push(idx);
            }
        }
        let cycle_types = elements.iter().map(|e| e.cycle_type()).collect();
        PairTable {
            by_pair,
            elements,
            cycle_types,
        }
    }

    /// Is there an element of the given cycle type sending each `a` to `b`?
    fn consistent(&self, pairs: &[(usize, usize)], cycle_type: &[usize]) -> bool {
        let Some(&(a0, b0)) = pairs.first() else {
            return true;
        };
        let Some(cands) = self.by_pair.get(&(a0 as u16, b0 as u16)) else {
            return false;
        };
        cands.iter().any(|&c| {
            self.cycle_types[c] == cycle_type
                && pairs[1..].iter().all(|&(a, b)| self.elements[c].apply(a) == b)
        })
    }
}

/// `Norm_ambient(h)`.
pub fn normalizer_in(ambient: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    normalizer_in_with_budget(ambient, h, &Budget::default())
}

pub fn normalizer_in_with_budget(ambient: &PermGroup, h: &PermGroup, budget: &Budget) -> Result<PermGroup> {
    if h.degree() != ambient.degree() {
        return Err(Error::DegreeMismatch {
            expected: ambient.degree(),
            found: h.degree(),
        });
    }
    if !h.is_subgroup_of(ambient) {
        return Err(Error::NotSubgroup);
    }
    let h_order = h.order();
    let table = if h_order <= 5000 {
        Some(PairTable::new(h.elements_unbounded()))
    } else {
        None
    };
    let probes: Vec<Permutation> = match &table {
        Some(t) if h_order <= 256 => t.elements.clone(),
        _ => h.generators().to_vec(),
    };
    let probe_types: Vec<Vec<usize>> = probes.iter().map(|p| p.cycle_type()).collect();
    let n = ambient.degree();
    let mut prefix: Vec<usize> = Vec::new();
    for o in h.orbits() {
        prefix.extend(o);
    }
    let property = |g: &Permutation| h.generators().iter().all(|s| h.contains(&s.conjugate_by(g)));
    let prune = |base: &[usize], images: &[usize]| {
        let Some(t) = &table else {
            return true;
        };
        let j = images.len() - 1;
        let mut pos = vec![usize::MAX; n];
        for (idx, &b) in base[..=j].iter().enumerate() {
            pos[b] = idx;
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (probe, ct) in probes.iter().zip(&probe_types) {
            pairs.clear();
            let mut touches_new = false;
            for a in 0..=j {
                let c = pos[probe.apply(base[a])];
                if c != usize::MAX {
                    if a == j || c == j {
                        touches_new = true;
                    }
                    pairs.push((images[a], images[c]));
                }
            }
            if touches_new && !t.consistent(&pairs, ct) {
                return false;
            }
        }
        true
    };
    subgroup_search(ambient, h.generators(), &prefix, property, prune, budget)
}

/// `C_g(x)` for `x` in `g`.
pub fn centralizer_in(g: &PermGroup, x: &Permutation) -> Result<PermGroup> {
    centralizer_in_with_budget(g, x, &Budget::default())
}

pub fn centralizer_in_with_budget(g: &PermGroup, x: &Permutation, budget: &Budget) -> Result<PermGroup> {
    if x.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: x.degree(),
        });
    }
    if !g.contains(x) {
        return Err(Error::NotMember);
    }
    let n = g.degree();
    let prefix: Vec<usize> = x.cycles().into_iter().flatten().collect();
    let property = |y: &Permutation| y.mul_unchecked(x) == x.mul_unchecked(y);
    let prune = |base: &[usize], images: &[usize]| {
        let j = images.len() - 1;
        let mut pos = vec![usize::MAX; n];
        for (idx, &b) in base[..=j].iter().enumerate() {
            pos[b] = idx;
        }
        for a in 0..=j {
            let c = pos[x.apply(base[a])];
            if c != usize::MAX && (a == j || c == j) && images[c] != x.apply(images[a]) {
                return false;
            }
        }
        true
    };
    subgroup_search(g, core::slice::from_ref(x), &prefix, property, prune, budget)
}

/// Some `c` in `ambient` with `c a c^-1 = b`, by scanning the elements.
pub fn conjugating_element(ambient: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<Option<Permutation>> {
    if a.order() != b.order() || a.degree() != b.degree() {
        return Ok(None);
    }
    let order = ambient.order();
    if order > ELEMENT_BOUND {
        return Err(Error::OrderBound {
            order,
            bound: ELEMENT_BOUND,
        });
    }
    let mut hit = None;
    let mut stop = false;
    ambient.chain().for_each_element(|c| {
        if stop {
            return;
        }
        if a.generators().iter().all(|s| b.contains(&s.conjugate_by(c))) {
            hit = Some(c.clone());
            stop = true;
        }
    });
    Ok(hit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::parse_generator_list;

    fn grp(s: &str, n: usize) -> PermGroup {
        PermGroup::new(n, parse_generator_list(s, n).unwrap()).unwrap()
    }

    fn brute_centralizer_order(g: &PermGroup, x: &Permutation) -> usize {
        g.elements()
            .unwrap()
            .iter()
            .filter(|y| y.mul_unchecked(x) == x.mul_unchecked(y))
            .count()
    }

    #[test]
    fn centralizers_match_brute_force() {
        let s5 = PermGroup::symmetric(5);
        for x in s5.elements().unwrap().iter().step_by(7) {
            let c = centralizer_in(&s5, x).unwrap();
            assert_eq!(c.order() as usize, brute_centralizer_order(&s5, x), "{x}");
        }
        let five = Permutation::parse_cycles("(1,2,3,4,5)", 5).unwrap();
        assert_eq!(centralizer_in(&s5, &five).unwrap().order(), 5);
    }

    #[test]
    fn normalizers() {
        let s10 = PermGroup::symmetric(10);
        let c10 = PermGroup::cyclic(10);
        assert_eq!(normalizer_in(&s10, &c10).unwrap().order(), 40);
        let s4 = PermGroup::symmetric(4);
        assert_eq!(normalizer_in(&s4, &s4).unwrap().order(), 24);
        let c3 = grp("(1,2,3)", 4);
        assert_eq!(normalizer_in(&s4, &c3).unwrap().order(), 6);
        let v4 = grp("(1,2)(3,4);(1,3)(2,4)", 4);
        assert_eq!(normalizer_in(&s4, &v4).unwrap().order(), 24);
    }

    #[test]
    fn normalizer_rejects_non_subgroups() {
        let a4 = PermGroup::alternating(4);
        let t = grp("(1,2)", 4);
        assert_eq!(normalizer_in(&a4, &t).unwrap_err(), Error::NotSubgroup);
        assert_eq!(
            centralizer_in(&a4, &Permutation::parse_cycles("(1,2)", 4).unwrap()).unwrap_err(),
            Error::NotMember
        );
    }

    #[test]
    fn budget_is_reported() {
        let s8 = PermGroup::symmetric(8);
        let n = grp("(1,2,3,4,5,6,7,8)", 8);
        let err = normalizer_in_with_budget(&s8, &n, &Budget::new(3)).unwrap_err();
        assert_eq!(err, Error::BudgetExhausted { limit: 3 });
    }

    #[test]
    fn subgroup_conjugacy() {
        let s4 = PermGroup::symmetric(4);
        let a = grp("(1,2)", 4);
        let b = grp("(3,4)", 4);
        let c = grp("(1,2)(3,4)", 4);
        let x = conjugating_element(&s4, &a, &b).unwrap().unwrap();
        assert!(a.conjugate(&x).same_group(&b));
        assert!(conjugating_element(&s4, &a, &c).unwrap().is_none());
    }
}
