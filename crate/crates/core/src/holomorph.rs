//! Regular representations, automorphism groups and holomorphs of small groups.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use once_cell::race::OnceBox;

use crate::catalog::{CatalogEntry, GroupId};
use crate::error::{Error, Result};
use crate::permcore::{is_solvable, Budget, ElementIndex, PermGroup, Permutation};

/// Largest group handled by this module.
pub const LABELLED_BOUND: usize = 64;

/// An abstract group as a multiplication table on labels `0..order`, with
/// label 0 the identity.
#[derive(Clone, Debug)]
pub struct LabelledGroup {
    pub source: Option<GroupId>,
    elements: Vec<Permutation>,
    mul: Vec<Vec<u16>>,
    generators: Vec<usize>,
}

impl LabelledGroup {
    /// Labels elements in breadth-first order from the identity, multiplying
    /// by generators on the left.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<Self> {
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(id, 0);
        let mut i = 0;
        while i < elements.len() {
            for s in gens {
                let y = s.mul_unchecked(&elements[i]);
                if !index.contains_key(&y) {
                    if elements.len() == LABELLED_BOUND {
                        return Err(Error::OrderBound {
                            order: elements.len() as u64 + 1,
                            bound: LABELLED_BOUND as u64,
                        });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            i += 1;
        }
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.mul_unchecked(b)] as u16).collect())
            .collect();
        let generators = gens.iter().filter(|g| !g.is_identity()).map(|g| index[g]).collect();
        Ok(LabelledGroup {
            source: None,
            elements,
            mul,
            generators,
        })
    }

    pub fn from_entry(entry: &CatalogEntry) -> Result<Self> {
        let mut g = Self::from_generators(entry.degree, entry.generators())?;
        g.source = Some(entry.id);
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul(a, b) == 0).unwrap()
    }

    pub fn element(&self, a: usize) -> &Permutation {
        &self.elements[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(a, x);
            k += 1;
        }
        k
    }

    /// Labels of the generators the group was built from.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// A short generating set: labels of large order first, each added only
    /// if it enlarges the span.
    pub fn generating_set(&self) -> Vec<usize> {
        let m = self.order();
        let mut labels: Vec<usize> = (1..m).collect();
        labels.sort_by_key(|&a| (core::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span = vec![false; m];
        span[0] = true;
        let mut size = 1;
        for a in labels {
            if size == m {
                break;
            }
            if span[a] {
                continue;
            }
            gens.push(a);
            span = self.closure(&gens);
            size = span.iter().filter(|&&b| b).count();
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut span = vec![false; self.order()];
        span[0] = true;
        let mut queue = vec![0];
        let mut i = 0;
        while i < queue.len() {
            for &g in gens {
                let y = self.mul(g, queue[i]);
                if !span[y] {
                    span[y] = true;
                    queue.push(y);
                }
            }
            i += 1;
        }
        span
    }

    /// Extends generator images to a partial map on `<gens>` respecting left
    /// multiplication by the generators; `None` on a clash.
    fn extend_images(&self, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let m = self.order();
        let mut f = vec![usize::MAX; m];
        let mut used = vec![false; m];
        f[0] = 0;
        used[0] = true;
        let mut queue = vec![0];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (&g, &t) in gens.iter().zip(images) {
                let y = self.mul(g, x);
                let fy = self.mul(t, f[x]);
                if f[y] == usize::MAX {
                    if used[fy] {
                        return None;
                    }
                    f[y] = fy;
                    used[fy] = true;
                    queue.push(y);
                } else if f[y] != fy {
                    return None;
                }
            }
            i += 1;
        }
        Some(f)
    }
}

/// The left regular representation `x -> g x` on the labels.
pub fn regular_representation(n: &LabelledGroup) -> PermGroup {
    let m = n.order();
    let gens = n
        .generators()
        .iter()
        .map(|&g| Permutation::from_images(&(0..m).map(|x| n.mul(g, x)).collect::<Vec<_>>()).unwrap())
        .collect();
    PermGroup::new(m, gens).unwrap()
}

/// `Aut(N)` acting on the labels; every element fixes 0.
pub fn automorphism_group(n: &LabelledGroup) -> Result<PermGroup> {
    automorphism_group_with_budget(n, &Budget::default())
}

pub fn automorphism_group_with_budget(n: &LabelledGroup, budget: &Budget) -> Result<PermGroup> {
    let m = n.order();
    let gens = n.generating_set();
    let k = gens.len();
    let orders: Vec<usize> = (0..m).map(|a| n.element_order(a)).collect();
    let cands: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (1..m).filter(|&a| orders[a] == orders[g]).collect())
        .collect();
    let mut found: Vec<Permutation> = Vec::new();
    for i in (0..k).rev() {
        let mut covered = orbit_marks(m, &found, &[gens[i]]);
        let mut rejected: Vec<usize> = Vec::new();
        for &y in &cands[i] {
            if covered[y] || (!rejected.is_empty() && orbit_marks(m, &found, &rejected)[y]) {
                continue;
            }
            let mut images: Vec<usize> = gens[..i].to_vec();
            images.push(y);
            match aut_search(n, &gens, &cands, &mut images, budget)? {
                Some(f) => {
                    found.push(Permutation::from_images(&f).unwrap());
                    covered = orbit_marks(m, &found, &[gens[i]]);
                }
                None => rejected.push(y),
            }
        }
    }
    PermGroup::new(m, found)
}

fn aut_search(
    n: &LabelledGroup,
    gens: &[usize],
    cands: &[Vec<usize>],
    images: &mut Vec<usize>,
    budget: &Budget,
) -> Result<Option<Vec<usize>>> {
    budget.tick()?;
    let j = images.len();
    let Some(f) = n.extend_images(&gens[..j], images) else {
        return Ok(None);
    };
    if j == gens.len() {
        return Ok(Some(f));
    }
    for &t in &cands[j] {
        images.push(t);
        let r = aut_search(n, gens, cands, images, budget)?;
        images.pop();
        if r.is_some() {
            return Ok(r);
        }
    }
    Ok(None)
}

fn orbit_marks(m: usize, gens: &[Permutation], seeds: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; m];
    let mut queue: Vec<usize> = seeds.to_vec();
    for &s in seeds {
        seen[s] = true;
    }
    let mut i = 0;
    while i < queue.len() {
        for g in gens {
            let q = g.apply(queue[i]);
            if !seen[q] {
                seen[q] = true;
                queue.push(q);
            }
        }
        i += 1;
    }
    seen
}

/// `Hol(N) = lambda(N) Aut(N)` on the labels.
pub fn holomorph(n: &LabelledGroup) -> Result<PermGroup> {
    let reg = regular_representation(n);
    let aut = automorphism_group(n)?;
    Ok(reg.join(&aut))
}

pub fn holomorph_is_solvable(n: &LabelledGroup) -> Result<bool> {
    Ok(is_solvable(&regular_representation(n)) && is_solvable(&automorphism_group(n)?))
}

/// Everything the classifier needs about one catalog group, built once.
pub struct Holomorph {
    pub labelled: LabelledGroup,
    pub regular: PermGroup,
    pub automorphisms: PermGroup,
    pub group: PermGroup,
    pub solvable: bool,
    index: OnceBox<ElementIndex>,
}

impl core::fmt::Debug for Holomorph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Holomorph")
            .field("source", &self.labelled.source)
            .field("order", &self.group.order())
            .finish()
    }
}

impl Holomorph {
    pub fn new(labelled: LabelledGroup) -> Result<Self> {
        let regular = regular_representation(&labelled);
        let automorphisms = automorphism_group(&labelled)?;
        let group = regular.join(&automorphisms);
        let solvable = is_solvable(&regular) && is_solvable(&automorphisms);
        Ok(Holomorph {
            labelled,
            regular,
            automorphisms,
            group,
            solvable,
            index: OnceBox::new(),
        })
    }

    pub fn of_entry(entry: &CatalogEntry) -> Result<Self> {
        Self::new(LabelledGroup::from_entry(entry)?)
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    /// Elements of the holomorph by cycle type, built on first use.
    pub fn element_index(&self) -> Result<&ElementIndex> {
        if let Some(i) = self.index.get() {
            return Ok(i);
        }
        let idx = ElementIndex::new(&self.group)?;
        let _ = self.index.set(Box::new(idx));
        Ok(self.index.get().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::embedded;

    fn labelled(order: u64, name: &str) -> LabelledGroup {
        let e = embedded()
            .groups_of_order(order)
            .unwrap()
            .into_iter()
            .find(|e| e.name == name)
            .unwrap_or_else(|| panic!("{name}"));
        LabelledGroup::from_entry(e).unwrap()
    }

    #[test]
    fn regular_images() {
        let c6 = labelled(6, "C6");
        let r = regular_representation(&c6);
        assert!(r.is_regular());
        assert_eq!(r.generators().len(), 1);
        let a5 = labelled(60, "A5");
        let r = regular_representation(&a5);
        assert_eq!(r.order(), 60);
        assert!(r.is_regular());
    }

    #[test]
    fn table_is_a_latin_square() {
        let g = labelled(12, "A4");
        let m = g.order();
        for a in 0..m {
            let mut row: Vec<usize> = (0..m).map(|b| g.mul(a, b)).collect();
            row.sort_unstable();
            assert_eq!(row, (0..m).collect::<Vec<_>>());
        }
        assert_eq!(g.element(0), &Permutation::identity(g.element(0).degree()));
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(automorphism_group(&labelled(30, "C30")).unwrap().order(), 8);
        assert_eq!(automorphism_group(&labelled(8, "C2xC2xC2")).unwrap().order(), 168);
        assert_eq!(automorphism_group(&labelled(30, "D30")).unwrap().order(), 120);
        assert_eq!(automorphism_group(&labelled(20, "F5")).unwrap().order(), 20);
        assert_eq!(automorphism_group(&labelled(20, "C20")).unwrap().order(), 8);
    }

    #[test]
    fn small_holomorphs() {
        assert_eq!(holomorph(&labelled(6, "C6")).unwrap().order(), 12);
        assert_eq!(holomorph(&labelled(6, "S3")).unwrap().order(), 36);
        assert_eq!(holomorph(&labelled(10, "D10")).unwrap().order(), 200);
        assert_eq!(holomorph(&labelled(60, "A5")).unwrap().order(), 7200);
        assert!(holomorph_is_solvable(&labelled(15, "C15")).unwrap());
        assert!(!holomorph_is_solvable(&labelled(60, "A5")).unwrap());
    }
}
