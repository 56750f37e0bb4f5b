use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use super::chain::StabChain;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Largest group order for which element lists are materialized.
pub const ELEMENT_BOUND: u64 = 100_000;

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and shared by all later readers.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceBox<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceBox::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(Box::new(c.clone()));
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(Self::from_generators(degree, generators))
    }

    /// Identity and repeated generators are dropped; degrees must agree.
    pub(crate) fn from_generators(degree: usize, generators: Vec<Permutation>) -> Self {
        let mut gens: Vec<Permutation> = Vec::with_capacity(generators.len());
        for g in generators {
            debug_assert_eq!(g.degree(), degree);
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        PermGroup {
            degree,
            generators: gens,
            chain: OnceBox::new(),
        }
    }

    pub(crate) fn with_chain(degree: usize, generators: Vec<Permutation>, chain: StabChain) -> Self {
        let g = Self::from_generators(degree, generators);
        let _ = g.chain.set(Box::new(chain));
        g
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(degree, Vec::new())
    }

    pub fn symmetric(n: usize) -> Self {
        if n < 2 {
            return Self::trivial(n);
        }
        let mut gens = vec![Permutation::from_cycles(n, &[vec![0, 1]]).unwrap()];
        if n > 2 {
            gens.push(Permutation::from_cycles(n, &[(0..n).collect()]).unwrap());
        }
        Self::from_generators(n, gens)
    }

    pub fn alternating(n: usize) -> Self {
        if n < 3 {
            return Self::trivial(n);
        }
        let gens = (2..n)
            .map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]).unwrap())
            .collect();
        Self::from_generators(n, gens)
    }

    pub fn cyclic(n: usize) -> Self {
        if n < 2 {
            return Self::trivial(n);
        }
        Self::from_generators(n, vec![Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| Box::new(StabChain::new(self.degree, &self.generators)))
    }

    /// A fresh chain whose base begins with `prefix`.
    pub fn chain_with_base(&self, prefix: &[usize]) -> StabChain {
        StabChain::with_base_prefix(self.degree, &self.generators, prefix)
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Equality as sets of permutations.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].mul_unchecked(&g[j]) == g[j].mul_unchecked(&g[i])))
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point] = true;
        let mut i = 0;
        while i < orbit.len() {
            let p = orbit[i];
            for s in &self.generators {
                let q = s.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbits, each sorted, listed by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !done[p] {
                let o = self.orbit(p);
                for &q in &o {
                    done[q] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == self.degree as u64
    }

    pub fn stabilizer(&self, point: usize) -> PermGroup {
        self.pointwise_stabilizer(&[point])
    }

    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let chain = self.chain_with_base(points);
        let gens = chain.stabilizer_generators(points.len());
        Self::from_generators(self.degree, gens)
    }

    /// All elements in increasing lexicographic order of image lists.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > ELEMENT_BOUND {
            return Err(Error::OrderBound {
                order,
                bound: ELEMENT_BOUND,
            });
        }
        Ok(self.elements_unbounded())
    }

    pub(crate) fn elements_unbounded(&self) -> Vec<Permutation> {
        let mut out = Vec::with_capacity(self.order() as usize);
        self.chain().for_each_element(|g| out.push(g.clone()));
        out.sort_unstable();
        out
    }

    /// The group `g H g^-1`.
    pub fn conjugate(&self, g: &Permutation) -> PermGroup {
        let gi = g.inverse();
        let gens = self
            .generators
            .iter()
            .map(|s| g.mul_unchecked(&s.mul_unchecked(&gi)))
            .collect();
        Self::from_generators(self.degree, gens)
    }

    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Self::from_generators(self.degree, gens)
    }

    pub fn is_normalized_by(&self, g: &Permutation) -> bool {
        let gi = g.inverse();
        self.generators
            .iter()
            .all(|s| self.contains(&g.mul_unchecked(&s.mul_unchecked(&gi))))
    }

    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        ambient.generators.iter().all(|g| self.is_normalized_by(g))
    }

    /// Smallest subgroup of `ambient` containing `self` and normal in it.
    pub fn normal_closure_in(&self, ambient: &PermGroup) -> PermGroup {
        let mut gens = self.generators.clone();
        let mut chain = StabChain::new(self.degree, &gens);
        let mut i = 0;
        while i < gens.len() {
            for a in &ambient.generators {
                let c = gens[i].conjugate_by(a);
                if !chain.contains(&c) {
                    gens.push(c);
                    chain = StabChain::new(self.degree, &gens);
                }
            }
            i += 1;
        }
        Self::with_chain(self.degree, gens, chain)
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let g = &self.generators;
        let mut comms = Vec::new();
        for i in 0..g.len() {
            for j in (i + 1)..g.len() {
                let c = g[i].inverse().mul_unchecked(&g[j].inverse()).mul_unchecked(&g[i]).mul_unchecked(&g[j]);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        Self::from_generators(self.degree, comms).normal_closure_in(self)
    }

    /// A list of permutations determined by the group alone (not by its
    /// generators): for every level `i` of the chain with base `0, 1, ..` and
    /// every orbit point `p`, the lexicographically least element fixing
    /// `0..i` and sending `i` to `p`.
    pub fn canonical_signature(&self) -> Vec<Permutation> {
        let full: Vec<usize> = (0..self.degree).collect();
        let chain = self.chain_with_base(&full);
        let levels = &chain.levels;
        let mut out = Vec::new();
        for (i, lv) in levels.iter().enumerate() {
            if lv.orbit.len() == 1 {
                continue;
            }
            let mut pts = lv.orbit.clone();
            pts.sort_unstable();
            for &p in &pts {
                if p == lv.base {
                    continue;
                }
                let mut x = lv.rep(p).unwrap().clone();
                for lj in &levels[i + 1..] {
                    if lj.orbit.len() == 1 {
                        continue;
                    }
                    let q = *lj.orbit.iter().min_by_key(|&&q| x.apply(q)).unwrap();
                    x = x.mul_unchecked(lj.rep(q).unwrap());
                }
                out.push(x);
            }
        }
        out
    }

    /// Restriction to the first `degree` points; the group must leave them invariant.
    pub fn restrict(&self, degree: usize) -> Option<PermGroup> {
        let gens: Option<Vec<Permutation>> = self.generators.iter().map(|g| g.restrict(degree)).collect();
        gens.map(|g| Self::from_generators(degree, g))
    }
}
