//! Deterministic Schreier–Sims stabilizer chains.
//!
//! Base points are taken from an optional caller-supplied prefix, then as the
//! smallest point moved by whichever generator or sifting residue needs a new
//! level. No randomness is involved, so the chain (and everything derived from
//! it) is a pure function of the generator list.

use alloc::vec;
use alloc::vec::Vec;

use super::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    /// Strong generators of the stabilizer of all earlier base points.
    pub gens: Vec<Permutation>,
    /// Orbit of `base` in discovery order.
    pub orbit: Vec<usize>,
    /// `transversal[p]` maps `base` to `p`.
    pub transversal: Vec<Option<Permutation>>,
    pub inverse: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
            inverse: vec![None; degree],
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.inverse.iter_mut().for_each(|t| *t = None);
        self.orbit.clear();
        let id = Permutation::identity(degree);
        self.transversal[self.base] = Some(id.clone());
        self.inverse[self.base] = Some(id);
        self.orbit.push(self.base);
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for s in &self.gens {
                let q = s.apply(p);
                if self.transversal[q].is_none() {
                    let u = s.mul_unchecked(self.transversal[p].as_ref().unwrap());
                    self.inverse[q] = Some(u.inverse());
                    self.transversal[q] = Some(u);
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }

    /// Extends the orbit with the images under a newly added generator,
    /// keeping existing transversal elements.
    fn extend_with(&mut self, g: Permutation) {
        self.gens.push(g);
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for s in &self.gens {
                let q = s.apply(p);
                if self.transversal[q].is_none() {
                    let u = s.mul_unchecked(self.transversal[p].as_ref().unwrap());
                    self.inverse[q] = Some(u.inverse());
                    self.transversal[q] = Some(u);
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }

    #[inline]
    pub fn rep(&self, p: usize) -> Option<&Permutation> {
        self.transversal[p].as_ref()
    }

    #[inline]
    pub fn rep_inverse(&self, p: usize) -> Option<&Permutation> {
        self.inverse[p].as_ref()
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        Self::with_base_prefix(degree, gens, &[])
    }

    /// Builds a chain whose base starts with `prefix` (in that order).
    pub fn with_base_prefix(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        for g in gens {
            debug_assert_eq!(g.degree(), degree);
            if g.is_identity() {
                continue;
            }
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = g.smallest_moved_point().unwrap();
                chain.levels.push(Level::new(b, degree));
            }
        }
        for i in 0..chain.levels.len() {
            let fixed: Vec<usize> = chain.levels[..i].iter().map(|l| l.base).collect();
            let level_gens: Vec<Permutation> = gens
                .iter()
                .filter(|g| !g.is_identity() && fixed.iter().all(|&b| g.apply(b) == b))
                .cloned()
                .collect();
            chain.levels[i].gens = level_gens;
            chain.levels[i].rebuild(degree);
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let level = i - 1;
            match self.find_unsifted(level) {
                None => i -= 1,
                Some((residue, stop)) => {
                    if stop == self.levels.len() {
                        let b = residue.smallest_moved_point().unwrap();
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in (level + 1)..=stop {
                        self.levels[l].extend_with(residue.clone());
                    }
                    i = stop + 1;
                }
            }
        }
    }

    /// Returns a Schreier generator of `level` that does not sift through the
    /// levels below it, together with the level where sifting stopped.
    fn find_unsifted(&self, level: usize) -> Option<(Permutation, usize)> {
        let lv = &self.levels[level];
        for &p in &lv.orbit {
            let u = lv.rep(p).unwrap();
            for s in &lv.gens {
                let q = s.apply(p);
                let schreier = lv.rep_inverse(q).unwrap().mul_unchecked(&s.mul_unchecked(u));
                if schreier.is_identity() {
                    continue;
                }
                let (residue, stop) = self.sift_from(schreier, level + 1);
                if stop < self.levels.len() || !residue.is_identity() {
                    return Some((residue, stop));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `start..`; returns the residue and the index of
    /// the level where it left the orbit (or `levels.len()` if it got through).
    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (i, lv) in self.levels.iter().enumerate().skip(start) {
            let p = g.apply(lv.base);
            match lv.rep_inverse(p) {
                None => return (g, i),
                Some(inv) => g = inv.mul_unchecked(&g),
            }
        }
        let n = self.levels.len();
        (g, n)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().fold(1u64, |acc, l| {
            acc.checked_mul(l.orbit.len() as u64)
                .expect("group order overflows u64")
        })
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, stop) = self.sift_from(g.clone(), 0);
        stop == self.levels.len() && residue.is_identity()
    }

    /// Strong generators of the stabilizer of the first `depth` base points.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        match self.levels.get(depth) {
            Some(l) => l.gens.clone(),
            None => Vec::new(),
        }
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Visits every group element exactly once, in a fixed order.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation)) {
        let id = Permutation::identity(self.degree);
        self.walk(0, &id, &mut f);
    }

    fn walk(&self, level: usize, prefix: &Permutation, f: &mut impl FnMut(&Permutation)) {
        if level == self.levels.len() {
            f(prefix);
            return;
        }
        let lv = &self.levels[level];
        for &p in &lv.orbit {
            let next = prefix.mul_unchecked(lv.rep(p).unwrap());
            self.walk(level + 1, &next, f);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=9usize {
            let cyc: Vec<usize> = (1..n).chain(core::iter::once(0)).collect();
            let gens = [p("(1,2)", n), Permutation::from_images(&cyc).unwrap()];
            let chain = StabChain::new(n, &gens);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(chain.order(), fact);
        }
    }

    #[test]
    fn base_prefix_is_respected() {
        let gens = [p("(1,2,3,4,5)", 5), p("(1,2)", 5)];
        let chain = StabChain::with_base_prefix(5, &gens, &[4, 2]);
        assert_eq!(&chain.base()[..2], &[4, 2]);
        assert_eq!(chain.order(), 120);
        // stabilizer of points 5 and 3 is S3 on {1,2,4}
        let stab = StabChain::new(5, &chain.stabilizer_generators(2));
        assert_eq!(stab.order(), 6);
    }

    #[test]
    fn membership() {
        let gens = [p("(1,2,3)", 4), p("(2,3,4)", 4)];
        let chain = StabChain::new(4, &gens);
        assert_eq!(chain.order(), 12);
        assert!(chain.contains(&p("(1,2)(3,4)", 4)));
        assert!(!chain.contains(&p("(1,2)", 4)));
        let mut count = 0;
        chain.for_each_element(|g| {
            assert!(!g.is_odd());
            count += 1;
        });
        assert_eq!(count, 12);
    }
}
