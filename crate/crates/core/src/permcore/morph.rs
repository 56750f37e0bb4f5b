//! Homomorphisms given by generator images, and backtrack searches for them.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use super::chain::StabChain;
use super::fingerprint::group_fingerprint;
use super::group::{PermGroup, ELEMENT_BOUND};
use super::perm::Permutation;
use super::search::Budget;
use crate::error::{Error, Result};

/// Largest target group whose elements are listed for candidate images.
pub const TARGET_ELEMENT_BOUND: u64 = 2_000_000;

/// A homomorphism from `<generators>` determined by generator images. The
/// graph `{(g, phi(g))}` is kept as a stabilizer chain, which both certifies
/// the map and evaluates it.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    generators: Vec<Permutation>,
    images: Vec<Permutation>,
    source_order: u64,
    graph: StabChain,
}

impl Homomorphism {
    /// Fails unless the generator images extend to a homomorphism.
    pub fn new(generators: Vec<Permutation>, images: Vec<Permutation>) -> Result<Self> {
        if generators.len() != images.len() || generators.is_empty() {
            return Err(Error::Verification("generator and image lists differ in length".into()));
        }
        let n = generators[0].degree();
        let m = images[0].degree();
        let source_order = StabChain::new(n, &generators).order();
        let h = Self::build(generators, images, n, m, source_order);
        if h.graph.order() != source_order {
            return Err(Error::Verification("generator images do not define a homomorphism".into()));
        }
        Ok(h)
    }

    fn build(generators: Vec<Permutation>, images: Vec<Permutation>, n: usize, m: usize, source_order: u64) -> Self {
        let diag: Vec<Permutation> = generators.iter().zip(&images).map(|(g, t)| g.direct_sum(t)).collect();
        let prefix: Vec<usize> = (0..n).collect();
        let graph = StabChain::with_base_prefix(n + m, &diag, &prefix);
        Homomorphism {
            generators,
            images,
            source_order,
            graph,
        }
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    pub fn source_degree(&self) -> usize {
        self.generators[0].degree()
    }

    pub fn target_degree(&self) -> usize {
        self.images[0].degree()
    }

    /// `phi(g)`, or `None` if `g` is outside the source group.
    pub fn apply(&self, g: &Permutation) -> Option<Permutation> {
        let n = self.source_degree();
        if g.degree() != n {
            return None;
        }
        let mut residue = g.clone();
        let mut acc = Permutation::identity(n + self.target_degree());
        for lv in &self.graph.levels {
            if lv.base >= n {
                break;
            }
            let p = residue.apply(lv.base);
            let u = lv.rep(p)?;
            let uf = u.block(0, n).unwrap();
            residue = uf.inverse().mul_unchecked(&residue);
            acc = acc.mul_unchecked(u);
        }
        if !residue.is_identity() {
            return None;
        }
        acc.block(n, self.target_degree())
    }

    pub fn image(&self) -> PermGroup {
        PermGroup::from_generators(self.target_degree(), self.images.clone())
    }

    pub fn is_injective(&self) -> bool {
        self.image().order() == self.source_order
    }
}

#[derive(Clone, Debug, Default)]
pub struct MonomorphismConstraints {
    /// Allow maps with a nontrivial kernel.
    pub allow_kernel: bool,
    pub transitive_image: bool,
    /// `(H, p)`: the image of `H` must be exactly the stabilizer of `p` in the image.
    pub stabilizer: Option<(PermGroup, usize)>,
    /// Stop after this many results.
    pub limit: Option<usize>,
}

/// A generating set chosen deterministically, preferring elements of large order.
pub fn small_generating_set(g: &PermGroup) -> Vec<Permutation> {
    let order = g.order();
    if order == 1 {
        return Vec::new();
    }
    if order > ELEMENT_BOUND {
        return g.generators().to_vec();
    }
    let mut elements = g.elements_unbounded();
    elements.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.cmp(b)));
    let n = g.degree();
    let x = elements[0].clone();
    if x.order() == order {
        return vec![x];
    }
    for y in elements.iter().skip(1).take(400) {
        if StabChain::new(n, &[x.clone(), y.clone()]).order() == order {
            return vec![x, y.clone()];
        }
    }
    let mut gens = vec![x];
    let mut chain = StabChain::new(n, &gens);
    for y in &elements {
        if chain.order() == order {
            break;
        }
        if !chain.contains(y) {
            gens.push(y.clone());
            chain = StabChain::new(n, &gens);
        }
    }
    gens
}

/// Orbit representatives of `items` under conjugation by `group`; `items`
/// must be closed under that conjugation.
fn conjugation_orbit_reps(items: &[Permutation], group: &PermGroup) -> Vec<Permutation> {
    let index: HashMap<&Permutation, usize> = items.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut seen = vec![false; items.len()];
    let mut reps = Vec::new();
    for start in 0..items.len() {
        if seen[start] {
            continue;
        }
        reps.push(items[start].clone());
        seen[start] = true;
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for s in group.generators() {
                if let Some(&j) = index.get(&items[i].conjugate_by(s)) {
                    if !seen[j] {
                        seen[j] = true;
                        queue.push(j);
                    }
                }
            }
        }
    }
    reps
}

fn target_elements(target: &PermGroup) -> Result<Vec<Permutation>> {
    let order = target.order();
    if order > TARGET_ELEMENT_BOUND {
        return Err(Error::OrderBound {
            order,
            bound: TARGET_ELEMENT_BOUND,
        });
    }
    Ok(target.elements_unbounded())
}

struct WordCheck {
    left: usize,
    inverse: bool,
    order: u64,
}

fn word_checks(gens: &[Permutation], j: usize) -> Vec<WordCheck> {
    let mut out = Vec::new();
    for a in 0..j {
        for inverse in [false, true] {
            let r = if inverse { gens[j].inverse() } else { gens[j].clone() };
            out.push(WordCheck {
                left: a,
                inverse,
                order: gens[a].mul_unchecked(&r).order(),
            });
        }
    }
    out
}

/// Monomorphisms (or homomorphisms, with `allow_kernel`) from `g` into
/// `target`, one for each conjugacy class of image under the equivalence
/// group: `target` itself, or the stabilizer of the designated point when a
/// stabilizer constraint is given.
pub fn find_monomorphisms(
    g: &PermGroup,
    target: &PermGroup,
    constraints: &MonomorphismConstraints,
    budget: &Budget,
) -> Result<Vec<Homomorphism>> {
    if !constraints.allow_kernel && !target.order().is_multiple_of(g.order()) {
        return Ok(Vec::new());
    }
    let m = target.degree();
    let gens = small_generating_set(g);
    if gens.is_empty() {
        let id = Permutation::identity(g.degree());
        return Ok(vec![Homomorphism::new(vec![id], vec![Permutation::identity(m)])?]);
    }
    let equivalence = match &constraints.stabilizer {
        Some((_, p)) => target.stabilizer(*p),
        None => target.clone(),
    };
    let elements = target_elements(target)?;
    let prefix_orders: Vec<u64> = (1..=gens.len()).map(|j| StabChain::new(g.degree(), &gens[..j]).order()).collect();
    let checks: Vec<Vec<WordCheck>> = (0..gens.len()).map(|j| word_checks(&gens, j)).collect();
    let fits = |want: u64, have: u64| if constraints.allow_kernel { want.is_multiple_of(have) } else { want == have };
    let candidates: Vec<Vec<Permutation>> = gens
        .iter()
        .map(|s| {
            let o = s.order();
            elements.iter().filter(|e| fits(o, e.order())).cloned().collect()
        })
        .collect();
    let first = conjugation_orbit_reps(&candidates[0], &equivalence);

    let mut search = MonoSearch {
        g,
        gens: &gens,
        prefix_orders: &prefix_orders,
        checks: &checks,
        candidates: &candidates,
        constraints,
        equivalence: &equivalence,
        budget,
        seen: HashSet::new(),
        found: Vec::new(),
        fits: &fits,
    };
    let mut chosen: Vec<Permutation> = Vec::new();
    for t in first {
        chosen.push(t);
        let done = search.descend(&mut chosen)?;
        chosen.pop();
        if done {
            break;
        }
    }
    Ok(search.found)
}

struct MonoSearch<'a, F: Fn(u64, u64) -> bool> {
    g: &'a PermGroup,
    gens: &'a [Permutation],
    prefix_orders: &'a [u64],
    checks: &'a [Vec<WordCheck>],
    candidates: &'a [Vec<Permutation>],
    constraints: &'a MonomorphismConstraints,
    equivalence: &'a PermGroup,
    budget: &'a Budget,
    seen: HashSet<Vec<Permutation>>,
    found: Vec<Homomorphism>,
    fits: &'a F,
}

impl<F: Fn(u64, u64) -> bool> MonoSearch<'_, F> {
    /// Returns true once the result limit is reached.
    fn descend(&mut self, chosen: &mut Vec<Permutation>) -> Result<bool> {
        self.budget.tick()?;
        let j = chosen.len() - 1;
        for c in &self.checks[j] {
            let t = &chosen[j];
            let r = if c.inverse { t.inverse() } else { t.clone() };
            if !(self.fits)(c.order, chosen[c.left].mul_unchecked(&r).order()) {
                return Ok(false);
            }
        }
        let n = self.g.degree();
        let m = chosen[0].degree();
        let hom = Homomorphism::build(self.gens[..=j].to_vec(), chosen.clone(), n, m, self.prefix_orders[j]);
        if hom.graph.order() != self.prefix_orders[j] {
            return Ok(false);
        }
        if j + 1 < self.gens.len() {
            for t in &self.candidates[j + 1] {
                chosen.push(t.clone());
                let done = self.descend(chosen)?;
                chosen.pop();
                if done {
                    return Ok(true);
                }
            }
            return Ok(false);
        }
        self.accept(hom)
    }

    fn accept(&mut self, hom: Homomorphism) -> Result<bool> {
        let image = hom.image();
        if !self.constraints.allow_kernel && image.order() != self.g.order() {
            return Ok(false);
        }
        if self.constraints.transitive_image && !image.is_transitive() {
            return Ok(false);
        }
        if let Some((h, p)) = &self.constraints.stabilizer {
            let mapped: Vec<Permutation> = h.generators().iter().filter_map(|x| hom.apply(x)).collect();
            let mapped = PermGroup::from_generators(image.degree(), mapped);
            if !mapped.same_group(&image.stabilizer(*p)) {
                return Ok(false);
            }
        }
        let sig = image.canonical_signature();
        if self.seen.contains(&sig) {
            return Ok(false);
        }
        // record the whole conjugacy class of the image
        let mut queue = vec![image];
        self.seen.insert(sig);
        while let Some(s) = queue.pop() {
            for e in self.equivalence.generators() {
                let c = s.conjugate(e);
                let cs = c.canonical_signature();
                if self.seen.insert(cs) {
                    queue.push(c);
                }
            }
        }
        self.found.push(hom);
        Ok(self.constraints.limit.is_some_and(|l| self.found.len() >= l))
    }
}

/// Elements of a group bucketed by cycle type, for repeated embedding searches.
#[derive(Clone, Debug)]
pub struct ElementIndex {
    by_type: HashMap<Vec<usize>, Vec<Permutation>>,
}

impl ElementIndex {
    pub fn new(group: &PermGroup) -> Result<Self> {
        let mut by_type: HashMap<Vec<usize>, Vec<Permutation>> = HashMap::new();
        for e in target_elements(group)? {
            by_type.entry(e.cycle_type()).or_default().push(e);
        }
        for v in by_type.values_mut() {
            v.sort_unstable();
        }
        Ok(ElementIndex { by_type })
    }

    pub fn with_cycle_type(&self, cycle_type: &[usize]) -> &[Permutation] {
        self.by_type.get(cycle_type).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn has_cycle_type(&self, cycle_type: &[usize]) -> bool {
        self.by_type.contains_key(cycle_type)
    }
}

/// Bijections `b` of points with `b(0) = 0` and `b x b^-1` in `target` for
/// every `x` in the transitive group `action`, up to composition with
/// elements of `symmetry` (a subgroup of the stabilizer of 0 in `target`).
/// Each `b` is returned as a permutation.
pub fn transitive_embeddings(
    action: &PermGroup,
    target: &PermGroup,
    index: &ElementIndex,
    symmetry: &PermGroup,
    budget: &Budget,
) -> Result<Vec<Permutation>> {
    let n = action.degree();
    if target.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: target.degree(),
        });
    }
    if !action.is_transitive() {
        return Err(Error::Verification("action is not transitive".into()));
    }
    if !target.order().is_multiple_of(action.order()) {
        return Ok(Vec::new());
    }
    let gens = small_generating_set(action);
    if gens.is_empty() {
        return Ok(vec![Permutation::identity(n)]);
    }
    let cands: Vec<&[Permutation]> = gens.iter().map(|s| index.with_cycle_type(&s.cycle_type())).collect();
    if cands.iter().any(|c| c.is_empty()) {
        return Ok(Vec::new());
    }
    let first = conjugation_orbit_reps(cands[0], symmetry);
    let mut out = Vec::new();
    let mut chosen: Vec<Permutation> = Vec::new();
    for t in first {
        chosen.push(t);
        embed_step(&gens, &cands, target, &mut chosen, budget, &mut out)?;
        chosen.pop();
    }
    Ok(out)
}

/// Extends `b` along the Schreier graph of `gens[..len]`, checking
/// `b(s(x)) = t(b(x))`.
fn extend_bijection(gens: &[Permutation], images: &[Permutation]) -> Option<Vec<usize>> {
    let n = gens[0].degree();
    let mut b = vec![usize::MAX; n];
    let mut used = vec![false; n];
    b[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (s, t) in gens.iter().zip(images) {
            let y = s.apply(x);
            let by = t.apply(b[x]);
            if b[y] == usize::MAX {
                if used[by] {
                    return None;
                }
                b[y] = by;
                used[by] = true;
                queue.push(y);
            } else if b[y] != by {
                return None;
            }
        }
        i += 1;
    }
    Some(b)
}

fn embed_step(
    gens: &[Permutation],
    cands: &[&[Permutation]],
    target: &PermGroup,
    chosen: &mut Vec<Permutation>,
    budget: &Budget,
    out: &mut Vec<Permutation>,
) -> Result<()> {
    budget.tick()?;
    let j = chosen.len();
    let Some(b) = extend_bijection(&gens[..j], chosen) else {
        return Ok(());
    };
    if b.iter().all(|&x| x != usize::MAX) {
        let bp = Permutation::from_images(&b).expect("bijection");
        let bi = bp.inverse();
        let all_in = gens[j..]
            .iter()
            .all(|s| target.contains(&bp.mul_unchecked(&s.mul_unchecked(&bi))));
        if all_in {
            out.push(bp);
        }
        return Ok(());
    }
    for t in cands[j] {
        chosen.push(t.clone());
        embed_step(gens, cands, target, chosen, budget, out)?;
        chosen.pop();
    }
    Ok(())
}

/// An isomorphism `g -> h` when one exists.
pub fn is_isomorphic(g: &PermGroup, h: &PermGroup) -> Result<Option<Homomorphism>> {
    is_isomorphic_with_budget(g, h, &Budget::default())
}

pub fn is_isomorphic_with_budget(g: &PermGroup, h: &PermGroup, budget: &Budget) -> Result<Option<Homomorphism>> {
    if g.order() != h.order() {
        return Ok(None);
    }
    if !group_fingerprint(g)?.abstractly_equal(&group_fingerprint(h)?) {
        return Ok(None);
    }
    let constraints = MonomorphismConstraints {
        limit: Some(1),
        ..Default::default()
    };
    let found = find_monomorphisms(g, h, &constraints, budget)?;
    Ok(found.into_iter().next())
}
