//! Embeddings of `lambda(G)` into holomorphs, and the way back to regular
//! subgroups of `Sym(G/G')`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;

use super::problem::ExtensionProblem;
use crate::catalog::{CatalogEntry, GroupId};
use crate::error::{Error, Result};
use crate::holomorph::{Holomorph, LabelledGroup};
use crate::permcore::{group_fingerprint, is_solvable, transitive_embeddings, Budget, Homomorphism, PermGroup, Permutation};

/// Which regular representation of `N` is carried back along the point
/// bijection. Both give a regular subgroup normalized by `lambda(G)`, since
/// the holomorph normalizes the left and the right regular images alike.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transport {
    Left,
    Right,
}

/// The convention tried first by [`byott_to_regular`].
pub const TRANSPORT: Transport = Transport::Left;

/// One Hopf Galois structure, seen from the holomorph side.
#[derive(Clone, Debug)]
pub struct HGStructureWitness {
    pub n_type: GroupId,
    pub n_name: String,
    /// `beta: lambda(G) -> Hol(N)`, given on the generators of the coset
    /// action. Points of `Hol(N)` are the labels of `N`, with 0 the identity.
    pub beta: Homomorphism,
    /// The point bijection `b` with `beta(x) = b x b^-1`.
    pub bijection: Permutation,
    /// The regular subgroup of `Sym(G/G')` this structure corresponds to.
    pub alpha_image: Option<PermGroup>,
    left: PermGroup,
    right: PermGroup,
}

impl HGStructureWitness {
    /// The image `beta(lambda(G))` inside `Hol(N)`.
    pub fn beta_image(&self) -> PermGroup {
        self.beta.image()
    }
}

/// Why no embedding into `Hol(N)` can exist, found before any search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObstructionKind {
    OrderDoesNotDivide { group: u64, holomorph: u64 },
    /// `G` is not solvable but `Hol(N)` is.
    Solvability,
    /// Cycle types of `lambda(G)` that no element of `Hol(N)` has.
    CycleTypes(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub n_type: GroupId,
    pub kind: ObstructionKind,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ObstructionKind::OrderDoesNotDivide { group, holomorph } => {
                write!(f, "{}: |G| = {group} does not divide |Hol(N)| = {holomorph}", self.n_type)
            }
            ObstructionKind::Solvability => write!(f, "{}: G is not solvable and Hol(N) is", self.n_type),
            ObstructionKind::CycleTypes(types) => {
                let list: Vec<String> = types.iter().map(|t| format_cycle_type(t)).collect();
                write!(f, "{}: no element of Hol(N) has cycle type {}", self.n_type, list.join(", "))
            }
        }
    }
}

/// `(2)(2)(4)(4)`, with runs longer than two written as `(2)^27` and fixed
/// points counted at the end.
pub fn format_cycle_type(cycle_type: &[usize]) -> String {
    let mut lens: Vec<usize> = cycle_type.iter().copied().filter(|&l| l > 1).collect();
    lens.sort_unstable();
    let fixed = cycle_type.iter().filter(|&&l| l == 1).count();
    let mut out = String::new();
    let mut i = 0;
    while i < lens.len() {
        let run = lens[i..].iter().take_while(|&&l| l == lens[i]).count();
        if run > 2 {
            out.push_str(&format!("({})^{run}", lens[i]));
        } else {
            for _ in 0..run {
                out.push_str(&format!("({})", lens[i]));
            }
        }
        i += run;
    }
    if out.is_empty() {
        out.push_str("()");
    }
    if fixed > 0 {
        out.push_str(&format!(" +{fixed} fixed"));
    }
    out
}

/// Outcome of the embedding search for one `N`.
#[derive(Clone, Debug)]
pub struct ByottSearch {
    pub witnesses: Vec<HGStructureWitness>,
    pub obstruction: Option<Obstruction>,
}

/// Cheap necessary conditions for `lambda(G)` to sit in `Hol(N)`.
pub fn byott_obstruction(p: &ExtensionProblem, id: GroupId, hol: &Holomorph) -> Result<Option<Obstruction>> {
    let action = p.action();
    let kind = if !hol.order().is_multiple_of(action.order()) {
        Some(ObstructionKind::OrderDoesNotDivide {
            group: action.order(),
            holomorph: hol.order(),
        })
    } else if hol.solvable && !is_solvable(action) {
        Some(ObstructionKind::Solvability)
    } else {
        let index = hol.element_index()?;
        let missing: Vec<Vec<usize>> = group_fingerprint(action)?
            .cycle_type_multiset
            .into_iter()
            .map(|(t, _)| t)
            .filter(|t| !index.has_cycle_type(t))
            .collect();
        (!missing.is_empty()).then_some(ObstructionKind::CycleTypes(missing))
    };
    Ok(kind.map(|kind| Obstruction { n_type: id, kind }))
}

/// All embeddings of `lambda(G)` into `Hol(N)` that send `lambda(G')` onto
/// the stabilizer of the identity of `N`, one per `Hol(N)`-conjugacy class.
/// Classes are told apart by the regular subgroup each one transports to.
pub fn byott_search(p: &ExtensionProblem, entry: &CatalogEntry, budget: &Budget) -> Result<ByottSearch> {
    let n = p.degree();
    if entry.id.order != n as u64 {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: entry.id.order as usize,
        });
    }
    let hol = entry.holomorph()?;
    if let Some(ob) = byott_obstruction(p, entry.id, hol)? {
        return Ok(ByottSearch {
            witnesses: Vec::new(),
            obstruction: Some(ob),
        });
    }
    let action = p.action();
    let bijections = transitive_embeddings(action, &hol.group, hol.element_index()?, &hol.automorphisms, budget)?;
    let right = right_regular(&hol.labelled);
    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    let mut witnesses = Vec::new();
    for b in bijections {
        let bi = b.inverse();
        let images: Vec<Permutation> = action
            .generators()
            .iter()
            .map(|s| b.compose(s).and_then(|x| x.compose(&bi)))
            .collect::<Result<_>>()?;
        let beta = Homomorphism::new(action.generators().to_vec(), images)?;
        let mut w = HGStructureWitness {
            n_type: entry.id,
            n_name: entry.name.clone(),
            beta,
            bijection: b,
            alpha_image: None,
            left: hol.regular.clone(),
            right: right.clone(),
        };
        check_witness(p, &w)?;
        let alpha = byott_to_regular(p, &w)?;
        if seen.insert(alpha.canonical_signature()) {
            w.alpha_image = Some(alpha);
            witnesses.push(w);
        }
    }
    Ok(ByottSearch {
        witnesses,
        obstruction: None,
    })
}

pub fn byott_embeddings(p: &ExtensionProblem, entry: &CatalogEntry, budget: &Budget) -> Result<Vec<HGStructureWitness>> {
    Ok(byott_search(p, entry, budget)?.witnesses)
}

/// The right regular representation `x -> x n^-1` on the labels.
fn right_regular(n: &LabelledGroup) -> PermGroup {
    let m = n.order();
    let gens = n
        .generators()
        .iter()
        .map(|&g| {
            let gi = n.inverse(g);
            Permutation::from_images(&(0..m).map(|x| n.mul(x, gi)).collect::<Vec<_>>()).unwrap()
        })
        .collect();
    PermGroup::new(m, gens).unwrap()
}

/// `beta` is injective with transitive image and `beta(lambda(G'))` is the
/// whole stabilizer of 0 in the image.
fn check_witness(p: &ExtensionProblem, w: &HGStructureWitness) -> Result<()> {
    let image = w.beta.image();
    if image.order() != p.action().order() || !image.is_transitive() {
        return Err(Error::Verification(format!("embedding into Hol{} is not a transitive monomorphism", w.n_type)));
    }
    let mapped: Vec<Permutation> = p
        .action_stabilizer()
        .generators()
        .iter()
        .map(|x| w.beta.apply(x).ok_or(Error::NotMember))
        .collect::<Result<_>>()?;
    let mapped = PermGroup::new(image.degree(), mapped)?;
    if !mapped.same_group(&image.stabilizer(0)) {
        return Err(Error::Verification(format!("embedding into Hol{} misses the point stabilizer", w.n_type)));
    }
    Ok(())
}

/// The regular subgroup of `Sym(G/G')` matching `w`. The bijection is
/// rebuilt from `beta` alone by `x G' -> beta(x)(e)`; the result must be
/// regular and normalized by `lambda(G)`, otherwise this is an error.
pub fn byott_to_regular(p: &ExtensionProblem, w: &HGStructureWitness) -> Result<PermGroup> {
    let order = [TRANSPORT, if TRANSPORT == Transport::Left { Transport::Right } else { Transport::Left }];
    let mut last = None;
    for t in order {
        match transport(p, w, t) {
            Ok(r) => return Ok(r),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap())
}

pub fn transport(p: &ExtensionProblem, w: &HGStructureWitness, t: Transport) -> Result<PermGroup> {
    let action = p.action();
    let n = action.degree();
    let mut b = vec![usize::MAX; n];
    let mut used = vec![false; n];
    b[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for s in action.generators() {
            let bs = w.beta.apply(s).ok_or(Error::NotMember)?;
            let (y, by) = (s.apply(x), bs.apply(b[x]));
            if b[y] == usize::MAX {
                if used[by] {
                    return Err(Error::Verification("point map built from beta is not injective".into()));
                }
                b[y] = by;
                used[by] = true;
                queue.push(y);
            } else if b[y] != by {
                return Err(Error::Verification("point map built from beta is not well defined".into()));
            }
        }
        i += 1;
    }
    let b = Permutation::from_images(&b)?;
    let bi = b.inverse();
    let source = match t {
        Transport::Left => &w.left,
        Transport::Right => &w.right,
    };
    let gens = source
        .generators()
        .iter()
        .map(|r| bi.compose(r).and_then(|x| x.compose(&b)))
        .collect::<Result<Vec<_>>>()?;
    let r = PermGroup::new(n, gens)?;
    if !r.is_regular() {
        return Err(Error::Verification("transported subgroup is not regular".into()));
    }
    if let Some(s) = action.generators().iter().find(|s| !r.is_normalized_by(s)) {
        return Err(Error::Hypothesis {
            reason: "transported subgroup is not normalized by lambda(G)".into(),
            witness: Some(s.clone()),
        });
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_type_text() {
        assert_eq!(format_cycle_type(&[4, 4, 2, 2]), "(2)(2)(4)(4)");
        let mut t = vec![2; 27];
        t.extend([1; 6]);
        assert_eq!(format_cycle_type(&t), "(2)^27 +6 fixed");
    }
}
