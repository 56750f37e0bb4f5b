//! Building a Hopf Galois structure for a tower `G'' <= G' <= G` out of
//! structures for the two steps.

use alloc::format;
use alloc::vec::Vec;

use super::problem::ExtensionProblem;
use crate::error::{Error, Result};
use crate::permcore::{Budget, Homomorphism, PermGroup, Permutation, DEFAULT_BUDGET};

/// `(sigma, tau)` acting on pairs, with `(i, j)` stored as `i * r + j`.
pub fn product_embedding(sigma: &Permutation, tau: &Permutation) -> Permutation {
    let r = tau.degree();
    let images: Vec<usize> = (0..sigma.degree() * r)
        .map(|x| sigma.apply(x / r) * r + tau.apply(x % r))
        .collect();
    Permutation::from_images(&images).expect("product of permutations")
}

#[derive(Clone, Debug)]
pub struct Composition {
    /// `G` acting on pairs `(i, j)`, that is on the cosets `x_i y_j G''`.
    pub action: Homomorphism,
    pub image: PermGroup,
    /// `N x R` embedded in `Sym(n r)`.
    pub regular: PermGroup,
    /// `c_i` in the image of `G'` on `G'/G''`, with `c_0 = 1`: the pair
    /// `(i, j)` stands for the coset `x_i y_{c_i(j)} G''`. Replacing `x_i`
    /// by `x_i g'_i` relabels block `i` this way, and with the plain
    /// transversal `N x R` need not be normalized.
    pub block_relabelling: Vec<Permutation>,
}

/// Given a regular `N <= Sym(G/G')` normalized by `G` and a regular
/// `R <= Sym(G'/G'')` normalized by `G'`, builds the action of `G` on
/// `G/G''` through transversals and checks that `N x R` is regular and
/// normalized by it. Both inputs are checked first; a failure names the
/// generator that does not normalize.
///
/// `n_wit` and `r_wit` use the point labels of `ExtensionProblem::new(G, G')`
/// and `ExtensionProblem::new(G', G'')`.
///
/// The transversal `x_i` is re-chosen inside each coset `x_i G'` until
/// `N x R` is normalized; a search that finds no such choice is an error.
pub fn transitivity_compose(g: &PermGroup, gp: &PermGroup, gpp: &PermGroup, n_wit: &PermGroup, r_wit: &PermGroup) -> Result<Composition> {
    transitivity_compose_with_budget(g, gp, gpp, n_wit, r_wit, &Budget::new(DEFAULT_BUDGET))
}

pub fn transitivity_compose_with_budget(
    g: &PermGroup,
    gp: &PermGroup,
    gpp: &PermGroup,
    n_wit: &PermGroup,
    r_wit: &PermGroup,
    budget: &Budget,
) -> Result<Composition> {
    if !gpp.is_subgroup_of(gp) || !gp.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    let phi = ExtensionProblem::new(g.clone(), gp.clone())?;
    let psi = ExtensionProblem::new(gp.clone(), gpp.clone())?;
    let (n, r) = (phi.degree(), psi.degree());
    check_regular_normalized(n_wit, n, phi.action(), "N")?;
    check_regular_normalized(r_wit, r, psi.action(), "R")?;

    let xs = phi.transversal();
    let ys = psi.transversal();
    let mut images = Vec::with_capacity(g.generators().len());
    for s in g.generators() {
        let mut img = alloc::vec![0usize; n * r];
        for (i, x) in xs.iter().enumerate() {
            let sx = s.mul_unchecked(x);
            let i2 = phi.coset_index(&sx).ok_or(Error::NotMember)?;
            // s x_i = x_i2 s' with s' in G'
            let s1 = xs[i2].inverse().mul_unchecked(&sx);
            for (j, y) in ys.iter().enumerate() {
                let j2 = psi.coset_index(&s1.mul_unchecked(y)).ok_or(Error::NotMember)?;
                img[i * r + j] = i2 * r + j2;
            }
        }
        images.push(Permutation::from_images(&img)?);
    }
    let plain = Homomorphism::new(g.generators().to_vec(), images.clone())?;
    let image = plain.image();
    if !image.is_transitive() {
        return Err(Error::Verification("action on pairs is not transitive".into()));
    }
    let stab: Vec<Permutation> = gpp
        .generators()
        .iter()
        .map(|x| plain.apply(x).ok_or(Error::NotMember))
        .collect::<Result<_>>()?;
    if !PermGroup::new(n * r, stab)?.same_group(&image.stabilizer(0)) {
        return Err(Error::Verification("stabilizer of the base pair is not the image of G''".into()));
    }

    let id_n = Permutation::identity(n);
    let id_r = Permutation::identity(r);
    let mut gens: Vec<Permutation> = n_wit.generators().iter().map(|a| product_embedding(a, &id_r)).collect();
    gens.extend(r_wit.generators().iter().map(|b| product_embedding(&id_n, b)));
    let regular = PermGroup::new(n * r, gens)?;
    if !regular.is_regular() {
        return Err(Error::Verification("N x R is not regular".into()));
    }

    let choices = psi.action().elements()?;
    let mut pick = alloc::vec![0usize; n];
    loop {
        budget.tick()?;
        let shift: Vec<Permutation> = pick.iter().map(|&k| choices[k].clone()).collect();
        let relabel = block_map(&shift, r);
        let inv = relabel.inverse();
        let moved: Vec<Permutation> = images.iter().map(|s| inv.compose(s).and_then(|x| x.compose(&relabel))).collect::<Result<_>>()?;
        if moved.iter().all(|s| regular.is_normalized_by(s)) {
            let action = Homomorphism::new(g.generators().to_vec(), moved)?;
            let image = action.image();
            return Ok(Composition {
                action,
                image,
                regular,
                block_relabelling: shift,
            });
        }
        // odometer over blocks 1..n, block 0 stays fixed
        let Some(i) = (1..n).find(|&i| pick[i] + 1 < choices.len()) else {
            return Err(Error::Verification("no choice of transversal makes N x R normalized".into()));
        };
        pick[i] += 1;
        pick[1..i].iter_mut().for_each(|k| *k = 0);
    }
}

/// `(i, j) -> (i, c_i(j))`.
fn block_map(shift: &[Permutation], r: usize) -> Permutation {
    let images: Vec<usize> = (0..shift.len() * r).map(|x| (x / r) * r + shift[x / r].apply(x % r)).collect();
    Permutation::from_images(&images).expect("blockwise permutation")
}

fn check_regular_normalized(w: &PermGroup, degree: usize, by: &PermGroup, name: &str) -> Result<()> {
    if w.degree() != degree {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: w.degree(),
        });
    }
    if !w.is_regular() {
        return Err(Error::Hypothesis {
            reason: format!("{name} is not regular"),
            witness: None,
        });
    }
    if let Some(s) = by.generators().iter().find(|s| !w.is_normalized_by(s)) {
        return Err(Error::Hypothesis {
            reason: format!("{name} is not normalized by the action"),
            witness: Some(s.clone()),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flattening() {
        let t = Permutation::parse_cycles("(1,2)", 2).unwrap();
        let id = Permutation::identity(2);
        assert_eq!(product_embedding(&t, &id), Permutation::parse_cycles("(1,3)(2,4)", 4).unwrap());
        assert!(product_embedding(&id, &id).is_identity());
    }
}
