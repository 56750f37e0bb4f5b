use alloc::vec::Vec;

use hashbrown::HashMap;

use super::chain::StabChain;
use super::group::PermGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// The action of `G` on the left cosets of `H`.
#[derive(Clone, Debug)]
pub struct CosetActionResult {
    pub image: PermGroup,
    /// `transversal[i]` is the least element of the `i`-th coset.
    pub transversal: Vec<Permutation>,
    /// The core of `H` in `G`.
    pub kernel: PermGroup,
    pub point_of_identity: usize,
    index: HashMap<Permutation, usize>,
    h_chain: StabChain,
}

impl CosetActionResult {
    pub fn degree(&self) -> usize {
        self.transversal.len()
    }

    /// Index of the coset `gH`.
    pub fn coset_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(&least_in_coset(g, &self.h_chain)).copied()
    }

    /// The permutation of cosets induced by `g`.
    pub fn image_of(&self, g: &Permutation) -> Option<Permutation> {
        let images: Option<Vec<usize>> = self
            .transversal
            .iter()
            .map(|t| self.coset_of(&g.mul_unchecked(t)))
            .collect();
        Permutation::from_images(&images?).ok()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel.is_trivial()
    }
}

/// Least element of `gH`, using a chain of `H` with base `0, 1, ..`.
pub(crate) fn least_in_coset(g: &Permutation, h_chain: &StabChain) -> Permutation {
    let mut x = g.clone();
    for lv in &h_chain.levels {
        if lv.orbit.len() == 1 {
            continue;
        }
        let q = *lv.orbit.iter().min_by_key(|&&q| x.apply(q)).unwrap();
        if q != lv.base {
            x = x.mul_unchecked(lv.rep(q).unwrap());
        }
    }
    x
}

pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<CosetActionResult> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: h.degree(),
        });
    }
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    let n = g.degree();
    let full: Vec<usize> = (0..n).collect();
    let h_chain = h.chain_with_base(&full);

    let start = least_in_coset(&g.identity(), &h_chain);
    let mut transversal = alloc::vec![start.clone()];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(start, 0);
    let mut actions: Vec<Vec<usize>> = alloc::vec![Vec::new(); g.generators().len()];
    let mut i = 0;
    while i < transversal.len() {
        for (k, s) in g.generators().iter().enumerate() {
            let key = least_in_coset(&s.mul_unchecked(&transversal[i]), &h_chain);
            let j = match index.get(&key) {
                Some(&j) => j,
                None => {
                    let j = transversal.len();
                    index.insert(key.clone(), j);
                    transversal.push(key);
                    j
                }
            };
            actions[k].push(j);
        }
        i += 1;
    }
    let m = transversal.len();
    let image_gens: Vec<Permutation> = actions
        .iter()
        .map(|a| Permutation::from_images(a).expect("coset action is a permutation"))
        .collect();

    let diag: Vec<Permutation> = g
        .generators()
        .iter()
        .zip(&image_gens)
        .map(|(s, t)| s.direct_sum(t))
        .collect();
    let second: Vec<usize> = (n..n + m).collect();
    let dchain = StabChain::with_base_prefix(n + m, &diag, &second);
    let kernel_gens: Vec<Permutation> = dchain
        .stabilizer_generators(m)
        .iter()
        .map(|d| d.block(0, n).expect("kernel fixes the second block"))
        .collect();
    let image = PermGroup::from_generators(m, image_gens);
    Ok(CosetActionResult {
        image,
        transversal,
        kernel: PermGroup::from_generators(n, kernel_gens),
        point_of_identity: 0,
        index,
        h_chain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::{normal_subgroups, parse_generator_list};

    fn grp(s: &str, n: usize) -> PermGroup {
        PermGroup::new(n, parse_generator_list(s, n).unwrap()).unwrap()
    }

    #[test]
    fn natural_action_from_point_stabilizer() {
        let s4 = PermGroup::symmetric(4);
        let st = s4.stabilizer(3);
        let act = coset_action(&s4, &st).unwrap();
        assert_eq!(act.degree(), 4);
        assert_eq!(act.image.order(), 24);
        assert!(act.image.is_transitive());
        assert!(act.is_faithful());
        assert!(act.image.stabilizer(act.point_of_identity).order() == 6);
    }

    #[test]
    fn degree_eight_action_of_s4() {
        let s4 = PermGroup::symmetric(4);
        let c3 = grp("(1,2,3)", 4);
        let act = coset_action(&s4, &c3).unwrap();
        assert_eq!(act.degree(), 8);
        assert_eq!(act.image.order(), 24);
        assert!(act.image.is_transitive());
        for g in s4.generators() {
            assert_eq!(&act.image_of(g).unwrap(), &act.image.generators()[s4.generators().iter().position(|x| x == g).unwrap()]);
        }
    }

    #[test]
    fn degenerate_and_unfaithful_actions() {
        let s4 = PermGroup::symmetric(4);
        let act = coset_action(&s4, &s4).unwrap();
        assert_eq!(act.degree(), 1);
        assert_eq!(act.kernel.order(), 24);

        // D8 contains the normal Klein group, so the action on its 3 cosets has kernel V4
        let d8 = grp("(1,2,3,4);(1,3)", 4);
        let act = coset_action(&s4, &d8).unwrap();
        assert_eq!(act.degree(), 3);
        assert_eq!(act.kernel.order(), 4);
        assert_eq!(act.image.order(), 6);
    }

    #[test]
    fn kernel_is_the_core() {
        let s4 = PermGroup::symmetric(4);
        let normals = normal_subgroups(&s4).unwrap();
        for h in [grp("(1,2)(3,4)", 4), grp("(1,2)(3,4);(1,3)(2,4)", 4), grp("(1,2,3,4);(1,3)", 4), grp("(1,2,3);(1,2)", 4)] {
            let k = coset_action(&s4, &h).unwrap().kernel;
            let core = normals
                .iter()
                .filter(|n| n.is_subgroup_of(&h))
                .max_by_key(|n| n.order())
                .unwrap();
            assert!(k.same_group(core));
        }
    }
}
