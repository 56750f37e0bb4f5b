use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::permcore::{coset_action, CosetActionResult, PermGroup, Permutation};

/// A pair `G' <= G`, read as the Galois groups of the closure over the base
/// and over the extension. The degree is the index `[G : G']`.
///
/// When `G'` contains a nontrivial normal subgroup of `G` the action on
/// cosets is not faithful; everything downstream then works with the image
/// of that action, and [`closure_shrank`](Self::closure_shrank) is set.
#[derive(Clone, Debug)]
pub struct ExtensionProblem {
    group: PermGroup,
    subgroup: PermGroup,
    /// `None` when `G` is transitive and `G'` is the stabilizer of 0, so the
    /// natural action already is the coset action.
    coset: Option<CosetActionResult>,
    action: PermGroup,
    stabilizer: PermGroup,
    core: PermGroup,
}

impl ExtensionProblem {
    pub fn new(group: PermGroup, subgroup: PermGroup) -> Result<Self> {
        if group.degree() != subgroup.degree() {
            return Err(Error::DegreeMismatch {
                expected: group.degree(),
                found: subgroup.degree(),
            });
        }
        if !subgroup.is_subgroup_of(&group) {
            return Err(Error::NotSubgroup);
        }
        if group.is_transitive() && subgroup.same_group(&group.stabilizer(0)) {
            return Ok(Self::natural(group));
        }
        let coset = coset_action(&group, &subgroup)?;
        let action = coset.image.clone();
        let stabilizer = action.stabilizer(coset.point_of_identity);
        let core = coset.kernel.clone();
        Ok(ExtensionProblem {
            group,
            subgroup,
            coset: Some(coset),
            action,
            stabilizer,
            core,
        })
    }

    /// A transitive group with `G'` the stabilizer of point 0.
    pub fn from_transitive(group: PermGroup) -> Result<Self> {
        if !group.is_transitive() {
            return Err(Error::Hypothesis {
                reason: "group is not transitive".into(),
                witness: None,
            });
        }
        Ok(Self::natural(group))
    }

    fn natural(group: PermGroup) -> Self {
        let stabilizer = group.stabilizer(0);
        let core = PermGroup::trivial(group.degree());
        ExtensionProblem {
            subgroup: stabilizer.clone(),
            action: group.clone(),
            group,
            coset: None,
            stabilizer,
            core,
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    pub fn degree(&self) -> usize {
        self.action.degree()
    }

    /// The image `lambda(G)` acting on cosets, with the coset of `G'` as point 0.
    pub fn action(&self) -> &PermGroup {
        &self.action
    }

    /// The stabilizer of point 0 in [`action`](Self::action).
    pub fn action_stabilizer(&self) -> &PermGroup {
        &self.stabilizer
    }

    pub fn lambda(&self, g: &Permutation) -> Option<Permutation> {
        match &self.coset {
            Some(c) => c.image_of(g),
            None => self.group.contains(g).then(|| g.clone()),
        }
    }

    /// Index of the point `g G'`, or `None` if `g` is not in `G`.
    pub fn coset_index(&self, g: &Permutation) -> Option<usize> {
        match &self.coset {
            Some(c) => c.coset_of(g),
            None => self.group.contains(g).then(|| g.apply(0)),
        }
    }

    /// `x_i` with `x_i G'` the point `i`, and `x_0` the identity.
    pub fn transversal(&self) -> Vec<Permutation> {
        if let Some(c) = &self.coset {
            return c.transversal.clone();
        }
        let n = self.degree();
        let mut out: Vec<Option<Permutation>> = vec![None; n];
        out[0] = Some(self.group.identity());
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = out[queue[i]].clone().unwrap();
            for s in self.group.generators() {
                let y = s.apply(queue[i]);
                if out[y].is_none() {
                    out[y] = Some(s.mul_unchecked(&x));
                    queue.push(y);
                }
            }
            i += 1;
        }
        out.into_iter().map(|x| x.expect("transitive")).collect()
    }

    /// The largest normal subgroup of `G` inside `G'`.
    pub fn core(&self) -> &PermGroup {
        &self.core
    }

    pub fn closure_shrank(&self) -> bool {
        !self.core.is_trivial()
    }

    /// `(G, G')` when the action is faithful, otherwise its image and the
    /// image's point stabilizer.
    pub fn faithful_pair(&self) -> (&PermGroup, &PermGroup) {
        if self.closure_shrank() {
            (&self.action, &self.stabilizer)
        } else {
            (&self.group, &self.subgroup)
        }
    }
}
