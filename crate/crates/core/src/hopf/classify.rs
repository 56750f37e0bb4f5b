use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;

use super::byott::{byott_search, HGStructureWitness, Obstruction};
use super::oracle::{gp_oracle, is_prime, oracle_applies, ORACLE_PRIME_BOUND};
use super::problem::ExtensionProblem;
use crate::catalog::{is_supported_order, Catalog, GroupId};
use crate::error::{Error, Result};
use crate::permcore::{is_solvable, normal_subgroups, subgroup_classes, Budget, PermGroup, SubgroupClass, DEFAULT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UndecidedReason {
    Budget,
    OutOfCatalog,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Galois,
    AlmostClassicallyGalois,
    HopfGaloisNotAcg,
    NotHopfGalois,
    Undecided(UndecidedReason),
}

impl Verdict {
    /// `None` when undecided.
    pub fn is_hopf_galois(self) -> Option<bool> {
        match self {
            Verdict::Galois | Verdict::AlmostClassicallyGalois | Verdict::HopfGaloisNotAcg => Some(true),
            Verdict::NotHopfGalois => Some(false),
            Verdict::Undecided(_) => None,
        }
    }

    pub fn is_undecided(self) -> bool {
        matches!(self, Verdict::Undecided(_))
    }

    /// Stable machine-readable name.
    pub fn code(self) -> &'static str {
        match self {
            Verdict::Galois => "galois",
            Verdict::AlmostClassicallyGalois => "acg",
            Verdict::HopfGaloisNotAcg => "hg-not-acg",
            Verdict::NotHopfGalois => "not-hg",
            Verdict::Undecided(UndecidedReason::Budget) => "undecided-budget",
            Verdict::Undecided(UndecidedReason::OutOfCatalog) => "undecided-out-of-catalog",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Galois => "Galois",
            Verdict::AlmostClassicallyGalois => "almost classically Galois",
            Verdict::HopfGaloisNotAcg => "Hopf Galois, not almost classically Galois",
            Verdict::NotHopfGalois => "not Hopf Galois",
            Verdict::Undecided(UndecidedReason::Budget) => "undecided (search budget exhausted)",
            Verdict::Undecided(UndecidedReason::OutOfCatalog) => "undecided (degree outside the catalog)",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Search nodes allowed per group `N`.
    pub budget: u64,
    /// Also search holomorphs when a normal complement already settles the
    /// verdict.
    pub structures_when_acg: bool,
    /// Run the direct enumeration when the degree allows it.
    pub run_oracle: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            budget: DEFAULT_BUDGET,
            structures_when_acg: false,
            run_oracle: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct HGClassification {
    pub verdict: Verdict,
    pub degree: usize,
    pub witnesses: Vec<HGStructureWitness>,
    pub normal_complements: Vec<PermGroup>,
    /// Number of normalized regular subgroups, when the direct enumeration ran.
    pub exact_structure_count: Option<usize>,
    pub obstructions: Vec<Obstruction>,
    /// Groups `N` whose search hit the budget or an enumeration bound.
    pub exhausted: Vec<GroupId>,
    pub closure_shrank: bool,
}

impl HGClassification {
    fn new(p: &ExtensionProblem, verdict: Verdict) -> Self {
        HGClassification {
            verdict,
            degree: p.degree(),
            witnesses: Vec::new(),
            normal_complements: Vec::new(),
            exact_structure_count: None,
            obstructions: Vec::new(),
            exhausted: Vec::new(),
            closure_shrank: p.closure_shrank(),
        }
    }

    /// Distinct types `N` among the witnesses, in order of first appearance.
    pub fn witness_types(&self) -> Vec<GroupId> {
        let mut out: Vec<GroupId> = Vec::new();
        for w in &self.witnesses {
            if !out.contains(&w.n_type) {
                out.push(w.n_type);
            }
        }
        out
    }
}

/// Normal subgroups `N` of `G` with `N ∩ G' = 1` and `|N| |G'| = |G|`,
/// computed on the faithful pair.
pub fn acg_check(p: &ExtensionProblem) -> Result<Vec<PermGroup>> {
    let (g, h) = p.faithful_pair();
    let index = g.order() / h.order();
    let h_elements = h.elements()?;
    Ok(normal_subgroups(g)?
        .into_iter()
        .filter(|n| n.order() == index && h_elements.iter().all(|x| x.is_identity() || !n.contains(x)))
        .collect())
}

/// Runs the checks in order: trivial `G'`, normal complements, then the
/// holomorph of every group of order `[G:G']` in `catalog`.
pub fn classify_extension(p: &ExtensionProblem, catalog: &Catalog, opts: &ClassifyOptions) -> Result<HGClassification> {
    let n = p.degree();
    let (g, h) = p.faithful_pair();
    let mut out = HGClassification::new(p, Verdict::NotHopfGalois);
    if opts.run_oracle && oracle_applies(n) {
        out.exact_structure_count = Some(gp_oracle(p)?.len());
    }
    if h.is_trivial() {
        out.verdict = Verdict::Galois;
        out.normal_complements.push(g.clone());
    } else {
        out.normal_complements = acg_check(p)?;
        if !out.normal_complements.is_empty() {
            out.verdict = Verdict::AlmostClassicallyGalois;
        }
    }
    let decided = out.verdict != Verdict::NotHopfGalois;
    if decided && !opts.structures_when_acg {
        return check_against_oracle(out);
    }
    if !is_supported_order(n as u64) {
        if !decided {
            out.verdict = Verdict::Undecided(UndecidedReason::OutOfCatalog);
        }
        return Ok(out);
    }
    for entry in catalog.groups_of_order(n as u64)? {
        let budget = Budget::new(opts.budget);
        match byott_search(p, entry, &budget) {
            Ok(s) => {
                out.witnesses.extend(s.witnesses);
                out.obstructions.extend(s.obstruction);
            }
            Err(Error::BudgetExhausted { .. } | Error::OrderBound { .. }) => out.exhausted.push(entry.id),
            Err(e) => return Err(e),
        }
    }
    if !decided {
        out.verdict = if !out.witnesses.is_empty() {
            Verdict::HopfGaloisNotAcg
        } else if !out.exhausted.is_empty() {
            Verdict::Undecided(UndecidedReason::Budget)
        } else {
            Verdict::NotHopfGalois
        };
    }
    check_against_oracle(out)
}

/// Classification against the embedded catalog with default options.
pub fn classify(p: &ExtensionProblem) -> Result<HGClassification> {
    classify_extension(p, crate::catalog::embedded(), &ClassifyOptions::default())
}

fn check_against_oracle(out: HGClassification) -> Result<HGClassification> {
    if let (Some(count), Some(hg)) = (out.exact_structure_count, out.verdict.is_hopf_galois()) {
        if hg != (count > 0) {
            return Err(Error::Verification(format!(
                "verdict {} disagrees with {count} normalized regular subgroups",
                out.verdict
            )));
        }
    }
    Ok(out)
}

/// Every normalized regular subgroup reachable through holomorph embeddings,
/// over all groups of order `[G:G']`, sorted by canonical signature.
pub fn byott_structures(p: &ExtensionProblem, catalog: &Catalog, budget: u64) -> Result<Vec<PermGroup>> {
    let mut seen: HashSet<Vec<crate::permcore::Permutation>> = HashSet::new();
    let mut out: Vec<(Vec<crate::permcore::Permutation>, PermGroup)> = Vec::new();
    for entry in catalog.groups_of_order(p.degree() as u64)? {
        for w in byott_search(p, entry, &Budget::new(budget))?.witnesses {
            let r = w.alpha_image.expect("search fills alpha_image");
            let sig = r.canonical_signature();
            if seen.insert(sig.clone()) {
                out.push((sig, r));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, r)| r).collect())
}

/// Prime degree: Hopf Galois exactly when `G` is solvable, and then almost
/// classically Galois. The structure count comes from the direct enumeration
/// and the complement from [`acg_check`]; both must agree with the verdict.
pub fn prime_degree_classify(p: &ExtensionProblem) -> Result<HGClassification> {
    let n = p.degree();
    if !is_prime(n) || n > ORACLE_PRIME_BOUND {
        return Err(Error::UnsupportedDegree(n));
    }
    let (g, h) = p.faithful_pair();
    let mut out = HGClassification::new(p, Verdict::NotHopfGalois);
    let count = gp_oracle(p)?.len();
    out.exact_structure_count = Some(count);
    if is_solvable(g) {
        if h.is_trivial() {
            out.verdict = Verdict::Galois;
            out.normal_complements.push(g.clone());
        } else {
            out.normal_complements = acg_check(p)?;
            if out.normal_complements.is_empty() {
                return Err(Error::Verification("solvable group of prime degree without a normal complement".into()));
            }
            out.verdict = Verdict::AlmostClassicallyGalois;
        }
    }
    check_against_oracle(out)
}

/// One class of intermediate subgroups `G''` and the problem `(G, G'')`.
#[derive(Clone, Debug)]
pub struct IntermediateProblem {
    pub class: SubgroupClass,
    pub problem: ExtensionProblem,
}

#[derive(Clone, Debug)]
pub struct IntermediateRow {
    pub class: SubgroupClass,
    pub degree: usize,
    pub classification: HGClassification,
}

/// Proper nontrivial subgroups of `G'` up to conjugacy in `G`, each paired
/// with its extension problem.
pub fn intermediate_problems(g: &PermGroup, gp: &PermGroup) -> Result<Vec<IntermediateProblem>> {
    subgroup_classes(g, gp)?
        .into_iter()
        .filter(|c| c.order > 1 && c.order < gp.order())
        .map(|class| {
            let problem = ExtensionProblem::new(g.clone(), class.representative.clone())?;
            Ok(IntermediateProblem { class, problem })
        })
        .collect()
}

pub fn intermediate_scan(g: &PermGroup, gp: &PermGroup, catalog: &Catalog, opts: &ClassifyOptions) -> Result<Vec<IntermediateRow>> {
    intermediate_problems(g, gp)?
        .into_iter()
        .map(|ip| {
            let classification = classify_extension(&ip.problem, catalog, opts)?;
            Ok(IntermediateRow {
                degree: ip.problem.degree(),
                class: ip.class,
                classification,
            })
        })
        .collect()
}
