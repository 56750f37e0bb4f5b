//! Named checks run by `verify`. Each check either passes, with an optional
//! summary, or fails with the counterexample that broke it.

use hopf_galois_core::catalog::Catalog;
use hopf_galois_core::hopf::{acg_check, byott_structures, classify_extension, gp_oracle, intermediate_problems, oracle_applies, transitivity_compose, ClassifyOptions, ExtensionProblem, Verdict};
use hopf_galois_core::permcore::{format_generator_list, is_solvable, normalizer_in, parse_generator_list, subgroup_classes};
use hopf_galois_core::{PermGroup, Permutation};

use crate::commands::Context;
use crate::report::{ReportDocument, ReportRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Catalog,
    Oracle,
    Holomorph,
    Transitivity,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Catalog => "catalog",
            Suite::Oracle => "oracle",
            Suite::Holomorph => "holomorph",
            Suite::Transitivity => "transitivity",
            Suite::All => "all",
        }
    }
}

/// `Ok(summary)` on success, `Err(counterexample)` otherwise.
type Outcome = Result<Option<String>, String>;

#[derive(Clone)]
struct Check {
    label: &'static str,
    run: fn(&Catalog, u64) -> Outcome,
}

pub fn cmd_verify(suite: Suite, ctx: &Context) -> ReportDocument {
    let checks: Vec<Check> = match suite {
        Suite::Catalog => catalog_checks(),
        Suite::Oracle => oracle_checks(),
        Suite::Holomorph => holomorph_checks(),
        Suite::Transitivity => transitivity_checks(),
        Suite::All => [catalog_checks(), holomorph_checks(), oracle_checks(), transitivity_checks()].concat(),
    };
    let mut rows = Vec::with_capacity(checks.len());
    let mut ms = Vec::with_capacity(checks.len());
    for c in checks {
        let start = std::time::Instant::now();
        let outcome = (c.run)(ctx.catalog, ctx.budget);
        ms.push(start.elapsed().as_millis() as u64);
        let (verdict, notes) = match outcome {
            Ok(None) => ("pass", Vec::new()),
            Ok(Some(s)) => ("pass", vec![s]),
            Err(e) => ("fail", vec![e]),
        };
        rows.push(ReportRow {
            label: c.label.to_string(),
            verdict: verdict.to_string(),
            notes,
            ..ReportRow::default()
        });
    }
    let mut doc = ReportDocument::new(format!("verify {}", suite.name()), rows);
    if ctx.timing {
        doc.timing = Some(ms);
    }
    doc
}

fn err(e: impl std::fmt::Display) -> String {
    format!("error: {e}")
}

fn catalog_checks() -> Vec<Check> {
    vec![
        Check {
            label: "catalog records: orders, tags, pairwise non-isomorphism, transitive lists",
            run: |cat, _| cat.verify().map(|r| Some(format!("{} checks", r.checks.len()))).map_err(err),
        },
        Check {
            label: "group counts 18→5, 20→5, 24→15, 30→4, 40→14, 60→13",
            run: |cat, _| {
                for (order, count) in [(18, 5), (20, 5), (24, 15), (30, 4), (40, 14), (60, 13)] {
                    let n = cat.groups_of_order(order).map_err(err)?.len();
                    if n != count {
                        return Err(format!("order {order}: {n} groups"));
                    }
                }
                Ok(Some("order 40 → 14, order 60 → 13".into()))
            },
        },
        Check {
            label: "abelian and solvable tags match recomputation",
            run: |cat, _| {
                for e in cat.groups() {
                    if e.abelian != e.group().is_abelian() || e.solvable != is_solvable(e.group()) {
                        return Err(format!("{} {}", e.id, e.name));
                    }
                }
                Ok(Some(format!("{} groups", cat.groups().len())))
            },
        },
        Check {
            label: "transitive lists of degree ≤ 5 match exhaustive enumeration",
            run: |cat, _| {
                for n in 2..=5 {
                    let sym = PermGroup::symmetric(n);
                    let found: Vec<PermGroup> = subgroup_classes(&sym, &sym)
                        .map_err(err)?
                        .into_iter()
                        .map(|c| c.representative)
                        .filter(PermGroup::is_transitive)
                        .collect();
                    let listed = cat.transitive_groups(n).map_err(err)?;
                    let mut labels: Vec<String> = found
                        .iter()
                        .map(|g| cat.identify_transitive(g).map(|t| t.label()))
                        .collect::<Result<_, _>>()
                        .map_err(err)?;
                    labels.sort();
                    labels.dedup();
                    if found.len() != listed.len() || labels.len() != listed.len() {
                        return Err(format!("degree {n}: {} classes found, {} listed", found.len(), listed.len()));
                    }
                }
                Ok(None)
            },
        },
    ]
}

fn holomorph_checks() -> Vec<Check> {
    vec![
        Check {
            label: "Hol(N) = Normalizer(Sym, λ(N)) for |N| ≤ 12",
            run: |cat, _| {
                let mut k = 0;
                for e in cat.groups().iter().filter(|e| e.id.order <= 12) {
                    let hol = e.holomorph().map_err(err)?;
                    let norm = normalizer_in(&PermGroup::symmetric(e.id.order as usize), &hol.regular).map_err(err)?;
                    if !norm.same_group(&hol.group) {
                        return Err(format!("{} {}: normalizer order {}, holomorph order {}", e.id, e.name, norm.order(), hol.order()));
                    }
                    k += 1;
                }
                Ok(Some(format!("{k} groups")))
            },
        },
        Check {
            label: "|Hol(N)| = |N|·|Aut(N)| for all supported N",
            run: |cat, _| {
                for e in cat.groups() {
                    let hol = e.holomorph().map_err(err)?;
                    let aut = hol.automorphisms.order();
                    if hol.order() != e.id.order * aut || hol.group.stabilizer(0).order() != aut {
                        return Err(format!("{} {}: |Hol| = {}, |Aut| = {aut}", e.id, e.name, hol.order()));
                    }
                }
                Ok(Some(format!("{} groups", cat.groups().len())))
            },
        },
        Check {
            label: "automorphisms preserve the multiplication table",
            run: |cat, _| {
                for e in cat.groups().iter().filter(|e| e.id.order <= 24) {
                    let hol = e.holomorph().map_err(err)?;
                    let lab = &hol.labelled;
                    let m = lab.order();
                    for a in hol.automorphisms.generators() {
                        let bad = (0..m).flat_map(|x| (0..m).map(move |y| (x, y))).find(|&(x, y)| a.apply(lab.mul(x, y)) != lab.mul(a.apply(x), a.apply(y)));
                        if let Some((x, y)) = bad {
                            return Err(format!("{} {}: {} fails on labels {x}, {y}", e.id, e.name, a.to_cycle_string()));
                        }
                    }
                }
                Ok(None)
            },
        },
        Check {
            label: "|Aut(N)|: C30→8, D30→120, F5→20, C2xC2xC2→168, C20→8",
            run: |cat, _| {
                for (order, name, want) in [(30, "C30", 8), (30, "D30", 120), (20, "F5", 20), (8, "C2xC2xC2", 168), (20, "C20", 8)] {
                    let e = cat
                        .groups_of_order(order)
                        .map_err(err)?
                        .into_iter()
                        .find(|e| e.name == name)
                        .ok_or_else(|| format!("no {name} in the catalog"))?;
                    let got = e.holomorph().map_err(err)?.automorphisms.order();
                    if got != want {
                        return Err(format!("{name}: {got}"));
                    }
                }
                Ok(None)
            },
        },
    ]
}

fn small_problems(cat: &Catalog) -> Result<Vec<(String, ExtensionProblem)>, String> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for t in cat.transitive_groups(n).map_err(err)? {
            out.push((t.label(), ExtensionProblem::from_transitive(t.group.clone()).map_err(err)?));
        }
    }
    Ok(out)
}

fn options(budget: u64) -> ClassifyOptions {
    ClassifyOptions {
        budget,
        ..ClassifyOptions::default()
    }
}

fn oracle_checks() -> Vec<Check> {
    vec![
        Check {
            label: "degree ≤ 6 Byott/GP equivalence",
            run: |cat, budget| {
                let problems = small_problems(cat)?;
                for (label, p) in &problems {
                    let sig = |v: Vec<PermGroup>| v.iter().map(PermGroup::canonical_signature).collect::<Vec<_>>();
                    let direct = sig(gp_oracle(p).map_err(err)?);
                    let byott = sig(byott_structures(p, cat, budget).map_err(err)?);
                    if direct != byott {
                        return Err(format!("{label}: {} by enumeration, {} through holomorphs", direct.len(), byott.len()));
                    }
                }
                Ok(Some(format!("{} problems", problems.len())))
            },
        },
        Check {
            label: "degree ≤ 6: every Hopf Galois problem is almost classically Galois",
            run: |cat, budget| {
                for (label, p) in small_problems(cat)? {
                    let c = classify_extension(&p, cat, &options(budget)).map_err(err)?;
                    if c.verdict == Verdict::HopfGaloisNotAcg || c.verdict.is_undecided() {
                        return Err(format!("{label}: {}", c.verdict));
                    }
                }
                Ok(None)
            },
        },
        Check {
            label: "normal complements are normal, meet G' trivially, and are normalized regular",
            run: |cat, _| {
                let mut k = 0;
                for (label, p) in small_problems(cat)? {
                    let structures: Vec<_> = gp_oracle(&p).map_err(err)?.iter().map(PermGroup::canonical_signature).collect();
                    for n in acg_check(&p).map_err(err)? {
                        let ok = n.is_normal_in(p.group()) && n.order() * p.subgroup().order() == p.group().order() && n.is_regular() && structures.contains(&n.canonical_signature());
                        if !ok {
                            return Err(format!("{label}: complement <{}>", format_generator_list(n.generators())));
                        }
                        k += 1;
                    }
                }
                Ok(Some(format!("{k} complements")))
            },
        },
        Check {
            label: "prime degree 5 and 7: solvable gives one structure, otherwise none",
            run: |cat, budget| {
                let mut k = 0;
                for n in [5, 7] {
                    for t in cat.transitive_groups(n).map_err(err)? {
                        let p = ExtensionProblem::from_transitive(t.group.clone()).map_err(err)?;
                        let c = classify_extension(&p, cat, &options(budget)).map_err(err)?;
                        let want = usize::from(is_solvable(&t.group));
                        if c.exact_structure_count != Some(want) || c.verdict.is_hopf_galois() != Some(want == 1) {
                            return Err(format!("{}: {} with {:?} structures", t.label(), c.verdict, c.exact_structure_count));
                        }
                        k += 1;
                    }
                }
                Ok(Some(format!("{k} groups")))
            },
        },
    ]
}

fn grp(text: &str, degree: usize) -> Result<PermGroup, String> {
    PermGroup::new(degree, parse_generator_list(text, degree).map_err(err)?).map_err(err)
}

/// The subgroup of `Hol(A5)` generated by the left and right regular
/// representations, of order 3600 on 60 points.
pub fn a5_by_a5(cat: &Catalog) -> Result<(PermGroup, PermGroup), String> {
    let a5 = cat
        .groups_of_order(60)
        .map_err(err)?
        .into_iter()
        .find(|e| e.name == "A5")
        .ok_or("no A5 in the catalog")?;
    let hol = a5.holomorph().map_err(err)?;
    let lab = &hol.labelled;
    let mut gens = hol.regular.generators().to_vec();
    for &g in lab.generators() {
        let images: Vec<usize> = (0..lab.order()).map(|x| lab.mul(x, lab.inverse(g))).collect();
        gens.push(Permutation::from_images(&images).map_err(err)?);
    }
    Ok((PermGroup::new(60, gens).map_err(err)?, hol.regular.clone()))
}

fn transitivity_checks() -> Vec<Check> {
    vec![
        Check {
            label: "(S4, S3, C3) composes to a regular subgroup of S8 normalized by G",
            run: |_, _| {
                let s4 = PermGroup::symmetric(4);
                let s3 = s4.stabilizer(0);
                let c3 = grp("(2,3,4)", 4)?;
                let klein = grp("(1,2)(3,4);(1,3)(2,4)", 4)?;
                let c2 = grp("(1,2)", 2)?;
                let out = transitivity_compose(&s4, &s3, &c3, &klein, &c2).map_err(err)?;
                let ok = out.regular.is_regular() && out.regular.degree() == 8 && out.image.generators().iter().all(|s| out.regular.is_normalized_by(s));
                ok.then(|| Some(format!("N x R = <{}>", format_generator_list(out.regular.generators()))))
                    .ok_or_else(|| "composition is not a normalized regular subgroup".into())
            },
        },
        Check {
            label: "A5 x A5 on 60 points: Hopf Galois, (A5, A4) is not, composition refused",
            run: |cat, budget| {
                let (g, lambda) = a5_by_a5(cat)?;
                if g.order() != 3600 || !g.is_transitive() {
                    return Err(format!("group of order {}", g.order()));
                }
                if !lambda.is_regular() || !g.generators().iter().all(|s| lambda.is_normalized_by(s)) {
                    return Err("left regular A5 is not normalized".into());
                }
                let gp = g.stabilizer(0);
                let gpp = subgroup_classes(&gp, &gp)
                    .map_err(err)?
                    .into_iter()
                    .find(|c| c.order == 12)
                    .ok_or("no subgroup of order 12 in the stabilizer")?
                    .representative;
                let sub = ExtensionProblem::new(gp.clone(), gpp.clone()).map_err(err)?;
                let v = classify_extension(&sub, cat, &options(budget)).map_err(err)?.verdict;
                if sub.degree() != 5 || v != Verdict::NotHopfGalois {
                    return Err(format!("degree {} sub-problem is {v}", sub.degree()));
                }
                let c5 = grp("(1,2,3,4,5)", 5)?;
                match transitivity_compose(&g, &gp, &gpp, &lambda, &c5) {
                    Err(hopf_galois_core::Error::Hypothesis { .. }) => Ok(None),
                    Err(e) => Err(err(e)),
                    Ok(_) => Err("composition was accepted".into()),
                }
            },
        },
        Check {
            label: "towers of degree ≤ 6 with both steps Hopf Galois compose",
            run: |cat, _| {
                let mut k = 0;
                for n in 4..=6 {
                    for t in cat.transitive_groups(n).map_err(err)? {
                        let g = &t.group;
                        let gp = g.stabilizer(0);
                        let top = ExtensionProblem::from_transitive(g.clone()).map_err(err)?;
                        let ns = gp_oracle(&top).map_err(err)?;
                        for ip in intermediate_problems(g, &gp).map_err(err)? {
                            let gpp = ip.problem.subgroup();
                            let lower = ExtensionProblem::new(gp.clone(), gpp.clone()).map_err(err)?;
                            if !oracle_applies(lower.degree()) {
                                continue;
                            }
                            for r in gp_oracle(&lower).map_err(err)? {
                                for nw in &ns {
                                    transitivity_compose(g, &gp, gpp, nw, &r).map_err(|e| format!("{} with |G''| = {}: {e}", t.label(), gpp.order()))?;
                                    k += 1;
                                }
                            }
                        }
                    }
                }
                Ok(Some(format!("{k} towers")))
            },
        },
    ]
}
