//! The subcommands, as library functions returning a [`ReportDocument`].

use std::path::Path;
use std::time::Instant;

use hopf_galois_core::catalog::{self, Catalog};
use hopf_galois_core::hopf::{classify_extension, intermediate_problems, ClassifyOptions, ExtensionProblem, HGClassification};
use hopf_galois_core::permcore::{format_generator_list, DEFAULT_BUDGET};
use hopf_galois_core::PermGroup;
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::report::{Counts, Degrees, ReportDocument, ReportRow, WitnessSummary};

pub const CATALOG_ENV: &str = "HG_CATALOG";

/// Settings shared by the subcommands.
#[derive(Clone, Copy, Debug)]
pub struct Context<'a> {
    pub catalog: &'a Catalog,
    pub budget: u64,
    /// Worker threads for rows; 0 lets the pool decide.
    pub jobs: usize,
    pub timing: bool,
}

impl Default for Context<'static> {
    fn default() -> Self {
        Context {
            catalog: catalog::embedded(),
            budget: DEFAULT_BUDGET,
            jobs: 0,
            timing: false,
        }
    }
}

impl Context<'_> {
    fn options(&self) -> ClassifyOptions {
        ClassifyOptions {
            budget: self.budget,
            ..ClassifyOptions::default()
        }
    }

    /// Runs `f` over `items` on the pool, keeping input order.
    fn rows<T: Sync>(&self, items: &[T], f: impl Fn(&T) -> Result<ReportRow> + Sync) -> Result<(Vec<ReportRow>, Vec<u64>)> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| CliError::Threads(e.to_string()))?;
        let timed: Vec<Result<(ReportRow, u64)>> = pool.install(|| {
            items
                .par_iter()
                .map(|item| {
                    let start = Instant::now();
                    let row = f(item)?;
                    Ok((row, start.elapsed().as_millis() as u64))
                })
                .collect()
        });
        let mut rows = Vec::with_capacity(timed.len());
        let mut ms = Vec::with_capacity(timed.len());
        for t in timed {
            let (r, m) = t?;
            rows.push(r);
            ms.push(m);
        }
        Ok((rows, ms))
    }

    fn document(&self, command: String, rows: Vec<ReportRow>, ms: Vec<u64>) -> ReportDocument {
        let mut doc = ReportDocument::new(command, rows);
        if self.timing {
            doc.timing = Some(ms);
        }
        doc
    }
}

/// The catalog named by `path`, else by `HG_CATALOG`, else the embedded one.
/// A loaded catalog lives for the rest of the process.
pub fn load_catalog(path: Option<&Path>) -> Result<&'static Catalog> {
    let from_env = std::env::var_os(CATALOG_ENV).filter(|v| !v.is_empty());
    let Some(path) = path.map(Path::to_path_buf).or(from_env.map(Into::into)) else {
        return Ok(catalog::embedded());
    };
    let text = std::fs::read_to_string(&path).map_err(|source| CliError::CatalogFile {
        path: path.display().to_string(),
        source,
    })?;
    Ok(Box::leak(Box::new(Catalog::parse(&text)?)))
}

fn check_degree(degree: usize) -> Result<()> {
    if (4..=6).contains(&degree) {
        Ok(())
    } else {
        Err(CliError::Degree(degree))
    }
}

/// One row per transitive group of `degree`, optionally only those of
/// order `order`.
pub fn cmd_classify_all(degree: usize, order: Option<u64>, ctx: &Context) -> Result<ReportDocument> {
    check_degree(degree)?;
    let groups: Vec<_> = ctx
        .catalog
        .transitive_groups(degree)?
        .into_iter()
        .filter(|t| order.is_none_or(|m| t.group.order() == m))
        .collect();
    let opts = ctx.options();
    let (rows, ms) = ctx.rows(&groups, |t| {
        let p = ExtensionProblem::from_transitive(t.group.clone())?;
        let c = classify_extension(&p, ctx.catalog, &opts)?;
        Ok(classification_row(t.label(), Some(t.name.clone()), &p, &c))
    })?;
    let mut command = format!("classify-all --degree {degree}");
    if let Some(m) = order {
        command.push_str(&format!(" --order {m}"));
    }
    Ok(ctx.document(command, rows, ms))
}

/// One row per class of subgroups `G''` strictly between 1 and `G'`, where
/// `G` is the transitive group `label` and `G'` its point stabilizer.
/// `order` keeps only rows with `[G : G''] = order`.
pub fn cmd_intermediate(degree: usize, label: &str, order: Option<u64>, ctx: &Context) -> Result<ReportDocument> {
    check_degree(degree)?;
    let entry = ctx
        .catalog
        .transitive_by_label(label)
        .ok_or_else(|| CliError::UnknownGroup(label.to_string()))?;
    if entry.degree != degree {
        return Err(CliError::DegreeOfGroup {
            label: label.to_string(),
            degree,
        });
    }
    let g = &entry.group;
    let problems: Vec<_> = intermediate_problems(g, &g.stabilizer(0))?
        .into_iter()
        .enumerate()
        .filter(|(_, ip)| order.is_none_or(|m| ip.problem.degree() as u64 == m))
        .collect();
    let opts = ctx.options();
    let (rows, ms) = ctx.rows(&problems, |(k, ip)| {
        let c = classify_extension(&ip.problem, ctx.catalog, &opts)?;
        let mut row = classification_row(format!("{}/H{}", entry.label(), k + 1), Some(entry.name.clone()), &ip.problem, &c);
        row.notes.insert(0, format!("G'' = <{}>, {} conjugates in G'", format_generator_list(ip.problem.subgroup().generators()), ip.class.members));
        Ok(row)
    })?;
    let mut command = format!("intermediate --degree {degree} --group {}", entry.label());
    if let Some(m) = order {
        command.push_str(&format!(" --order {m}"));
    }
    Ok(ctx.document(command, rows, ms))
}

fn generators(g: &PermGroup) -> String {
    format!("<{}>", format_generator_list(g.generators()))
}

pub fn classification_row(label: String, group: Option<String>, p: &ExtensionProblem, c: &HGClassification) -> ReportRow {
    let mut notes: Vec<String> = c.obstructions.iter().map(|o| format!("obstruction {o}")).collect();
    if c.closure_shrank {
        notes.push(format!("G'' contains a normal subgroup of order {}; classified on the faithful quotient", p.core().order()));
    }
    ReportRow {
        label,
        group,
        degrees: Some(Degrees {
            group_order: p.group().order(),
            extension: c.degree,
            subgroup_order: p.subgroup().order(),
        }),
        verdict: c.verdict.code().to_string(),
        witnesses: c
            .witnesses
            .iter()
            .map(|w| WitnessSummary {
                n_type: w.n_type.to_string(),
                n_name: w.n_name.clone(),
                generators: w.alpha_image.as_ref().map(generators).unwrap_or_default(),
            })
            .collect(),
        complements: c.normal_complements.iter().map(generators).collect(),
        counts: Some(Counts {
            structures: c.exact_structure_count,
            witnesses: c.witnesses.len(),
            complements: c.normal_complements.len(),
            exhausted: c.exhausted.iter().map(ToString::to_string).collect(),
        }),
        notes,
    }
}
