//! The report document shared by every subcommand, and its two renderings.

use std::fmt::Write as _;

use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReportDocument {
    pub schema_version: String,
    /// The invocation, as typed.
    pub command: String,
    pub rows: Vec<ReportRow>,
    /// Milliseconds per row, in row order. Left out unless asked for, so that
    /// two runs give identical output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Vec<u64>>,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct ReportRow {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Degrees>,
    /// A verdict code for classification rows, `pass` or `fail` for checks.
    pub verdict: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub complements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<Counts>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct Degrees {
    /// `|G|`.
    pub group_order: u64,
    /// `[G : G']`, the degree of the extension.
    pub extension: usize,
    /// `|G'|`.
    pub subgroup_order: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WitnessSummary {
    /// Catalog id `(order,index)`.
    pub n_type: String,
    pub n_name: String,
    /// Generators of the regular subgroup of `Sym(G/G')`, 1-based.
    pub generators: String,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Counts {
    /// Exact number of structures, when the direct enumeration ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structures: Option<usize>,
    pub witnesses: usize,
    pub complements: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub exhausted: Vec<String>,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>, rows: Vec<ReportRow>) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.into(),
            rows,
            timing: None,
        }
    }

    pub fn has_undecided(&self) -> bool {
        self.rows.iter().any(|r| r.verdict.starts_with("undecided"))
    }

    pub fn has_failures(&self) -> bool {
        self.rows.iter().any(|r| r.verdict == "fail")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.command);
        for (k, row) in self.rows.iter().enumerate() {
            let mut line = row.label.clone();
            if let Some(g) = &row.group {
                let _ = write!(line, " [{g}]");
            }
            if let Some(d) = row.degrees {
                let _ = write!(line, " |G|={} [F:k]={} |G'|={}", d.group_order, d.extension, d.subgroup_order);
            }
            let _ = write!(line, ": {}", row.verdict);
            // check rows carry their summary on the same line
            let inline = row.degrees.is_none();
            if inline {
                for n in &row.notes {
                    let _ = write!(line, ", {n}");
                }
            }
            if let Some(c) = &row.counts {
                if let Some(s) = c.structures {
                    let _ = write!(line, ", structures={s}");
                }
                if c.complements > 0 {
                    let _ = write!(line, ", complements={}", c.complements);
                }
                if c.witnesses > 0 {
                    let _ = write!(line, ", witnesses={}", c.witnesses);
                }
                if !c.exhausted.is_empty() {
                    let _ = write!(line, ", budget exhausted for {}", c.exhausted.join(" "));
                }
            }
            if let Some(ms) = self.timing.as_ref().and_then(|t| t.get(k)) {
                let _ = write!(line, " ({ms} ms)");
            }
            out.push_str(&line);
            out.push('\n');
            for w in &row.witnesses {
                let _ = writeln!(out, "    N = {} {}: {}", w.n_type, w.n_name, w.generators);
            }
            for c in &row.complements {
                let _ = writeln!(out, "    complement: {c}");
            }
            for n in row.notes.iter().filter(|_| !inline) {
                let _ = writeln!(out, "    {n}");
            }
        }
        out
    }
}
