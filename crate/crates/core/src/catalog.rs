//! Small groups and transitive permutation groups of low degree.
//!
//! The data is a line-oriented text file embedded at build time and also
//! loadable at run time:
//!
//! ```text
//! HGCATALOG 1
//! G <order> <index> <name> <degree> <gen>;<gen>;...
//! T <degree> <index> <name> <gen>;<gen>;...
//! ```
//!
//! Generators are 1-based cycle notation; `#` starts a comment line.

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::holomorph::Holomorph;
use crate::permcore::{
    conjugating_element, format_generator_list, group_fingerprint, is_isomorphic, is_solvable,
    parse_generator_list, GroupFingerprint, PermGroup, Permutation,
};

pub const FORMAT_VERSION: u32 = 1;
const HEADER: &str = "HGCATALOG";

/// The embedded catalog text.
pub const EMBEDDED: &str = include_str!("../data/catalog.txt");

/// Orders covered by [`Catalog::groups_of_order`], with the number of groups of each.
pub const SUPPORTED_ORDERS: [(u64, usize); 35] = [
    (1, 1), (2, 1), (3, 1), (4, 2), (5, 1), (6, 2), (7, 1), (8, 5), (9, 2), (10, 2),
    (11, 1), (12, 5), (13, 1), (14, 2), (15, 1), (16, 14), (17, 1), (18, 5), (19, 1), (20, 5),
    (21, 2), (22, 2), (23, 1), (24, 15), (25, 2), (26, 2), (27, 5), (28, 4), (29, 1), (30, 4),
    (31, 1), (32, 51), (36, 14), (40, 14), (60, 13),
];

/// Number of transitive groups of degree 2 through 7.
pub const TRANSITIVE_COUNTS: [(usize, usize); 6] = [(2, 1), (3, 2), (4, 5), (5, 5), (6, 16), (7, 7)];

pub fn is_supported_order(order: u64) -> bool {
    SUPPORTED_ORDERS.iter().any(|&(o, _)| o == order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId {
    pub order: u64,
    pub index: usize,
}

impl GroupId {
    pub const fn new(order: u64, index: usize) -> Self {
        GroupId { order, index }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.order, self.index)
    }
}

pub struct CatalogEntry {
    pub id: GroupId,
    pub name: String,
    pub degree: usize,
    pub abelian: bool,
    pub solvable: bool,
    group: PermGroup,
    holomorph: OnceBox<Holomorph>,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("id", &self.id)
            .field("name", &self.name)
            .field("degree", &self.degree)
            .finish()
    }
}

impl CatalogEntry {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn generators(&self) -> &[Permutation] {
        self.group.generators()
    }

    /// Computed on first request and cached.
    pub fn holomorph(&self) -> Result<&Holomorph> {
        if let Some(h) = self.holomorph.get() {
            return Ok(h);
        }
        let h = Holomorph::of_entry(self)?;
        let _ = self.holomorph.set(Box::new(h));
        Ok(self.holomorph.get().unwrap())
    }
}

#[derive(Clone, Debug)]
pub struct TransitiveEntry {
    pub degree: usize,
    pub index: usize,
    pub name: String,
    pub group: PermGroup,
}

impl TransitiveEntry {
    pub fn label(&self) -> String {
        format!("{}T{}", self.degree, self.index)
    }
}

#[derive(Clone, Debug)]
enum Line {
    Comment(String),
    Blank,
    Header,
    Group(usize),
    Transitive(usize),
}

#[derive(Debug)]
pub struct Catalog {
    groups: Vec<CatalogEntry>,
    transitive: Vec<TransitiveEntry>,
    lines: Vec<Line>,
}

static EMBEDDED_CATALOG: OnceBox<Catalog> = OnceBox::new();

/// The embedded catalog, parsed once.
pub fn embedded() -> &'static Catalog {
    EMBEDDED_CATALOG.get_or_init(|| Box::new(Catalog::parse(EMBEDDED).expect("embedded catalog parses")))
}

fn format_err(line: usize, reason: impl Into<String>) -> Error {
    Error::CatalogFormat {
        line,
        reason: reason.into(),
    }
}

fn is_abelian_name(name: &str) -> bool {
    name.split('x').all(|f| f.len() > 1 && f.starts_with('C') && f[1..].bytes().all(|b| b.is_ascii_digit()))
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Catalog> {
        let mut groups: Vec<CatalogEntry> = Vec::new();
        let mut transitive: Vec<TransitiveEntry> = Vec::new();
        let mut lines = Vec::new();
        let mut seen_header = false;
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.trim_end();
            if line.is_empty() {
                lines.push(Line::Blank);
                continue;
            }
            if line.starts_with('#') {
                lines.push(Line::Comment(line.to_owned()));
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if !seen_header {
                if fields.len() != 2 || fields[0] != HEADER {
                    return Err(format_err(lineno, "expected the HGCATALOG header"));
                }
                let v: u32 = fields[1].parse().map_err(|_| format_err(lineno, "bad version"))?;
                if v != FORMAT_VERSION {
                    return Err(format_err(lineno, format!("unsupported version {v}")));
                }
                seen_header = true;
                lines.push(Line::Header);
                continue;
            }
            let num = |s: &str, what: &str| -> Result<u64> {
                s.parse::<u64>().map_err(|_| format_err(lineno, format!("bad {what} {s:?}")))
            };
            match fields.first().copied() {
                Some("G") => {
                    if fields.len() < 6 {
                        return Err(format_err(lineno, "G record needs 5 fields"));
                    }
                    let order = num(fields[1], "order")?;
                    let index = num(fields[2], "index")? as usize;
                    let name = fields[3].to_string();
                    let degree = num(fields[4], "degree")? as usize;
                    let gens_text = fields[5..].join("");
                    let gens = parse_generator_list(&gens_text, degree).map_err(|e| format_err(lineno, e.to_string()))?;
                    let group = PermGroup::new(degree, gens)?;
                    let abelian = group.is_abelian();
                    let solvable = is_solvable(&group);
                    lines.push(Line::Group(groups.len()));
                    groups.push(CatalogEntry {
                        id: GroupId::new(order, index),
                        name,
                        degree,
                        abelian,
                        solvable,
                        group,
                        holomorph: OnceBox::new(),
                    });
                }
                Some("T") => {
                    if fields.len() < 5 {
                        return Err(format_err(lineno, "T record needs 4 fields"));
                    }
                    let degree = num(fields[1], "degree")? as usize;
                    let index = num(fields[2], "index")? as usize;
                    let name = fields[3].to_string();
                    let gens_text = fields[4..].join("");
                    let gens = parse_generator_list(&gens_text, degree).map_err(|e| format_err(lineno, e.to_string()))?;
                    lines.push(Line::Transitive(transitive.len()));
                    transitive.push(TransitiveEntry {
                        degree,
                        index,
                        name,
                        group: PermGroup::new(degree, gens)?,
                    });
                }
                _ => return Err(format_err(lineno, format!("unknown record {:?}", fields[0]))),
            }
        }
        if !seen_header {
            return Err(format_err(0, "missing HGCATALOG header"));
        }
        let mut ids: Vec<GroupId> = groups.iter().map(|g| g.id).collect();
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(format_err(0, "duplicate group id"));
        }
        let mut labels: Vec<(usize, usize)> = transitive.iter().map(|t| (t.degree, t.index)).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(format_err(0, "duplicate transitive label"));
        }
        Ok(Catalog {
            groups,
            transitive,
            lines,
        })
    }

    /// Prints the catalog in canonical form; parsing canonical text and
    /// printing it again reproduces it byte for byte.
    pub fn print(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            match line {
                Line::Comment(c) => out.push_str(c),
                Line::Blank => {}
                Line::Header => out.push_str(&format!("{HEADER} {FORMAT_VERSION}")),
                Line::Group(i) => {
                    let g = &self.groups[*i];
                    out.push_str(&format!(
                        "G {} {} {} {} {}",
                        g.id.order,
                        g.id.index,
                        g.name,
                        g.degree,
                        format_generator_list(g.group.generators())
                    ));
                }
                Line::Transitive(i) => {
                    let t = &self.transitive[*i];
                    out.push_str(&format!(
                        "T {} {} {} {}",
                        t.degree,
                        t.index,
                        t.name,
                        format_generator_list(t.group.generators())
                    ));
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn groups(&self) -> &[CatalogEntry] {
        &self.groups
    }

    /// All groups of order `m`, by index.
    pub fn groups_of_order(&self, m: u64) -> Result<Vec<&CatalogEntry>> {
        if !is_supported_order(m) {
            return Err(Error::UnsupportedOrder(m));
        }
        let mut out: Vec<&CatalogEntry> = self.groups.iter().filter(|g| g.id.order == m).collect();
        out.sort_by_key(|g| g.id);
        Ok(out)
    }

    pub fn group(&self, id: GroupId) -> Option<&CatalogEntry> {
        self.groups.iter().find(|g| g.id == id)
    }

    pub fn group_by_name(&self, name: &str) -> Option<&CatalogEntry> {
        self.groups.iter().find(|g| g.name == name)
    }

    /// Transitive groups of degree `n`, in label order.
    pub fn transitive_groups(&self, n: usize) -> Result<Vec<&TransitiveEntry>> {
        if !(2..=7).contains(&n) {
            return Err(Error::UnsupportedDegree(n));
        }
        let mut out: Vec<&TransitiveEntry> = self.transitive.iter().filter(|t| t.degree == n).collect();
        out.sort_by_key(|t| t.index);
        Ok(out)
    }

    /// Looks up a label such as `6T9`.
    pub fn transitive_by_label(&self, label: &str) -> Option<&TransitiveEntry> {
        let (d, k) = label.split_once('T')?;
        let d: usize = d.parse().ok()?;
        let k: usize = k.parse().ok()?;
        self.transitive.iter().find(|t| t.degree == d && t.index == k)
    }

    /// The entry conjugate to `g` in the symmetric group.
    pub fn identify_transitive(&self, g: &PermGroup) -> Result<&TransitiveEntry> {
        let n = g.degree();
        let candidates = self.transitive_groups(n)?;
        if !g.is_transitive() {
            return Err(Error::Verification("group is not transitive".into()));
        }
        let sym = PermGroup::symmetric(n);
        let order = g.order();
        let types = cycle_type_profile(g)?;
        for t in candidates {
            if t.group.order() != order || cycle_type_profile(&t.group)? != types {
                continue;
            }
            if conjugating_element(&sym, g, &t.group)?.is_some() {
                return Ok(t);
            }
        }
        Err(Error::Verification("no conjugate transitive entry".into()))
    }

    /// Checks every structural claim the catalog makes.
    pub fn verify(&self) -> Result<VerificationReport> {
        let mut report = VerificationReport::default();
        for &(order, count) in &SUPPORTED_ORDERS {
            let entries = self.groups_of_order(order)?;
            if entries.len() != count {
                return Err(Error::CatalogCheck {
                    entry: format!("order {order}"),
                    reason: format!("{} groups listed, {count} expected", entries.len()),
                });
            }
            for (k, e) in entries.iter().enumerate() {
                if e.id.index != k + 1 {
                    return Err(check_err(e, "indices are not 1..count"));
                }
                if e.group.order() != order {
                    return Err(check_err(e, &format!("generators give order {}", e.group.order())));
                }
                if e.abelian != is_abelian_name(&e.name) {
                    return Err(check_err(e, "abelian tag disagrees with the name"));
                }
                if e.solvable != (e.name != "A5") {
                    return Err(check_err(e, "solvable tag is wrong"));
                }
            }
            let prints: Vec<GroupFingerprint> = entries
                .iter()
                .map(|e| group_fingerprint(e.group()))
                .collect::<Result<_>>()?;
            for i in 0..entries.len() {
                for j in (i + 1)..entries.len() {
                    if !prints[i].abstractly_equal(&prints[j]) {
                        continue;
                    }
                    if is_isomorphic(entries[i].group(), entries[j].group())?.is_some() {
                        return Err(check_err(entries[i], &format!("isomorphic to {}", entries[j].id)));
                    }
                }
            }
            report.checks.push(format!("order {order}: {count} groups, pairwise non-isomorphic"));
        }
        if self.groups.len() != SUPPORTED_ORDERS.iter().map(|&(_, c)| c).sum::<usize>() {
            return Err(Error::CatalogCheck {
                entry: "groups".into(),
                reason: "records outside the supported orders".into(),
            });
        }
        for &(n, count) in &TRANSITIVE_COUNTS {
            let entries = self.transitive_groups(n)?;
            if entries.len() != count {
                return Err(Error::CatalogCheck {
                    entry: format!("degree {n}"),
                    reason: format!("{} transitive groups listed, {count} expected", entries.len()),
                });
            }
            let sym = PermGroup::symmetric(n);
            for (k, t) in entries.iter().enumerate() {
                if t.index != k + 1 || !t.group.is_transitive() {
                    return Err(Error::CatalogCheck {
                        entry: t.label(),
                        reason: "not transitive or misnumbered".into(),
                    });
                }
            }
            for i in 0..entries.len() {
                for j in (i + 1)..entries.len() {
                    if conjugating_element(&sym, &entries[i].group, &entries[j].group)?.is_some() {
                        return Err(Error::CatalogCheck {
                            entry: entries[i].label(),
                            reason: format!("conjugate to {}", entries[j].label()),
                        });
                    }
                }
            }
            report.checks.push(format!("degree {n}: {count} transitive groups, pairwise non-conjugate"));
        }
        Ok(report)
    }
}

fn check_err(e: &CatalogEntry, reason: &str) -> Error {
    Error::CatalogCheck {
        entry: format!("{} {}", e.id, e.name),
        reason: reason.to_string(),
    }
}

fn cycle_type_profile(g: &PermGroup) -> Result<Vec<(Vec<usize>, u64)>> {
    Ok(group_fingerprint(g)?.cycle_type_multiset)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<String>,
}

/// Convenience wrappers over the embedded catalog.
pub fn groups_of_order(m: u64) -> Result<Vec<&'static CatalogEntry>> {
    embedded().groups_of_order(m)
}

pub fn transitive_groups(n: usize) -> Result<Vec<&'static TransitiveEntry>> {
    embedded().transitive_groups(n)
}

pub fn identify_transitive(g: &PermGroup) -> Result<&'static TransitiveEntry> {
    embedded().identify_transitive(g)
}

pub fn verify_catalog() -> Result<VerificationReport> {
    embedded().verify()
}
