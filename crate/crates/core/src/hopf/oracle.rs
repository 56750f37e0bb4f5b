//! Direct enumeration of regular subgroups normalized by `lambda(G)`.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;
use once_cell::race::OnceBox;

use super::problem::ExtensionProblem;
use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};

/// Degrees up to this bound are handled by exhaustive search.
pub const ORACLE_SMALL_DEGREE: usize = 6;
/// Largest prime degree handled through `p`-cycles.
pub const ORACLE_PRIME_BOUND: usize = 11;

pub fn oracle_applies(n: usize) -> bool {
    n <= ORACLE_SMALL_DEGREE || (n <= ORACLE_PRIME_BOUND && is_prime(n))
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Every regular subgroup of `Sym(n)` normalized by `lambda(G)`, sorted by
/// canonical signature. Each result is checked before it is returned.
pub fn gp_oracle(p: &ExtensionProblem) -> Result<Vec<PermGroup>> {
    let n = p.degree();
    let action = p.action();
    let mut out: Vec<PermGroup> = if n <= ORACLE_SMALL_DEGREE {
        small_regular_subgroups(n)
            .iter()
            .filter(|r| action.generators().iter().all(|s| r.is_normalized_by(s)))
            .cloned()
            .collect()
    } else if n <= ORACLE_PRIME_BOUND && is_prime(n) {
        prime_cycle_subgroups(action)
    } else {
        return Err(Error::UnsupportedDegree(n));
    };
    for r in &out {
        if !r.is_regular() || !action.generators().iter().all(|s| r.is_normalized_by(s)) {
            return Err(Error::Verification("oracle produced a subgroup that is not a normalized regular subgroup".into()));
        }
    }
    out.sort_by_cached_key(|r| r.canonical_signature());
    Ok(out)
}

static SMALL_REGULAR: [OnceBox<Vec<PermGroup>>; ORACLE_SMALL_DEGREE + 1] = [const { OnceBox::new() }; ORACLE_SMALL_DEGREE + 1];

/// All regular subgroups of `Sym(n)` for `n <= 6`. Every group of order at
/// most 6 is generated by two elements, so closing pairs of fixed-point-free
/// permutations finds them all.
pub fn small_regular_subgroups(n: usize) -> &'static [PermGroup] {
    assert!(n <= ORACLE_SMALL_DEGREE);
    SMALL_REGULAR[n].get_or_init(|| Box::new(enumerate_regular(n)))
}

fn enumerate_regular(n: usize) -> Vec<PermGroup> {
    if n <= 1 {
        return vec![PermGroup::trivial(n)];
    }
    let id: Vec<u8> = (0..n as u8).collect();
    let mut cands: Vec<Vec<u8>> = vec![id.clone()];
    let mut p = id.clone();
    while next_permutation(&mut p) {
        if p.iter().enumerate().all(|(i, &x)| i as u8 != x) {
            cands.push(p.clone());
        }
    }
    let mut seen: HashSet<Vec<Vec<u8>>> = HashSet::new();
    let mut out = Vec::new();
    for i in 0..cands.len() {
        for j in i..cands.len() {
            let Some(mut set) = close(&[&cands[i], &cands[j]], n) else {
                continue;
            };
            if set.len() != n || set.iter().any(|e| *e != id && e.iter().enumerate().any(|(k, &x)| k as u8 == x)) {
                continue;
            }
            set.sort_unstable();
            if seen.insert(set.clone()) {
                let gens = set
                    .iter()
                    .map(|e| Permutation::from_images(&e.iter().map(|&x| x as usize).collect::<Vec<_>>()).unwrap())
                    .collect();
                out.push(PermGroup::new(n, gens).unwrap());
            }
        }
    }
    out
}

/// The group generated by `gens`, or `None` once it exceeds `limit` elements.
fn close(gens: &[&Vec<u8>], limit: usize) -> Option<Vec<Vec<u8>>> {
    let n = gens[0].len();
    let mut set: Vec<Vec<u8>> = vec![(0..n as u8).collect()];
    let mut i = 0;
    while i < set.len() {
        for g in gens {
            let y: Vec<u8> = set[i].iter().map(|&x| g[x as usize]).collect();
            if !set.contains(&y) {
                if set.len() == limit {
                    return None;
                }
                set.push(y);
            }
        }
        i += 1;
    }
    Some(set)
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Regular subgroups of prime degree are generated by a `p`-cycle, and each
/// contains exactly one `p`-cycle sending 0 to 1. Walks those cycles and
/// keeps the ones whose subgroup every generator of `action` normalizes.
fn prime_cycle_subgroups(action: &PermGroup) -> Vec<PermGroup> {
    let n = action.degree();
    let mut rest: Vec<u8> = (2..n as u8).collect();
    let mut out = Vec::new();
    let mut seq = vec![0usize; n];
    let mut pos = vec![0usize; n];
    loop {
        seq[0] = 0;
        seq[1] = 1;
        for (k, &x) in rest.iter().enumerate() {
            seq[k + 2] = x as usize;
        }
        for (t, &x) in seq.iter().enumerate() {
            pos[x] = t;
        }
        // s c s^-1 must be a power c^k, that is s(seq[t+1]) = seq[pos(s(seq[t])) + k]
        let normalized = action.generators().iter().all(|s| {
            let k = (pos[s.apply(seq[1])] + n - pos[s.apply(seq[0])]) % n;
            (0..n).all(|t| pos[s.apply(seq[(t + 1) % n])] == (pos[s.apply(seq[t])] + k) % n)
        });
        if normalized {
            let mut images = vec![0usize; n];
            for t in 0..n {
                images[seq[t]] = seq[(t + 1) % n];
            }
            out.push(PermGroup::new(n, vec![Permutation::from_images(&images).unwrap()]).unwrap());
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}
