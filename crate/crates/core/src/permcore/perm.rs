//! Permutations of `{0, .., degree - 1}`.
//!
//! Composition follows the left-action convention: `(p * q)(x) = p(q(x))`.
//! Points are 0-based in memory and 1-based in cycle notation.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::error::{Error, Result};

/// Largest supported degree; images are stored as `u16`.
pub const MAX_DEGREE: usize = u16::MAX as usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} too large");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image list, checking it is a bijection.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} out of range for degree {n}"
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x as u16).collect(),
        })
    }


    /// Builds a permutation of `degree` points from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} exceeds degree {degree}",
                        x + 1
                    )));
                }
                if touched[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears twice",
                        x + 1
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        let images = other.images.iter().map(|&x| self.images[x as usize]).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[g.images[x] as usize] = g.images[y as usize];
        }
        Permutation { images }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            sq = sq.mul_unchecked(&sq);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least 2, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths (fixed points included as 1s), sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.apply(x) == x).collect()
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x as usize)
            .count()
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        (0..self.degree()).find(|&x| self.apply(x) != x)
    }

    pub fn is_odd(&self) -> bool {
        self.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2 == 1
    }

    /// The same permutation on `degree` points (extra points fixed).
    pub fn extend(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u16..degree as u16);
        Permutation { images }
    }

    /// Restriction to `0..degree`; `None` unless that range is invariant.
    pub fn restrict(&self, degree: usize) -> Option<Permutation> {
        let images: Vec<u16> = self.images[..degree].to_vec();
        if images.iter().all(|&x| (x as usize) < degree) {
            Some(Permutation { images })
        } else {
            None
        }
    }

    /// The action on `start..start + len`, shifted to `0..len`; `None` unless
    /// that block is invariant.
    pub(crate) fn block(&self, start: usize, len: usize) -> Option<Permutation> {
        let mut images = Vec::with_capacity(len);
        for &x in &self.images[start..start + len] {
            let x = x as usize;
            if x < start || x >= start + len {
                return None;
            }
            images.push((x - start) as u16);
        }
        Some(Permutation { images })
    }

    /// Direct sum acting on `self.degree() + other.degree()` points.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.degree() as u16;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + shift));
        Permutation { images }
    }

    /// Parses 1-based cycle notation such as `(1,6)(2,7)(3,5)(4,8)`.
    /// Whitespace is ignored; `()` or an empty string is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let cycles = parse_cycle_list(text)?;
        let zero_based: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.iter().map(|&x| x - 1).collect())
            .collect();
        Self::from_cycles(degree, &zero_based).map_err(|e| Error::Parse {
            input: text.to_string(),
            reason: e.to_string(),
        })
    }

    /// Parses cycle notation, taking the degree to be the largest point.
    pub fn parse_cycles_auto(text: &str) -> Result<Permutation> {
        let cycles = parse_cycle_list(text)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(1);
        Self::parse_cycles(text, degree)
    }

    /// 1-based cycle notation; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return String::from("()");
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&(x + 1).to_string());
            }
            s.push(')');
        }
        s
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Tok {
        Open,
        Close,
        Comma,
        Num(usize),
    }
    let err = |reason: &str| Error::Parse {
        input: text.to_string(),
        reason: reason.to_string(),
    };

    let mut toks = Vec::new();
    let mut number: Option<usize> = None;
    for ch in text.chars() {
        if let Some(d) = ch.to_digit(10) {
            let v = number
                .unwrap_or(0)
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize))
                .ok_or_else(|| err("point too large"))?;
            number = Some(v);
            continue;
        }
        if let Some(x) = number.take() {
            toks.push(Tok::Num(x));
        }
        match ch {
            '(' => toks.push(Tok::Open),
            ')' => toks.push(Tok::Close),
            ',' => toks.push(Tok::Comma),
            c if c.is_whitespace() => {}
            _ => return Err(err("unexpected character")),
        }
    }
    if let Some(x) = number {
        toks.push(Tok::Num(x));
    }

    let mut cycles = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut prev: Option<Tok> = None;
    for tok in toks {
        match tok {
            Tok::Open => {
                if current.is_some() {
                    return Err(err("nested '('"));
                }
                current = Some(Vec::new());
            }
            Tok::Num(x) => {
                let cycle = current.as_mut().ok_or_else(|| err("point outside a cycle"))?;
                if x == 0 {
                    return Err(err("points are 1-based"));
                }
                cycle.push(x);
            }
            Tok::Comma => {
                if current.is_none() || !matches!(prev, Some(Tok::Num(_))) {
                    return Err(err("misplaced ','"));
                }
            }
            Tok::Close => {
                let cycle = current.take().ok_or_else(|| err("unbalanced ')'"))?;
                if !matches!(prev, Some(Tok::Num(_)) | Some(Tok::Open)) {
                    return Err(err("trailing separator"));
                }
                if cycle.len() >= 2 {
                    cycles.push(cycle);
                }
            }
        }
        prev = Some(tok);
    }
    if current.is_some() {
        return Err(err("unterminated cycle"));
    }
    Ok(cycles)
}

/// Parses a `;`-separated generator list in cycle notation.
pub fn parse_generator_list(text: &str, degree: usize) -> Result<Vec<Permutation>> {
    text.split(';')
        .map(|s| Permutation::parse_cycles(s, degree))
        .collect()
}

pub fn format_generator_list(gens: &[Permutation]) -> String {
    if gens.is_empty() {
        return String::from("()");
    }
    let parts: Vec<String> = gens.iter().map(|g| g.to_cycle_string()).collect();
    parts.join(";")
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on a degree mismatch; use [`Permutation::compose`] to get an error instead.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in composition");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.to_cycle_string(), self.degree())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn transposition_is_an_involution() {
        let t = p("(1,2)", 2);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // (1 2 3) ∘ (1 2): 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1
        let c = p("(1,2,3)", 3);
        let t = p("(1,2)", 3);
        assert_eq!(c.compose(&t).unwrap(), p("(1,3)", 3));
        // the other convention would give (2,3)
        assert_ne!(t.compose(&c).unwrap(), p("(1,3)", 3));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(
            a.compose(&b),
            Err(Error::DegreeMismatch { expected: 3, found: 4 })
        );
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[0, 0, 1]).is_err());
        assert!(Permutation::from_images(&[0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn parses_with_whitespace_and_prints_canonically() {
        let g = p(" ( 1 , 6 ) (2,7)(3, 5)\t(4,8) ", 8);
        assert_eq!(g.to_cycle_string(), "(1,6)(2,7)(3,5)(4,8)");
        let h = p("(3,5,8,4)(2,6)", 8);
        assert_eq!(h.to_cycle_string(), "(2,6)(3,5,8,4)");
        assert_eq!(p("()", 4).to_cycle_string(), "()");
        assert_eq!(p("(1 2 3)", 3), p("(1,2,3)", 3));
    }

    #[test]
    fn parse_errors() {
        for bad in ["(1,2", "1,2)", "(0,1)", "(1,,2)", "(1,2,)", "(1,9)", "(a)", "((1,2))"] {
            assert!(Permutation::parse_cycles(bad, 8).is_err(), "{bad}");
        }
    }

    #[test]
    fn order_cycle_type_and_fixed_points() {
        let g = p("(1,2,3)(4,5)", 7);
        assert_eq!(g.order(), 6);
        assert_eq!(g.cycle_type(), vec![3, 2, 1, 1]);
        assert_eq!(g.fixed_points(), vec![5, 6]);
        assert!(g.is_odd());
        assert_eq!(g.pow(6), Permutation::identity(7));
        assert_eq!(g.pow(-1), g.inverse());
    }

    #[test]
    fn conjugation_matches_definition() {
        let g = p("(1,2,3,4)", 5);
        let h = p("(1,5)(2,3)", 5);
        assert_eq!(h.conjugate_by(&g), &(&g * &h) * &g.inverse());
    }
}
