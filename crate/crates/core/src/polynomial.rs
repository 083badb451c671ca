//! Sparse multivariate polynomials with exact integer coefficients, divided
//! differences, and Schubert polynomials defined through them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Exponent vector with trailing zeros removed, so `x1` is the same
/// monomial in any number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Self(exponents)
    }

    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// The variable `x_i` (1-indexed).
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i` (1-indexed).
    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn with_pair(&self, i: usize, ei: u32, ej: u32) -> Self {
        let mut e = self.0.clone();
        if e.len() < i + 1 {
            e.resize(i + 1, 0);
        }
        e[i - 1] = ei;
        e[i] = ej;
        Self::new(e)
    }

    fn times(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Self::new(
            (1..=n)
                .map(|i| self.exponent(i) + other.exponent(i))
                .collect(),
        )
    }
}

/// Graded lexicographic order: total degree first, then exponents of
/// `x1`, `x2`, ... compared left to right.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            (1..=n)
                .map(|i| self.exponent(i).cmp(&other.exponent(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A polynomial in `x1, x2, ...` with `i64` coefficients. No stored
/// coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, i64>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, 1)
    }

    pub fn term(m: Monomial, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(m, coeff);
        }
        Self { terms }
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Self::monomial(Monomial::new(exponents))
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    fn accumulate(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(m).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.accumulate(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                out.accumulate(ma.times(mb), c)?;
            }
        }
        Ok(out)
    }

    pub fn checked_sum<'a>(items: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        items
            .into_iter()
            .try_fold(Self::zero(), |acc, p| acc.checked_add(p))
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero();
        for (m, &c) in &self.terms {
            out.accumulate(m.clone(), c.checked_mul(k).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    /// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, computed monomial by monomial:
    /// for `x_i^p x_{i+1}^q` with `p > q` the quotient is
    /// `Σ_{k=0}^{p-q-1} x_i^{q+k} x_{i+1}^{p-1-k}`, and the case `p < q`
    /// follows by antisymmetry.
    pub fn divided_difference(&self, i: usize) -> Self {
        assert!(i >= 1, "divided differences are 1-indexed");
        let mut out = Self::zero();
        for (m, &c) in &self.terms {
            let (p, q) = (m.exponent(i), m.exponent(i + 1));
            let (lo, hi, sign) = match p.cmp(&q) {
                Ordering::Equal => continue,
                Ordering::Greater => (q, p, 1),
                Ordering::Less => (p, q, -1),
            };
            for k in 0..hi - lo {
                out.accumulate(m.with_pair(i, lo + k, hi - 1 - k), sign * c)
                    .expect("divided difference never grows coefficients");
            }
        }
        out
    }

    /// Exchange `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (m, &c) in &self.terms {
            out.accumulate(m.with_pair(i, m.exponent(i + 1), m.exponent(i)), c)
                .expect("coefficients are unchanged");
        }
        out
    }

    /// Largest variable index that occurs.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs)
            .expect("polynomial coefficient overflow")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs)
            .expect("polynomial coefficient overflow")
    }
}

/// Renders `c*x1^e1*x2^e2 + ...`, highest graded-lex term first.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let magnitude = c.unsigned_abs();
            match (idx, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
        .polynomial()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::PolyParse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("number too large"))
    }

    fn polynomial(&mut self) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        let mut sign = 1i64;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -1;
        }
        loop {
            let (m, c) = self.term()?;
            let c = i64::try_from(c).or_else(|_| self.err("coefficient too large"))?;
            out.accumulate(m, sign * c)?;
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return self.err("expected `+` or `-`"),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, u64)> {
        let mut coeff = 1u64;
        let mut exps: Vec<u32> = Vec::new();
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let var = self.number()? as usize;
                    if var == 0 {
                        return self.err("variables are numbered from x1");
                    }
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        e = u32::try_from(self.number()?)
                            .or_else(|_| self.err("exponent too large"))?;
                    }
                    if exps.len() < var {
                        exps.resize(var, 0);
                    }
                    exps[var - 1] += e;
                }
                Some(c) if c.is_ascii_digit() => {
                    let n = self.number()?;
                    coeff = coeff.checked_mul(n).ok_or(Error::Overflow)?;
                }
                _ => return self.err("expected a coefficient or variable"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((Monomial::new(exps), coeff));
            }
        }
    }
}

/// `h_m(x_1, ..., x_r)`: the sum of all monomials of degree `m` in the
/// first `r` variables.
pub fn complete_homogeneous(m: usize, r: usize) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for comp in weak_compositions(m, r) {
        out.accumulate(
            Monomial::new(comp.into_iter().map(|k| k as u32).collect()),
            1,
        )
        .expect("all coefficients are one");
    }
    out
}

/// Weak compositions of `m` into `r` parts, first part descending.
pub fn weak_compositions(m: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == 1 {
            prefix.push(m);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=m).rev() {
            prefix.push(k);
            go(m - k, r - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(m, r, &mut Vec::new(), &mut out);
    out
}

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
pub fn staircase(n: usize) -> MultiPoly {
    MultiPoly::from_exponents((0..n).map(|i| (n - 1 - i) as u32).collect())
}

/// `∂_{a_1} ∘ ... ∘ ∂_{a_p}` applied to `f` (the last letter acts first).
pub fn apply_word(f: &MultiPoly, word: &[usize]) -> MultiPoly {
    word.iter()
        .rev()
        .fold(f.clone(), |acc, &i| acc.divided_difference(i))
}

/// The Schubert polynomial of `w ∈ S_n`, obtained from the staircase
/// monomial by divided differences along a reduced word of `w⁻¹ w_0`.
pub fn schubert_ddiff(w: &Permutation, n: usize) -> Result<MultiPoly> {
    schubert_ddiff_with(w, n, |v| v.a_reduced_word().0)
}

/// As [`schubert_ddiff`], with the reduced word of `w⁻¹ w_0` chosen by
/// `pick`.
pub fn schubert_ddiff_with(
    w: &Permutation,
    n: usize,
    pick: impl FnOnce(&Permutation) -> Vec<usize>,
) -> Result<MultiPoly> {
    if w.support() > n {
        return Err(Error::OutsideGroup {
            perm: w.to_string(),
            n,
        });
    }
    let v = w.extended(n).inverse().multiply(&Permutation::longest(n));
    let word = pick(&v);
    debug_assert_eq!(crate::permutation::Word(word.clone()).to_permutation(), v);
    Ok(apply_word(&staircase(n), &word))
}
