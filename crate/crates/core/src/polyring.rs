//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order, so iteration, display and serialization are
//! deterministic. Zero coefficients are never stored.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{self, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// One entry of the JSON form of a polynomial.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exponents: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VariableMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exponents: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(exponents);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending graded lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().rev().map(|(m, c)| (m.0.as_slice(), c))
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Result<Rational> {
        self.check_len(exponents.len())?;
        Ok(self
            .terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero))
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial(vec![0; self.nvars]))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.nvars {
            return Err(Error::VariableMismatch {
                expected: self.nvars,
                found: n,
            });
        }
        Ok(())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        self.check_len(other.nvars)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.mul_bounded(other, None))
    }

    /// Product keeping only monomials whose exponents stay within `bounds`.
    pub fn mul_truncated(&self, other: &Self, bounds: &[u32]) -> Result<Self> {
        self.check_same(other)?;
        self.check_len(bounds.len())?;
        Ok(self.mul_bounded(other, Some(bounds)))
    }

    fn mul_bounded(&self, other: &Self, bounds: Option<&[u32]>) -> Self {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            'inner: for (mb, cb) in &other.terms {
                let mut e = Vec::with_capacity(self.nvars);
                for (k, (a, b)) in ma.0.iter().zip(&mb.0).enumerate() {
                    let s = a + b;
                    if let Some(bd) = bounds {
                        if s > bd[k] {
                            continue 'inner;
                        }
                    }
                    e.push(s);
                }
                *acc.entry(Monomial(e)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self {
            nvars: self.nvars,
            terms: acc,
        }
    }

    /// Drops every monomial with an exponent above the matching bound.
    pub fn truncate(&self, bounds: &[u32]) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0.iter().zip(bounds).all(|(a, b)| a <= b))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = out.mul_bounded(self, None);
        }
        out
    }

    /// Simultaneous substitution `x_i ↦ replacements[i]`. The result lives in
    /// the variable count of the replacements.
    pub fn substitute(&self, replacements: &[MultiPoly]) -> Result<Self> {
        self.check_len(replacements.len())?;
        let target = match replacements.first() {
            Some(r) => r.nvars,
            None => 0,
        };
        if let Some(r) = replacements.iter().find(|r| r.nvars != target) {
            return Err(Error::VariableMismatch {
                expected: target,
                found: r.nvars,
            });
        }
        let mut powers: Vec<Vec<MultiPoly>> = replacements
            .iter()
            .map(|r| vec![Self::one(target), r.clone()])
            .collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i]
                        .last()
                        .unwrap()
                        .mul_bounded(&replacements[i], None);
                    powers[i].push(next);
                }
                term = term.mul_bounded(&powers[i][k as usize], None);
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        self.check_len(point.len())?;
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in point.iter().zip(&m.0) {
                if k > 0 {
                    v *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Total degree of the leading term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree when every term has the same degree. The zero polynomial has
    /// no degree and is reported as `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Largest exponent of each variable.
    pub fn var_degrees(&self) -> Vec<u32> {
        let mut out = vec![0; self.nvars];
        for m in self.terms.keys() {
            for (o, &k) in out.iter_mut().zip(&m.0) {
                *o = (*o).max(k);
            }
        }
        out
    }

    pub fn max_var_degree(&self) -> u32 {
        self.var_degrees().into_iter().max().unwrap_or(0)
    }

    /// `N(p) = Σ (a_μ / μ!) x^μ`.
    pub fn normalize(&self) -> Self {
        self.map_coeffs(|m, c| c / Rational::from_integer(multi_factorial(m)))
    }

    /// Inverse of [`MultiPoly::normalize`].
    pub fn denormalize(&self) -> Self {
        self.map_coeffs(|m, c| c * Rational::from_integer(multi_factorial(m)))
    }

    fn map_coeffs(&self, f: impl Fn(&[u32], &Rational) -> Rational) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(&m.0, c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// `x₁^{e'} ⋯ x_n^{e'} · p(1/x₁, …, 1/x_n)`; requires `e'` to bound every
    /// per-variable degree.
    pub fn box_reverse(&self, bound: u32) -> Result<Self> {
        let worst = self.max_var_degree();
        if worst > bound {
            return Err(Error::Precondition(format!(
                "box bound {bound} is below a per-variable degree {worst}"
            )));
        }
        Ok(self.box_reverse_truncated(bound))
    }

    /// Like [`MultiPoly::box_reverse`] but terms that would acquire a negative
    /// exponent are dropped, leaving the polynomial part of the Laurent result.
    pub fn box_reverse_truncated(&self, bound: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0.iter().all(|&k| k <= bound))
                .map(|(m, c)| {
                    (
                        Monomial(m.0.iter().map(|&k| bound - k).collect()),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// `∂^k p / ∂x_var^k`.
    pub fn partial(&self, var: usize, k: u32) -> Self {
        assert!(var < self.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let a = m.0[var];
            if a < k {
                continue;
            }
            let falling: BigInt = (a - k + 1..=a).map(BigInt::from).product();
            let mut e = m.0.clone();
            e[var] -= k;
            out.add_term(e, c * Rational::from_integer(falling));
        }
        out
    }

    /// `∂^α p / ∂x^α`.
    pub fn partial_multi(&self, alpha: &[u32]) -> Result<Self> {
        self.check_len(alpha.len())?;
        let mut out = self.clone();
        for (i, &k) in alpha.iter().enumerate() {
            if k > 0 {
                out = out.partial(i, k);
            }
        }
        Ok(out)
    }

    /// The matrix `M` with `∂^α p = ½ xᵀ M x`, for homogeneous `p` of degree
    /// `|α| + 2`.
    pub fn hessian_of_partial(&self, alpha: &[u32]) -> Result<Matrix> {
        self.check_len(alpha.len())?;
        if self.is_zero() {
            return Ok(Matrix::zeros(self.nvars));
        }
        let d = self.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        let a: u32 = alpha.iter().sum();
        if a + 2 != d {
            return Err(Error::DegreeMismatch(format!(
                "|α| = {a} but the polynomial has degree {d}; need |α| = d − 2"
            )));
        }
        let g = self.partial_multi(alpha)?;
        let mut m = Matrix::zeros(self.nvars);
        for i in 0..self.nvars {
            let gi = g.partial(i, 1);
            for j in 0..self.nvars {
                m[(i, j)] = gi.partial(j, 1).constant_term();
            }
        }
        Ok(m)
    }

    /// Exact invariance under the generators `(1 2)` and `(1 2 … n)` of the
    /// symmetric group.
    pub fn is_symmetric(&self) -> bool {
        if self.nvars < 2 {
            return true;
        }
        let mut swap: Vec<usize> = (0..self.nvars).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..self.nvars).map(|i| (i + 1) % self.nvars).collect();
        self.permute(&swap) == *self && self.permute(&cycle) == *self
    }

    /// Renames `x_i` to `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.nvars];
            for (i, &k) in m.0.iter().enumerate() {
                e[perm[i]] = k;
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Splits along the last variable: entry `k` is the coefficient of
    /// `x_n^k`, as a polynomial in the first `n − 1` variables.
    pub fn split_last_var(&self) -> Vec<MultiPoly> {
        assert!(self.nvars > 0);
        let n = self.nvars - 1;
        let mut out: Vec<MultiPoly> = Vec::new();
        for (m, c) in &self.terms {
            let k = m.0[n] as usize;
            while out.len() <= k {
                out.push(Self::zero(n));
            }
            out[k].add_term(m.0[..n].to_vec(), c.clone());
        }
        out
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_same(divisor)?;
        let (lm, lc) = divisor.leading().ok_or(Error::InexactDivision)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return Err(Error::InexactDivision);
            }
            let e: Vec<u32> = m.0.iter().zip(&lm.0).map(|(a, b)| a - b).collect();
            let t = Self::monomial(e, c / &lc);
            rem = rem.checked_sub(&t.mul_bounded(divisor, None))?;
            quot = quot.checked_add(&t)?;
        }
        Ok(quot)
    }

    /// True when every stored coefficient is strictly positive.
    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub fn all_coefficients_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Renders with variable names `{prefix}1 … {prefix}n`.
    pub fn display_with<'a>(&'a self, prefix: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, prefix }
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms()
            .map(|(e, c)| TermJson {
                exponents: e.to_vec(),
                coeff: rational::to_string(c),
            })
            .collect()
    }

    /// Rebuilds from the JSON term list. `nvars` is needed when the list is
    /// empty; otherwise it is checked against the exponent vectors.
    pub fn from_json_terms(terms: &[TermJson], nvars: Option<usize>) -> Result<Self> {
        let n = match (nvars, terms.first()) {
            (Some(n), _) => n,
            (None, Some(t)) => t.exponents.len(),
            (None, None) => 0,
        };
        let parsed = terms
            .iter()
            .map(|t| Ok((t.exponents.clone(), rational::parse(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(n, parsed)
    }
}

fn multi_factorial(m: &[u32]) -> BigInt {
    m.iter().map(|&k| rational::factorial(k)).product()
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms: Vec<TermJson> = Vec::deserialize(d)?;
        Self::from_json_terms(&terms, None).map_err(serde::de::Error::custom)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    /// Panics on a variable-count mismatch; see [`MultiPoly::checked_add`].
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

struct PolyDisplay<'a> {
    poly: &'a MultiPoly,
    prefix: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.poly.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("{}{}", self.prefix, i + 1)
                    } else {
                        format!("{}{}^{}", self.prefix, i + 1, p)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("x").fmt(f)
    }
}
