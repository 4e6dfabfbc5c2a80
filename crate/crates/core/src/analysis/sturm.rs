//! Dense univariate polynomials over the rationals and Sturm root counting.

use crate::rational::Rational;
use num_traits::{Signed, Zero};

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Univariate(Vec<Rational>);

impl Univariate {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer((k as i64).into()))
                .collect(),
        )
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        let mut q = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let f = r.last().expect("nonempty") / d.lead();
            for (i, c) in d.0.iter().enumerate() {
                let v = &f * c;
                r[k + i] -= v;
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let l = a.lead().clone();
        Self::new(a.0.iter().map(|c| c / &l).collect())
    }

    /// `p / gcd(p, p′)`: same roots, all simple.
    pub fn squarefree(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone()];
        if self.is_zero() {
            return seq;
        }
        let mut cur = self.derivative();
        while !cur.is_zero() {
            let prev = seq.last().expect("nonempty").clone();
            seq.push(cur.clone());
            let r = prev.rem(&cur);
            cur = Self::new(r.0.iter().map(|c| -c).collect());
        }
        seq
    }

    /// Number of distinct real roots, from sign changes of the Sturm
    /// sequence at `±∞`.
    pub fn distinct_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let seq = self.sturm_sequence();
        let at_pos: Vec<bool> = seq.iter().map(|p| p.lead().is_positive()).collect();
        let at_neg: Vec<bool> = seq
            .iter()
            .map(|p| p.lead().is_positive() == (p.degree().expect("nonzero") % 2 == 0))
            .collect();
        let changes = |s: &[bool]| s.windows(2).filter(|w| w[0] != w[1]).count();
        changes(&at_neg) - changes(&at_pos)
    }

    /// True when every complex root is real. Constants (including zero)
    /// count as real-rooted.
    pub fn is_real_rooted(&self) -> bool {
        let sf = self.squarefree();
        match sf.degree() {
            None | Some(0) => true,
            Some(d) => sf.distinct_real_roots() == d,
        }
    }
}
