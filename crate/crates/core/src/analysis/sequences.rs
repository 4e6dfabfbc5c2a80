//! Log-concavity, and the sequences of characteristic numbers and derived
//! Schur values that should be log-concave.

use crate::bundles::SplitBundle;
use crate::cohomology::CohClass;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rational::{self, binomial, Rational};
use crate::schur;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// A finite sequence `a_start, a_start+1, …` with a label saying where it
/// came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sequence {
    pub label: String,
    pub start: i64,
    #[serde(with = "rational::vec_as_string")]
    pub values: Vec<Rational>,
}

impl Sequence {
    pub fn new(label: impl Into<String>, start: i64, values: Vec<Rational>) -> Self {
        Self {
            label: label.into(),
            start,
            values,
        }
    }

    pub fn is_log_concave(&self) -> bool {
        is_log_concave(&self.values)
    }

    /// Value at index `i`, zero outside the stored range.
    pub fn at(&self, i: i64) -> Rational {
        usize::try_from(i - self.start)
            .ok()
            .and_then(|k| self.values.get(k).cloned())
            .unwrap_or_else(Rational::zero)
    }
}

/// Why a sequence fails to be log-concave.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LogConcavityFailure {
    Negative { index: usize },
    Inequality { index: usize },
}

/// First failure of `a_{i−1} a_{i+1} ≤ a_i²` (or of nonnegativity).
pub fn log_concavity_failure(a: &[Rational]) -> Option<LogConcavityFailure> {
    if let Some(index) = a.iter().position(|v| v.is_negative()) {
        return Some(LogConcavityFailure::Negative { index });
    }
    (1..a.len().saturating_sub(1))
        .find(|&i| &a[i - 1] * &a[i + 1] > &a[i] * &a[i])
        .map(|index| LogConcavityFailure::Inequality { index })
}

pub fn is_log_concave(a: &[Rational]) -> bool {
    log_concavity_failure(a).is_none()
}

/// `a_i / binom(n, i)` log-concave, with `n = len − 1`.
pub fn is_ultra_log_concave(a: &[Rational]) -> bool {
    let n = a.len() as i64 - 1;
    let scaled: Vec<Rational> = a
        .iter()
        .enumerate()
        .map(|(i, v)| v / binomial(n, i as i64))
        .collect();
    is_log_concave(&scaled)
}

fn check_nef(label: &str, e: &SplitBundle) -> Result<()> {
    if !e.is_nef() {
        return Err(Error::Precondition(format!("{label} is not nef: {e}")));
    }
    Ok(())
}

/// `i ↦ ∫ s_λ^{(|λ|+|μ|−d−i)}(E) s_μ^{(i)}(F)` over
/// `max(0, |μ|−d) ≤ i ≤ min(|μ|, |λ|+|μ|−d)`.
pub fn kt_sequence(
    e: &SplitBundle,
    f: &SplitBundle,
    lambda: &Partition,
    mu: &Partition,
) -> Result<Sequence> {
    if e.space() != f.space() {
        return Err(Error::SpaceMismatch(format!(
            "{} vs {}",
            e.space(),
            f.space()
        )));
    }
    check_nef("E", e)?;
    check_nef("F", f)?;
    let d = e.space().dim() as i64;
    let (l, m) = (lambda.weight() as i64, mu.weight() as i64);
    if l + m < d {
        return Err(Error::DegreeMismatch(format!(
            "need |λ| + |μ| ≥ d, got {l} + {m} < {d}"
        )));
    }
    let lo = 0.max(m - d);
    let hi = m.min(l + m - d);
    let values = (lo..=hi)
        .map(|i| {
            let j = l + m - d - i;
            e.derived_schur_class(lambda, j)
                .multiply(&f.derived_schur_class(mu, i))
                .map(|c| c.integrate())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Sequence::new(format!("kt {lambda} {mu}"), lo, values))
}

fn check_h(h: &CohClass, e: &SplitBundle) -> Result<()> {
    if h.space() != e.space() {
        return Err(Error::SpaceMismatch(format!(
            "{} vs {}",
            h.space(),
            e.space()
        )));
    }
    let coeffs = h.linear_coefficients()?;
    if coeffs.iter().any(|c| c.is_negative()) {
        return Err(Error::Precondition(format!("h = {h} is not nef")));
    }
    Ok(())
}

/// `i ↦ ∫ c_i(E) h^{d−i}` for `i = 0..=d`.
pub fn chern_h_sequence(e: &SplitBundle, h: &CohClass) -> Result<Sequence> {
    check_nef("E", e)?;
    check_h(h, e)?;
    let d = e.space().dim();
    let values = (0..=d)
        .map(|i| {
            e.chern(i as i64)
                .multiply(&h.pow(d - i))
                .map(|c| c.integrate())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Sequence::new("chern-h", 0, values))
}

/// `i ↦ ∫ s_λ^{(d−i)}(E) h^{d−i}` for `|λ| = d`, `i = 0..=d`.
pub fn schur_h_sequence(e: &SplitBundle, lambda: &Partition, h: &CohClass) -> Result<Sequence> {
    check_nef("E", e)?;
    check_h(h, e)?;
    let d = e.space().dim();
    if lambda.weight() != d {
        return Err(Error::DegreeMismatch(format!(
            "need |λ| = d = {d}, got {}",
            lambda.weight()
        )));
    }
    let values = (0..=d)
        .map(|i| {
            e.derived_schur_class(lambda, (d - i) as i64)
                .multiply(&h.pow(d - i))
                .map(|c| c.integrate())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Sequence::new(format!("schur-h {lambda}"), 0, values))
}

fn check_point(x: &[Rational]) -> Result<()> {
    if x.iter().any(|v| v.is_negative()) {
        return Err(Error::Precondition("point must be nonnegative".into()));
    }
    if x.is_empty() {
        return Err(Error::Precondition(
            "point must have at least one coordinate".into(),
        ));
    }
    Ok(())
}

/// `(s_λ^{(i)}(x))_{i = 0..=|λ|}`.
pub fn derived_value_sequence(lambda: &Partition, x: &[Rational]) -> Result<Sequence> {
    check_point(x)?;
    let values = schur::derived_schur_all(lambda, x.len())
        .iter()
        .map(|p| p.evaluate(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(Sequence::new(format!("derived {lambda}"), 0, values))
}

/// `i ↦ s_λ^{(|λ|+|μ|−d+i)}(x) · s_μ^{(i)}(y)` over the indices where both
/// factors can be nonzero, `0 ≤ i ≤ min(|μ|, d − |μ|)`.
pub fn pair_value_sequence(
    lambda: &Partition,
    mu: &Partition,
    d: i64,
    x: &[Rational],
    y: &[Rational],
) -> Result<Sequence> {
    check_point(x)?;
    check_point(y)?;
    let (l, m) = (lambda.weight() as i64, mu.weight() as i64);
    if d > l + m {
        return Err(Error::DegreeMismatch(format!(
            "need d ≤ |λ| + |μ|, got {d} > {l} + {m}"
        )));
    }
    let hi = m.min(d - m);
    let values = (0..=hi)
        .map(|i| {
            let a = schur::derived_schur(lambda, l + m - d + i, x.len()).evaluate(x)?;
            let b = schur::derived_schur(mu, i, y.len()).evaluate(y)?;
            Ok(a * b)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Sequence::new(
        format!("pair {lambda} {mu} d={d}"),
        0,
        values,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::Space;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| int(a)).collect()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn log_concavity_examples() {
        assert!(is_log_concave(&ints(&[1, 2, 3, 2, 1])));
        assert!(!is_log_concave(&ints(&[1, 1, 2])));
        assert!(is_log_concave(&ints(&[1, 3, 3, 1])));
        assert!(is_ultra_log_concave(&ints(&[1, 3, 3, 1])));
        assert!(!is_log_concave(&ints(&[1, -1, 1])));
        assert!(is_log_concave(&ints(&[1, 0, 0])));
        // interior zeros only need the bare inequality
        assert!(!is_log_concave(&ints(&[1, 0, 1])));
        assert!(is_log_concave(&ints(&[0, 0, 1, 0])));
        assert!(is_log_concave(&[]));
    }

    #[test]
    fn derived_values() {
        let s = derived_value_sequence(&p(&[1, 1]), &ints(&[1, 1])).unwrap();
        assert_eq!(s.values, ints(&[3, 6, 3]));
        let z = derived_value_sequence(&p(&[2, 1]), &ints(&[0, 0, 0])).unwrap();
        assert!(z.values[..3].iter().all(|v| v.is_zero()));
        assert!(z.values[3] > int(0));
        assert!(derived_value_sequence(&p(&[1]), &ints(&[-1])).is_err());
    }

    #[test]
    fn newton_for_rows() {
        // s_(e)^{(i)} = c_{e−i}: the reversed elementary symmetric values
        let x = vec![frac(1, 2), int(3), frac(2, 7), int(1)];
        let s = derived_value_sequence(&Partition::row(4), &x).unwrap();
        let mut expect: Vec<Rational> = (0..=4)
            .map(|i| schur::elementary(i, 4).evaluate(&x).unwrap())
            .collect();
        expect.reverse();
        assert_eq!(s.values, expect);
        assert!(is_ultra_log_concave(&s.values));
    }

    #[test]
    fn pair_values() {
        let s = pair_value_sequence(&p(&[1]), &p(&[1]), 2, &ints(&[1]), &ints(&[1])).unwrap();
        assert_eq!(s.values, ints(&[1, 1]));
        let s = pair_value_sequence(&p(&[1]), &p(&[1]), 2, &ints(&[0]), &ints(&[2])).unwrap();
        assert!(s.is_log_concave());
        assert!(pair_value_sequence(&p(&[1]), &p(&[1]), 3, &ints(&[1]), &ints(&[1])).is_err());
    }

    #[test]
    fn kt_small() {
        let p2 = Space::projective(2).unwrap();
        let e = SplitBundle::untwisted(&p2, vec![vec![1], vec![1]]).unwrap();
        let s = kt_sequence(&e, &e, &p(&[1, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(s.start, 0);
        assert_eq!(s.values.len(), 3);
        // roots (τ, τ): s^{(0)} = 3τ², s^{(1)} = 6τ, s^{(2)} = 3
        assert_eq!(s.values, ints(&[9, 36, 9]));
        assert!(s.is_log_concave());
        assert!(s.at(-1).is_zero() && s.at(5).is_zero());
    }

    #[test]
    fn kt_row_case_is_binomially_weighted_chern_sequence() {
        let s = Space::new(vec![1, 2]).unwrap();
        let e = SplitBundle::untwisted(&s, vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let h = CohClass::linear(&s, &[int(1), int(2)]).unwrap();
        let d = s.dim() as usize;
        let f = SplitBundle::trivial_twisted(&s, d, vec![int(1), int(2)]).unwrap();
        let kt = kt_sequence(&e, &f, &Partition::row(3), &Partition::row(d as u32)).unwrap();
        let ch = chern_h_sequence(&e, &h).unwrap();
        for (i, v) in kt.values.iter().enumerate() {
            let i = i as i64 + kt.start;
            assert_eq!(*v, binomial(d as i64, i) * ch.at(i));
        }
        assert!(ch.is_log_concave());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn derived_sequences_log_concave(
            w in 1u32..=5, pick in any::<prop::sample::Index>(),
            x in prop::collection::vec((0i64..=10, 1i64..=5), 1..=3),
        ) {
            let parts = Partition::all_of(w);
            let lam = &parts[pick.index(parts.len())];
            let x: Vec<Rational> = x.into_iter().map(|(a, b)| frac(a, b)).collect();
            prop_assert!(derived_value_sequence(lam, &x).unwrap().is_log_concave());
        }
    }
}
