//! Hodge-index type inequalities between intersection numbers.

use crate::bundles::SplitBundle;
use crate::cohomology::CohClass;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::quadforms::{inertia, intersection_form};
use crate::rational::{self, int, Rational};
use num_traits::Signed;
use serde::Serialize;

/// Both sides of `lhs ≤ rhs` and the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    #[serde(with = "rational::as_string")]
    pub lhs: Rational,
    #[serde(with = "rational::as_string")]
    pub rhs: Rational,
    pub ok: bool,
}

impl InequalityReport {
    pub fn new(lhs: Rational, rhs: Rational) -> Self {
        let ok = lhs <= rhs;
        Self { lhs, rhs, ok }
    }
}

fn integral(classes: &[&CohClass]) -> Result<Rational> {
    let mut acc = CohClass::one(classes[0].space());
    for c in classes {
        acc = acc.multiply(c)?;
    }
    Ok(acc.integrate())
}

fn require_degree_one(name: &str, c: &CohClass) -> Result<()> {
    if !c.is_homogeneous_of(1) {
        return Err(Error::DegreeMismatch(format!(
            "{name} must be a degree-1 class"
        )));
    }
    Ok(())
}

/// `∫α²Ω · ∫β²Ω ≤ (∫αβΩ)²` for `Ω` with the weak Hodge-Riemann property
/// and `∫β²Ω ≥ 0`; both preconditions are verified.
pub fn hodge_index_check(
    omega: &CohClass,
    alpha: &CohClass,
    beta: &CohClass,
) -> Result<InequalityReport> {
    require_degree_one("α", alpha)?;
    require_degree_one("β", beta)?;
    let q = intersection_form(omega, omega.space())?;
    let tri = inertia(&q)?;
    if !tri.is_weak_hr() {
        return Err(Error::Precondition(format!(
            "Ω does not have the weak Hodge-Riemann property (inertia {tri})"
        )));
    }
    let a = alpha.linear_coefficients()?;
    let b = beta.linear_coefficients()?;
    let bb = q.bilinear(&b, &b);
    if bb.is_negative() {
        return Err(Error::Precondition(format!(
            "∫β²Ω = {} is negative",
            rational::to_string(&bb)
        )));
    }
    let aa = q.bilinear(&a, &a);
    let ab = q.bilinear(&a, &b);
    Ok(InequalityReport::new(aa * bb, &ab * &ab))
}

/// `∫α² s_λ^{(1)}(E) · ∫h s_λ(E) ≤ 2 ∫αh s_λ^{(1)}(E) · ∫α s_λ(E)` for nef
/// `E`, nef `h` and `|λ| = d − 1`.
pub fn schur_hodge_improved_check(
    e: &SplitBundle,
    h: &CohClass,
    lambda: &Partition,
    alpha: &CohClass,
) -> Result<InequalityReport> {
    let space = e.space();
    if h.space() != space || alpha.space() != space {
        return Err(Error::SpaceMismatch("E, h and α must share a space".into()));
    }
    require_degree_one("h", h)?;
    require_degree_one("α", alpha)?;
    if !e.is_nef() {
        return Err(Error::Precondition(format!("E is not nef: {e}")));
    }
    if h.linear_coefficients()?.iter().any(|c| c.is_negative()) {
        return Err(Error::Precondition(format!("h = {h} is not nef")));
    }
    if lambda.weight() + 1 != space.dim() {
        return Err(Error::DegreeMismatch(format!(
            "need |λ| = d − 1 = {}, got {}",
            space.dim() as i64 - 1,
            lambda.weight()
        )));
    }
    let s = e.schur_class(lambda);
    let s1 = e.derived_schur_class(lambda, 1);
    let lhs = integral(&[alpha, alpha, &s1])? * integral(&[h, &s])?;
    let rhs = int(2) * integral(&[alpha, h, &s1])? * integral(&[alpha, &s])?;
    Ok(InequalityReport::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::example_bundle;
    use crate::cohomology::Space;

    #[test]
    fn hodge_index_examples() {
        let p4 = Space::projective(4).unwrap();
        let t = CohClass::hyperplane(&p4, 0);
        let r = hodge_index_check(&t.pow(2), &t, &t).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(1), int(1)));
        assert!(r.ok);

        let e = example_bundle();
        let s = e.space().clone();
        let omega = e.schur_class(&Partition::column(3));
        let a = CohClass::hyperplane(&s, 0);
        let b = CohClass::hyperplane(&s, 1);
        let r = hodge_index_check(&omega, &a, &b).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(3), int(4)));
        let a2 = a.sub(&b.scale(&int(2))).unwrap();
        assert!(hodge_index_check(&omega, &a2, &b).unwrap().ok);
    }

    #[test]
    fn hodge_index_preconditions() {
        let e = example_bundle();
        let s = e.space().clone();
        // (1−t)c₃ + t·s_(1,1,1) at t = 1/4 has two positive eigenvalues
        let t = rational::frac(1, 4);
        let omega = e
            .chern(3)
            .scale(&(int(1) - &t))
            .add(&e.schur_class(&Partition::column(3)).scale(&t))
            .unwrap();
        let a = CohClass::hyperplane(&s, 0);
        assert!(matches!(
            hodge_index_check(&omega, &a, &a),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn improved_examples() {
        let p3 = Space::projective(3).unwrap();
        let e = SplitBundle::untwisted(&p3, vec![vec![1], vec![1]]).unwrap();
        let t = CohClass::hyperplane(&p3, 0);
        let lam = Partition::new(vec![1, 1]).unwrap();
        assert!(schur_hodge_improved_check(&e, &t, &lam, &t).unwrap().ok);
        let zero = CohClass::zero(&p3);
        let r = schur_hodge_improved_check(&e, &t, &lam, &zero).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(0), int(0)));

        let e = example_bundle();
        let s = e.space().clone();
        let h = CohClass::hyperplane_sum(&s);
        let alpha = CohClass::linear(&s, &[int(1), int(-1)]).unwrap();
        let lam = Partition::new(vec![2, 1, 1]).unwrap();
        assert!(schur_hodge_improved_check(&e, &h, &lam, &alpha).unwrap().ok);
        assert!(schur_hodge_improved_check(&e, &h, &Partition::row(2), &alpha).is_err());
    }
}
