//! Nonnegativity of top-degree (derived) Schur numbers of nef bundles.

use crate::bundles::SplitBundle;
use crate::cohomology::CohClass;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rational::Rational;

/// `∫_X s_λ^{(i)}(E)`, defined when `|λ| = d + i`.
pub fn fl_positivity(e: &SplitBundle, lambda: &Partition, i: i64) -> Result<Rational> {
    monomial_positivity(std::slice::from_ref(e), std::slice::from_ref(lambda), &[i])
}

/// `∫_X ∏ⱼ s_{λʲ}^{(iⱼ)}(Eⱼ)`, defined when `Σⱼ (|λʲ| − iⱼ) = d`.
pub fn monomial_positivity(
    bundles: &[SplitBundle],
    lambdas: &[Partition],
    shifts: &[i64],
) -> Result<Rational> {
    if bundles.is_empty() || bundles.len() != lambdas.len() || bundles.len() != shifts.len() {
        return Err(Error::Invalid(
            "need one partition and one shift per bundle".into(),
        ));
    }
    let space = bundles[0].space();
    for (j, b) in bundles.iter().enumerate() {
        if b.space() != space {
            return Err(Error::SpaceMismatch(format!(
                "bundle {j} lives on {}",
                b.space()
            )));
        }
        if !b.is_nef() {
            return Err(Error::Precondition(format!("bundle {j} is not nef: {b}")));
        }
    }
    let total: i64 = lambdas
        .iter()
        .zip(shifts)
        .map(|(l, &i)| l.weight() as i64 - i)
        .sum();
    if total != space.dim() as i64 || shifts.iter().any(|&i| i < 0) {
        return Err(Error::DegreeMismatch(format!(
            "need Σ(|λʲ| − iⱼ) = {} with iⱼ ≥ 0, got {total}",
            space.dim()
        )));
    }
    let mut acc = CohClass::one(space);
    for ((b, l), &i) in bundles.iter().zip(lambdas).zip(shifts) {
        acc = acc.multiply(&b.derived_schur_class(l, i))?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc.integrate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::Space;
    use crate::rational::int;
    use num_traits::{Signed, Zero};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn examples_on_the_plane() {
        let p2 = Space::projective(2).unwrap();
        let e = SplitBundle::untwisted(&p2, vec![vec![1], vec![1]]).unwrap();
        assert_eq!(fl_positivity(&e, &p(&[1, 1]), 0).unwrap(), int(3));
        // s_(2,1)(x + t) = (x₁+t)(x₂+t)(x₁+x₂+2t), so s^{(1)} = 2x₁x₂ + (x₁+x₂)²
        let v = fl_positivity(&e, &p(&[2, 1]), 1).unwrap();
        assert!(!v.is_negative());
        assert_eq!(v, int(6));
        assert!(fl_positivity(&e, &p(&[3]), 1).unwrap().is_zero());
        assert!(fl_positivity(&e, &p(&[1]), 0).is_err());
    }

    #[test]
    fn monomials() {
        let p3 = Space::projective(3).unwrap();
        let e1 = SplitBundle::untwisted(&p3, vec![vec![1], vec![2]]).unwrap();
        let e2 = SplitBundle::untwisted(&p3, vec![vec![0], vec![1], vec![3]]).unwrap();
        let v = monomial_positivity(&[e1.clone(), e2], &[p(&[2]), p(&[1])], &[0, 0]).unwrap();
        // c₂(E₁) c₁(E₂) = 2τ² · 4τ
        assert_eq!(v, int(8));
        let single = monomial_positivity(std::slice::from_ref(&e1), &[p(&[2, 1])], &[0]).unwrap();
        assert_eq!(single, fl_positivity(&e1, &p(&[2, 1]), 0).unwrap());
        let neg = SplitBundle::untwisted(&p3, vec![vec![-1]]).unwrap();
        assert!(fl_positivity(&neg, &p(&[1, 1, 1]), 0).is_err());
    }
}
