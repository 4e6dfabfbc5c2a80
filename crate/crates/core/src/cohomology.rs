//! The cohomology ring of `X = P^{n₁} × ⋯ × P^{n_k}`:
//! `Q[τ₁, …, τ_k] / (τ₁^{n₁+1}, …, τ_k^{n_k+1})`, where `τⱼ` is the pullback
//! of the hyperplane class of the `j`-th factor and `∫ τ₁^{n₁} ⋯ τ_k^{n_k} = 1`.

use crate::error::{Error, Result};
use crate::polyring::{MultiPoly, TermJson};
use crate::rational::Rational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpaceJson", into = "SpaceJson")]
pub struct Space {
    factors: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct SpaceJson {
    factors: Vec<u32>,
}

impl TryFrom<SpaceJson> for Space {
    type Error = Error;

    fn try_from(s: SpaceJson) -> Result<Self> {
        Space::new(s.factors)
    }
}

impl From<Space> for SpaceJson {
    fn from(s: Space) -> Self {
        SpaceJson { factors: s.factors }
    }
}

impl Space {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.is_empty() || factors.contains(&0) {
            return Err(Error::Invalid(format!(
                "a space needs at least one factor and every factor dimension ≥ 1, got {factors:?}"
            )));
        }
        Ok(Self { factors })
    }

    /// `P^n`.
    pub fn projective(n: u32) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    /// Number of factors, which is also `dim H^{1,1}`.
    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn dim(&self) -> u32 {
        self.factors.iter().sum()
    }

    /// `(τ₁, …, τ_k)`.
    pub fn h11_basis(&self) -> Vec<CohClass> {
        (0..self.k())
            .map(|j| CohClass::hyperplane(self, j))
            .collect()
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|n| format!("P^{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClass {
    space: Space,
    poly: MultiPoly,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CohClassJson {
    pub space: Space,
    pub terms: Vec<TermJson>,
}

impl CohClass {
    /// Image of a polynomial in `τ₁ … τ_k` in the ring.
    pub fn from_poly(space: &Space, poly: &MultiPoly) -> Result<Self> {
        if poly.nvars() != space.k() {
            return Err(Error::VariableMismatch {
                expected: space.k(),
                found: poly.nvars(),
            });
        }
        Ok(Self {
            space: space.clone(),
            poly: poly.truncate(space.factors()),
        })
    }

    pub fn zero(space: &Space) -> Self {
        Self {
            space: space.clone(),
            poly: MultiPoly::zero(space.k()),
        }
    }

    pub fn one(space: &Space) -> Self {
        Self::constant(space, Rational::one())
    }

    pub fn constant(space: &Space, c: Rational) -> Self {
        Self {
            space: space.clone(),
            poly: MultiPoly::constant(space.k(), c),
        }
    }

    /// `τⱼ` (0-based `j`).
    pub fn hyperplane(space: &Space, j: usize) -> Self {
        Self {
            space: space.clone(),
            poly: MultiPoly::var(space.k(), j),
        }
    }

    /// `Σⱼ coeffs[j] τⱼ`.
    pub fn linear(space: &Space, coeffs: &[Rational]) -> Result<Self> {
        if coeffs.len() != space.k() {
            return Err(Error::VariableMismatch {
                expected: space.k(),
                found: coeffs.len(),
            });
        }
        let terms = coeffs.iter().enumerate().map(|(j, c)| {
            let mut e = vec![0; space.k()];
            e[j] = 1;
            (e, c.clone())
        });
        Ok(Self {
            space: space.clone(),
            poly: MultiPoly::from_terms(space.k(), terms)?,
        })
    }

    /// `h = τ₁ + ⋯ + τ_k`.
    pub fn hyperplane_sum(space: &Space) -> Self {
        Self::linear(space, &vec![Rational::one(); space.k()]).expect("one coefficient per factor")
    }

    /// `c · τ^m`, zero when `m` exceeds a factor dimension.
    pub fn monomial(space: &Space, exponents: &[u32], c: Rational) -> Result<Self> {
        Self::from_poly(space, &MultiPoly::monomial(exponents.to_vec(), c))
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch(format!(
                "{} vs {}",
                self.space, other.space
            )));
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        Ok(Self {
            space: self.space.clone(),
            poly: self.poly.mul_truncated(&other.poly, self.space.factors())?,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        Ok(Self {
            space: self.space.clone(),
            poly: self.poly.checked_add(&other.poly)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        Ok(Self {
            space: self.space.clone(),
            poly: self.poly.checked_sub(&other.poly)?,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            space: self.space.clone(),
            poly: self.poly.scale(c),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.space);
        for _ in 0..k {
            out = out.multiply(self).expect("same space");
        }
        out
    }

    /// Coefficient of the point class `τ₁^{n₁} ⋯ τ_k^{n_k}`.
    pub fn integrate(&self) -> Rational {
        self.poly
            .coefficient(self.space.factors())
            .expect("exponent vector matches the space")
    }

    /// Degree-`p` part (complex degree, i.e. a class in `H^{p,p}`).
    pub fn component(&self, p: u32) -> Self {
        let terms = self
            .poly
            .terms()
            .filter(|(e, _)| e.iter().sum::<u32>() == p)
            .map(|(e, c)| (e.to_vec(), c.clone()));
        Self {
            space: self.space.clone(),
            poly: MultiPoly::from_terms(self.space.k(), terms).expect("same variable count"),
        }
    }

    /// Degree when homogeneous; `None` for zero or mixed-degree classes.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        self.poly.homogeneous_degree()
    }

    pub fn is_homogeneous_of(&self, p: u32) -> bool {
        self.is_zero() || self.homogeneous_degree() == Some(p)
    }

    /// Coefficients of a degree-1 class in the `τ` basis.
    pub fn linear_coefficients(&self) -> Result<Vec<Rational>> {
        if !self.is_homogeneous_of(1) {
            return Err(Error::DegreeMismatch("expected a degree-1 class".into()));
        }
        Ok((0..self.space.k())
            .map(|j| {
                let mut e = vec![0; self.space.k()];
                e[j] = 1;
                self.poly.coefficient(&e).expect("length k")
            })
            .collect())
    }

    fn constant_term_is_zero(&self) -> bool {
        self.poly.constant_term().is_zero()
    }

    pub fn to_json(&self) -> CohClassJson {
        CohClassJson {
            space: self.space.clone(),
            terms: self.poly.to_json_terms(),
        }
    }

    pub fn from_json(j: &CohClassJson) -> Result<Self> {
        let poly = MultiPoly::from_json_terms(&j.terms, Some(j.space.k()))?;
        Self::from_poly(&j.space, &poly)
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly.display_with("t"))
    }
}

/// Evaluates `p(v₁, …, v_n)` inside the ring, truncating after every product.
pub fn evaluate_at(p: &MultiPoly, values: &[CohClass]) -> Result<CohClass> {
    if p.nvars() != values.len() {
        return Err(Error::VariableMismatch {
            expected: p.nvars(),
            found: values.len(),
        });
    }
    let Some(space) = values.first().map(|v| v.space().clone()) else {
        return Err(Error::Invalid("cannot evaluate without values".into()));
    };
    for v in values {
        if *v.space() != space {
            return Err(Error::SpaceMismatch(format!("{} vs {}", space, v.space())));
        }
    }
    let dim = space.dim();
    let mut powers: Vec<Vec<CohClass>> =
        values.iter().map(|_| vec![CohClass::one(&space)]).collect();
    let mut acc = CohClass::zero(&space);
    for (m, c) in p.terms() {
        let mut term = CohClass::constant(&space, c.clone());
        for (i, &k) in m.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if k > dim && values[i].constant_term_is_zero() {
                term = CohClass::zero(&space);
                break;
            }
            while powers[i].len() <= k as usize {
                let next = powers[i]
                    .last()
                    .expect("starts at one")
                    .multiply(&values[i])?;
                powers[i].push(next);
            }
            term = term.multiply(&powers[i][k as usize])?;
            if term.is_zero() {
                break;
            }
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Sum of classes on a common space; the empty sum is an error because the
/// space is unknown.
pub fn sum<'a, I: IntoIterator<Item = &'a CohClass>>(classes: I) -> Result<CohClass> {
    let mut it = classes.into_iter();
    let first = it
        .next()
        .ok_or_else(|| Error::Invalid("empty sum of classes".into()))?
        .clone();
    it.try_fold(first, |acc, c| acc.add(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn p2p3() -> Space {
        Space::new(vec![2, 3]).unwrap()
    }

    fn mono(s: &Space, e: &[u32]) -> CohClass {
        CohClass::monomial(s, e, int(1)).unwrap()
    }

    #[test]
    fn rejects_bad_spaces() {
        assert!(Space::new(vec![]).is_err());
        assert!(Space::new(vec![2, 0]).is_err());
        let s: Space = serde_json::from_str(r#"{"factors":[2,3]}"#).unwrap();
        assert_eq!(s, p2p3());
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"factors":[2,3]}"#);
        assert!(serde_json::from_str::<Space>(r#"{"factors":[0]}"#).is_err());
    }

    #[test]
    fn products_truncate() {
        let s = p2p3();
        let a = CohClass::hyperplane(&s, 0);
        assert!(a.multiply(&a.pow(2)).unwrap().is_zero());
        assert_eq!(
            mono(&s, &[2, 2]).multiply(&mono(&s, &[0, 1])).unwrap(),
            mono(&s, &[2, 3])
        );
        let p2 = Space::projective(2).unwrap();
        let t = CohClass::hyperplane(&p2, 0);
        assert_eq!(t.multiply(&t).unwrap(), mono(&p2, &[2]));
        assert!(a.multiply(&t).is_err());
    }

    #[test]
    fn integration() {
        let s = p2p3();
        assert_eq!(mono(&s, &[2, 3]).integrate(), int(1));
        assert_eq!(mono(&s, &[2, 2]).integrate(), int(0));
        let p4 = Space::projective(4).unwrap();
        assert_eq!(
            CohClass::monomial(&p4, &[4], int(7)).unwrap().integrate(),
            int(7)
        );
        assert_eq!(s.dim(), 5);
    }

    #[test]
    fn h11() {
        assert_eq!(p2p3().h11_basis().len(), 2);
        assert_eq!(Space::projective(5).unwrap().h11_basis().len(), 1);
        assert_eq!(Space::new(vec![1, 1, 1]).unwrap().h11_basis().len(), 3);
    }

    #[test]
    fn components_and_linear() {
        let s = p2p3();
        let c = CohClass::linear(&s, &[frac(1, 2), int(2)]).unwrap();
        assert_eq!(c.linear_coefficients().unwrap(), vec![frac(1, 2), int(2)]);
        let mixed = c.add(&CohClass::one(&s)).unwrap();
        assert_eq!(mixed.homogeneous_degree(), None);
        assert_eq!(mixed.component(1), c);
        assert!(mixed.linear_coefficients().is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = p2p3();
        let c = CohClass::linear(&s, &[frac(1, 2), int(-2)]).unwrap().pow(2);
        let back = CohClass::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }

    /// Random class on P^2 x P^1 x P^2 with small integer coefficients.
    fn arb_class() -> impl Strategy<Value = CohClass> {
        let s = Space::new(vec![2, 1, 2]).unwrap();
        prop::collection::vec((0u32..=2, 0u32..=1, 0u32..=2, -3i64..=3), 0..6).prop_map(move |ts| {
            let p = MultiPoly::from_terms(
                3,
                ts.into_iter().map(|(a, b, c, v)| (vec![a, b, c], int(v))),
            )
            .unwrap();
            CohClass::from_poly(&s, &p).unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_laws(u in arb_class(), v in arb_class(), w in arb_class()) {
            prop_assert_eq!(u.multiply(&v).unwrap(), v.multiply(&u).unwrap());
            prop_assert_eq!(
                u.multiply(&v).unwrap().multiply(&w).unwrap(),
                u.multiply(&v.multiply(&w).unwrap()).unwrap()
            );
            prop_assert_eq!(
                u.multiply(&v).unwrap().integrate(),
                v.multiply(&u).unwrap().integrate()
            );
        }
    }

    #[test]
    fn poincare_pairing_is_a_permutation() {
        let s = Space::new(vec![2, 1, 2]).unwrap();
        let d = s.dim();
        for p in 0..=d {
            let low: Vec<Vec<u32>> = crate::schur::compositions(p, 3)
                .into_iter()
                .filter(|e| e.iter().zip(s.factors()).all(|(a, b)| a <= b))
                .collect();
            let high: Vec<Vec<u32>> = crate::schur::compositions(d - p, 3)
                .into_iter()
                .filter(|e| e.iter().zip(s.factors()).all(|(a, b)| a <= b))
                .collect();
            assert_eq!(low.len(), high.len());
            for u in &low {
                let row: Vec<Rational> = high
                    .iter()
                    .map(|v| mono(&s, u).multiply(&mono(&s, v)).unwrap().integrate())
                    .collect();
                assert_eq!(row.iter().filter(|x| x.is_one()).count(), 1);
                assert_eq!(row.iter().filter(|x| x.is_zero()).count(), row.len() - 1);
            }
        }
    }
}
