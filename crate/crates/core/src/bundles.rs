//! Formal `Q`-twisted split bundles `E⟨δ⟩ = (L₁ ⊕ ⋯ ⊕ L_e)⟨δ⟩` on a product
//! of projective spaces.
//!
//! A bundle is a list of line-bundle multidegrees together with a rational
//! twist; its Chern roots are `c₁(Lᵢ) + δ`. Every characteristic class is
//! obtained by evaluating a symmetric polynomial at the roots inside the
//! truncated cohomology ring.

use crate::cohomology::{evaluate_at, CohClass, Space};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyring::MultiPoly;
use crate::rational::{self, binomial, Rational};
use crate::schur;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitBundle {
    space: Space,
    lines: Vec<Vec<i64>>,
    twist: Vec<Rational>,
}

/// Config form of a bundle; the space is supplied separately.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct BundleJson {
    pub lines: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<Vec<String>>,
}

impl SplitBundle {
    pub fn new(space: &Space, lines: Vec<Vec<i64>>, twist: Vec<Rational>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::Invalid("a bundle needs at least one line".into()));
        }
        for (i, l) in lines.iter().enumerate() {
            if l.len() != space.k() {
                return Err(Error::SpaceMismatch(format!(
                    "line {i} has {} degrees but {space} has {} factors",
                    l.len(),
                    space.k()
                )));
            }
        }
        if twist.len() != space.k() {
            return Err(Error::SpaceMismatch(format!(
                "twist has {} entries but {space} has {} factors",
                twist.len(),
                space.k()
            )));
        }
        Ok(Self {
            space: space.clone(),
            lines,
            twist,
        })
    }

    pub fn untwisted(space: &Space, lines: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(space, lines, vec![Rational::zero(); space.k()])
    }

    /// `O^{⊕e}⟨δ⟩`: every root equals `δ`.
    pub fn trivial_twisted(space: &Space, e: usize, twist: Vec<Rational>) -> Result<Self> {
        Self::new(space, vec![vec![0; space.k()]; e], twist)
    }

    pub fn from_json(space: &Space, j: &BundleJson) -> Result<Self> {
        let twist = match &j.twist {
            Some(t) => t
                .iter()
                .map(|s| rational::parse(s))
                .collect::<Result<Vec<_>>>()?,
            None => vec![Rational::zero(); space.k()],
        };
        Self::new(space, j.lines.clone(), twist)
    }

    pub fn to_json(&self) -> BundleJson {
        BundleJson {
            lines: self.lines.clone(),
            twist: Some(rational::to_strings(&self.twist)),
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn rank(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Vec<i64>] {
        &self.lines
    }

    pub fn twist(&self) -> &[Rational] {
        &self.twist
    }

    /// Coordinates of the roots `ℓᵢ + δ` in the `τ` basis.
    pub fn root_coordinates(&self) -> Vec<Vec<Rational>> {
        self.lines
            .iter()
            .map(|l| {
                l.iter()
                    .zip(&self.twist)
                    .map(|(&a, d)| rational::int(a) + d)
                    .collect()
            })
            .collect()
    }

    pub fn roots(&self) -> Vec<CohClass> {
        self.root_coordinates()
            .iter()
            .map(|c| CohClass::linear(&self.space, c).expect("one coordinate per factor"))
            .collect()
    }

    /// The twist `δ` as a degree-1 class.
    pub fn twist_class(&self) -> CohClass {
        CohClass::linear(&self.space, &self.twist).expect("one coordinate per factor")
    }

    /// `E⟨δ + δ′⟩`.
    pub fn twisted(&self, delta: &[Rational]) -> Result<Self> {
        if delta.len() != self.space.k() {
            return Err(Error::SpaceMismatch(format!(
                "twist has {} entries but {} has {} factors",
                delta.len(),
                self.space,
                self.space.k()
            )));
        }
        let twist = self.twist.iter().zip(delta).map(|(a, b)| a + b).collect();
        Self::new(&self.space, self.lines.clone(), twist)
    }

    /// The same lines with the twist removed.
    pub fn untwist(&self) -> Self {
        Self::untwisted(&self.space, self.lines.clone()).expect("same shape")
    }

    /// `E ⊕ F`; both summands must carry the same twist.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch(format!(
                "{} vs {}",
                self.space, other.space
            )));
        }
        if self.twist != other.twist {
            return Err(Error::Invalid(
                "direct sums need summands with equal twists".into(),
            ));
        }
        let mut lines = self.lines.clone();
        lines.extend(other.lines.iter().cloned());
        Self::new(&self.space, lines, self.twist.clone())
    }

    /// `c(E) = ∏ (1 + rᵢ)`.
    pub fn total_chern(&self) -> CohClass {
        let one = CohClass::one(&self.space);
        self.roots().iter().fold(one.clone(), |acc, r| {
            acc.multiply(&one.add(r).expect("same space"))
                .expect("same space")
        })
    }

    /// `c_p(E⟨δ⟩)`; the unit for `p = 0` and zero outside `0..=e`.
    pub fn chern(&self, p: i64) -> CohClass {
        let c = self.chern_by_roots(p);
        debug_assert_eq!(
            c,
            self.chern_by_twist_rule(p),
            "twist rule disagrees at p = {p}"
        );
        c
    }

    pub fn chern_by_roots(&self, p: i64) -> CohClass {
        if p < 0 || p as usize > self.rank() {
            return CohClass::zero(&self.space);
        }
        self.total_chern().component(p as u32)
    }

    /// `Σ_k binom(e−k, p−k) c_k(E) δ^{p−k}` with `E` the untwisted bundle.
    pub fn chern_by_twist_rule(&self, p: i64) -> CohClass {
        let e = self.rank() as i64;
        if p < 0 || p > e {
            return CohClass::zero(&self.space);
        }
        let plain = self.untwist();
        let total = plain.total_chern();
        let delta = self.twist_class();
        let mut acc = CohClass::zero(&self.space);
        for k in 0..=p {
            let term = total
                .component(k as u32)
                .multiply(&delta.pow((p - k) as u32))
                .expect("same space")
                .scale(&binomial(e - k, p - k));
            acc = acc.add(&term).expect("same space");
        }
        acc
    }

    /// `p(r₁, …, r_e)` for a symmetric polynomial `p` in `e` variables.
    pub fn char_class(&self, p: &MultiPoly) -> Result<CohClass> {
        if p.nvars() != self.rank() {
            return Err(Error::VariableMismatch {
                expected: self.rank(),
                found: p.nvars(),
            });
        }
        if !p.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        evaluate_at(p, &self.roots())
    }

    /// `s_λ(E)`, evaluated through the Chern classes.
    pub fn schur_class(&self, lambda: &Partition) -> CohClass {
        let e = self.rank();
        if schur::vanishes(lambda, e) {
            return CohClass::zero(&self.space);
        }
        let cherns: Vec<CohClass> = (1..=e as i64).map(|p| self.chern(p)).collect();
        evaluate_at(&schur::schur_elementary_basis(lambda, e), &cherns)
            .expect("one Chern class per formal variable")
    }

    /// `s_λ^{(i)}(E)`.
    pub fn derived_schur_class(&self, lambda: &Partition, i: i64) -> CohClass {
        let e = self.rank();
        let p = schur::derived_schur(lambda, i, e);
        if p.is_zero() {
            return CohClass::zero(&self.space);
        }
        evaluate_at(&p, &self.roots()).expect("one root per variable")
    }

    /// Nef for split bundles: every root has nonnegative coordinates.
    pub fn is_nef(&self) -> bool {
        self.root_coordinates()
            .iter()
            .all(|r| r.iter().all(|c| !c.is_negative()))
    }
}

impl fmt::Display for SplitBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .lines
            .iter()
            .map(|l| {
                let d: Vec<String> = l.iter().map(|a| a.to_string()).collect();
                format!("O({})", d.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))?;
        if self.twist.iter().any(|t| !t.is_zero()) {
            write!(f, " <{}>", rational::to_strings(&self.twist).join(","))?;
        }
        Ok(())
    }
}

/// `E = O(1,0) ⊕ O(1,0) ⊕ O(0,1)` on `P² × P³`, the standard two-factor
/// example used throughout the checks.
pub fn example_bundle() -> SplitBundle {
    let space = Space::new(vec![2, 3]).expect("valid space");
    SplitBundle::untwisted(&space, vec![vec![1, 0], vec![1, 0], vec![0, 1]]).expect("valid bundle")
}
