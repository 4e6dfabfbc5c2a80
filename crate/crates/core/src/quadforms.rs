//! Intersection forms on `H^{1,1}` and their Sylvester inertia.

use crate::cohomology::{CohClass, Space};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Numbers of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InertiaTriple {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl InertiaTriple {
    pub fn dim(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    /// Nondegenerate with exactly one positive eigenvalue.
    pub fn is_hr(&self) -> bool {
        self.n_zero == 0 && self.n_plus == 1
    }

    /// A limit of forms with the Hodge-Riemann property: at most one positive
    /// eigenvalue and not negative definite.
    pub fn is_weak_hr(&self) -> bool {
        self.n_plus <= 1 && (self.n_plus == 1 || self.n_zero >= 1)
    }
}

impl fmt::Display for InertiaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// `Q_Ω(τᵢ, τⱼ) = ∫ τᵢ Ω τⱼ` over the hyperplane basis.
///
/// `Ω` must be homogeneous of degree `dim X − 2`; the zero class gives the
/// zero form.
pub fn intersection_form(omega: &CohClass, space: &Space) -> Result<Matrix> {
    if omega.space() != space {
        return Err(Error::SpaceMismatch(format!(
            "{} vs {}",
            omega.space(),
            space
        )));
    }
    let d = space.dim();
    if d < 2 {
        return Err(Error::DegreeMismatch(format!(
            "intersection forms need dimension ≥ 2, {space} has {d}"
        )));
    }
    if !omega.is_homogeneous_of(d - 2) {
        return Err(Error::DegreeMismatch(format!(
            "Ω must be homogeneous of degree {}, got {:?}",
            d - 2,
            omega.homogeneous_degree()
        )));
    }
    let basis = space.h11_basis();
    let k = basis.len();
    let mut m = Matrix::zeros(k);
    for i in 0..k {
        let left = basis[i].multiply(omega)?;
        for j in i..k {
            let v = left.multiply(&basis[j])?.integrate();
            m[(j, i)] = v.clone();
            m[(i, j)] = v;
        }
    }
    debug_assert!(m.is_symmetric());
    Ok(m)
}

/// Sylvester inertia by symmetric Gaussian elimination over the rationals.
///
/// A nonzero diagonal entry is used as a 1×1 pivot. When the remaining
/// diagonal is zero but some `a_ij ≠ 0`, the hyperbolic block on `{i, j}`
/// contributes one positive and one negative eigenvalue and is eliminated
/// through its Schur complement.
pub fn inertia(m: &Matrix) -> Result<InertiaTriple> {
    if !m.is_symmetric() {
        return Err(Error::AsymmetricMatrix);
    }
    let mut a: Vec<Vec<Rational>> = m.rows();
    let mut out = InertiaTriple {
        n_plus: 0,
        n_minus: 0,
        n_zero: 0,
    };
    while !a.is_empty() {
        let n = a.len();
        if let Some(p) = (0..n).find(|&i| !a[i][i].is_zero()) {
            let piv = a[p][p].clone();
            if piv.is_positive() {
                out.n_plus += 1;
            } else {
                out.n_minus += 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&i| i != p).collect();
            a = rest
                .iter()
                .map(|&i| {
                    rest.iter()
                        .map(|&j| &a[i][j] - &a[i][p] * &a[p][j] / &piv)
                        .collect()
                })
                .collect();
            continue;
        }
        let Some((p, q)) = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        else {
            out.n_zero += n;
            break;
        };
        out.n_plus += 1;
        out.n_minus += 1;
        // block [[0, b], [b, 0]] has inverse [[0, 1/b], [1/b, 0]]
        let inv_b = a[p][q].recip();
        let rest: Vec<usize> = (0..n).filter(|&i| i != p && i != q).collect();
        a = rest
            .iter()
            .map(|&i| {
                rest.iter()
                    .map(|&j| {
                        let corr = (&a[i][p] * &a[q][j] + &a[i][q] * &a[p][j]) * &inv_b;
                        &a[i][j] - corr
                    })
                    .collect()
            })
            .collect();
    }
    Ok(out)
}

pub fn is_hr(m: &Matrix) -> Result<bool> {
    Ok(inertia(m)?.is_hr())
}

pub fn is_weak_hr(m: &Matrix) -> Result<bool> {
    Ok(inertia(m)?.is_weak_hr())
}

/// Intersection form, inertia and both verdicts for one class.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FormReport {
    pub matrix: Matrix,
    pub inertia: InertiaTriple,
    pub hr: bool,
    pub weak_hr: bool,
}

pub fn form_report(omega: &CohClass) -> Result<FormReport> {
    let matrix = intersection_form(omega, omega.space())?;
    let inertia = inertia(&matrix)?;
    Ok(FormReport {
        hr: inertia.is_hr(),
        weak_hr: inertia.is_weak_hr(),
        matrix,
        inertia,
    })
}
