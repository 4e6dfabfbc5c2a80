//! Lorentzian certification of homogeneous polynomials and the identity
//! between Hessians of normalized polynomials and intersection forms.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::bundles::SplitBundle;
use crate::cohomology::Space;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::partitions::Partition;
use crate::polyring::MultiPoly;
use crate::quadforms::{inertia, intersection_form, InertiaTriple};
use crate::rational::{self, Rational};
use crate::schur::{compositions, schur_jt};

/// Default perturbation size for [`LorentzianMode::Perturbed`].
pub fn default_epsilon() -> Rational {
    rational::frac(1, 100)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LorentzianMode {
    /// Test the polynomial as given.
    Strict,
    /// Test the perturbed polynomial from [`perturbed_polynomial`].
    Perturbed(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HessianCheck {
    pub alpha: Vec<u32>,
    pub matrix: Vec<Vec<String>>,
    pub inertia: InertiaTriple,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LorentzianReport {
    pub mode: String,
    pub epsilon: Option<String>,
    pub degree: u32,
    /// The polynomial the strict test ran on.
    pub tested: String,
    pub positive_coefficients: bool,
    pub hessians: Vec<HessianCheck>,
    pub lorentzian: bool,
}

fn degree_at_least_two(p: &MultiPoly) -> Result<u32> {
    if p.is_zero() {
        return Err(Error::Invalid("the zero polynomial has no degree".into()));
    }
    let d = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if d < 2 {
        return Err(Error::DegreeMismatch(format!("need degree ≥ 2, got {d}")));
    }
    Ok(d)
}

fn strict_report(p: &MultiPoly, mode: String, epsilon: Option<String>) -> Result<LorentzianReport> {
    let d = degree_at_least_two(p)?;
    let positive = p.all_coefficients_positive();
    let mut hessians = Vec::new();
    for alpha in compositions(d - 2, p.nvars()) {
        let m = p.hessian_of_partial(&alpha)?;
        let tri = inertia(&m)?;
        hessians.push(HessianCheck {
            alpha,
            matrix: m.to_strings(),
            inertia: tri,
            ok: tri.n_plus == 1 && tri.n_zero == 0,
        });
    }
    let lorentzian = positive && hessians.iter().all(|h| h.ok);
    Ok(LorentzianReport {
        mode,
        epsilon,
        degree: d,
        tested: p.to_string(),
        positive_coefficients: positive,
        hessians,
        lorentzian,
    })
}

/// `p(x + ε Σ x)`.
pub fn shift_by_sum(p: &MultiPoly, eps: &Rational) -> Result<MultiPoly> {
    let n = p.nvars();
    let total = (0..n).fold(MultiPoly::zero(n), |acc, i| {
        acc.checked_add(&MultiPoly::var(n, i))
            .expect("same variable count")
    });
    let shift = total.scale(eps);
    let subs: Vec<MultiPoly> = (0..n)
        .map(|i| {
            MultiPoly::var(n, i)
                .checked_add(&shift)
                .expect("same variable count")
        })
        .collect();
    p.substitute(&subs)
}

fn box_size(raw: &MultiPoly, d: u32) -> u32 {
    raw.max_var_degree().max(d)
}

/// Reads `p` as a normalized polynomial `N(r)` and returns `N(r_ε)`, where
/// `r_ε` reverses `r` in a box of side `b = max(max per-variable degree, d)`,
/// shifts by `ε Σ x`, and reverses back. Monomials that would acquire a
/// negative exponent in the last reversal are dropped.
pub fn perturbed_polynomial(p: &MultiPoly, eps: &Rational) -> Result<MultiPoly> {
    let d = degree_at_least_two(p)?;
    if eps.is_negative() {
        return Err(Error::Invalid(format!(
            "ε = {} is negative",
            rational::to_string(eps)
        )));
    }
    let raw = p.denormalize();
    let b = box_size(&raw, d);
    let q = raw.box_reverse(b)?;
    let q_eps = shift_by_sum(&q, eps)?;
    Ok(q_eps.box_reverse_truncated(b).normalize())
}

/// Strict mode: every stored coefficient is positive and every Hessian
/// `∂^α p` with `|α| = d − 2` has exactly one positive and no zero
/// eigenvalue. Perturbed mode runs the strict test on
/// [`perturbed_polynomial`].
pub fn lorentzian_check(p: &MultiPoly, mode: &LorentzianMode) -> Result<LorentzianReport> {
    match mode {
        LorentzianMode::Strict => strict_report(p, "strict".into(), None),
        LorentzianMode::Perturbed(eps) => {
            let pe = perturbed_polynomial(p, eps)?;
            strict_report(&pe, "perturbed".into(), Some(rational::to_string(eps)))
        }
    }
}

/// Coefficient of `x^β` in `q · xᵢ · xⱼ`, zero when some `βₖ` is negative.
fn shifted_coefficient(q: &MultiPoly, beta: &[i64], i: usize, j: usize) -> Result<Rational> {
    let mut exps = Vec::with_capacity(beta.len());
    for (k, &b) in beta.iter().enumerate() {
        let b = b - i64::from(k == i) - i64::from(k == j);
        if b < 0 {
            return Ok(Rational::zero());
        }
        exps.push(b as u32);
    }
    q.coefficient(&exps)
}

/// The matrix `([q tᵢ tⱼ]_β)ᵢⱼ` with `q` the reversal of `p` in the box of
/// side `e′` and `βⱼ = e′ − αⱼ`.
pub fn reversed_coefficient_matrix(p: &MultiPoly, e_prime: u32, alpha: &[u32]) -> Result<Matrix> {
    let q = p.box_reverse(e_prime)?;
    let beta: Vec<i64> = alpha
        .iter()
        .map(|&a| i64::from(e_prime) - i64::from(a))
        .collect();
    let n = p.nvars();
    let mut m = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = shifted_coefficient(&q, &beta, i, j)?;
        }
    }
    Ok(m)
}

/// Checks `∂^α N(p) = ½ Σ [q tᵢ tⱼ]_β xᵢ xⱼ` exactly, for homogeneous `p`
/// of degree `d`, `|α| = d − 2` and `e′` at least every per-variable degree.
pub fn hessian_matches_reversal(p: &MultiPoly, e_prime: u32, alpha: &[u32]) -> Result<bool> {
    let d = degree_at_least_two(p)?;
    if alpha.len() != p.nvars() {
        return Err(Error::VariableMismatch {
            expected: p.nvars(),
            found: alpha.len(),
        });
    }
    if alpha.iter().sum::<u32>() + 2 != d {
        return Err(Error::DegreeMismatch(format!(
            "need |α| = d − 2 = {}",
            d - 2
        )));
    }
    if e_prime < p.max_var_degree() {
        return Err(Error::Precondition(format!(
            "e′ = {e_prime} is below the per-variable degree {}",
            p.max_var_degree()
        )));
    }
    let hess = p.normalize().hessian_of_partial(alpha)?;
    Ok(hess == reversed_coefficient_matrix(p, e_prime, alpha)?)
}

/// Both sides of the Hessian / intersection-form identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeSides {
    pub hessian: Matrix,
    pub intersection: Matrix,
    /// The product of projective spaces, with `P⁰` factors omitted.
    pub space: Space,
}

/// Builds `X = ∏ P^{βⱼ}` with `βⱼ = n − αⱼ`, the bundle `E′ = ⊕ O(τⱼ)⟨εh⟩`
/// and `λ̄` the complement of `λ` in the `e × n` box, and returns the Hessian
/// of `∂^α N(p_ε)` next to the intersection form of `s_λ̄(E′)`.
///
/// Factors with `βⱼ = 0` are omitted from `X`; their rows and columns of the
/// form are zero.
pub fn bridge_sides(
    lambda: &Partition,
    e: usize,
    n: usize,
    alpha: &[u32],
    eps: &Rational,
) -> Result<BridgeSides> {
    if lambda.first() as usize > e || e > n {
        return Err(Error::Precondition(format!(
            "need λ₁ ≤ e ≤ N, got λ = {lambda}, e = {e}, N = {n}"
        )));
    }
    if lambda.len() > n {
        return Err(Error::Precondition(format!(
            "λ = {lambda} has more than N = {n} parts"
        )));
    }
    if alpha.len() != e {
        return Err(Error::VariableMismatch {
            expected: e,
            found: alpha.len(),
        });
    }
    if lambda.weight() < 2 || alpha.iter().sum::<u32>() + 2 != lambda.weight() {
        return Err(Error::DegreeMismatch(format!(
            "need |α| = |λ| − 2 for λ = {lambda}"
        )));
    }
    if alpha.iter().any(|&a| a as usize > n) {
        return Err(Error::Precondition(format!("some αⱼ exceeds N = {n}")));
    }
    if eps.is_negative() {
        return Err(Error::Invalid("ε must be nonnegative".into()));
    }
    let dual = lambda.dual_in_box(e as u32, n)?;
    let q_eps = shift_by_sum(&schur_jt(&dual, e), eps)?;
    let p_eps = q_eps.box_reverse_truncated(n as u32);
    let hessian = p_eps.normalize().hessian_of_partial(alpha)?;

    let beta: Vec<u32> = alpha.iter().map(|&a| n as u32 - a).collect();
    let kept: Vec<usize> = (0..e).filter(|&j| beta[j] > 0).collect();
    let space = Space::new(kept.iter().map(|&j| beta[j]).collect())?;
    let lines: Vec<Vec<i64>> = (0..e)
        .map(|j| kept.iter().map(|&k| i64::from(k == j)).collect())
        .collect();
    let bundle = SplitBundle::new(&space, lines, vec![eps.clone(); kept.len()])?;
    let small = intersection_form(&bundle.schur_class(&dual), &space)?;
    let mut intersection = Matrix::zeros(e);
    for (a, &i) in kept.iter().enumerate() {
        for (b, &j) in kept.iter().enumerate() {
            intersection[(i, j)] = small[(a, b)].clone();
        }
    }
    Ok(BridgeSides {
        hessian,
        intersection,
        space,
    })
}

/// The Hessian of `∂^α N(p_ε)` equals the intersection form of `s_λ̄(E′)`.
pub fn hessian_vs_intersection(
    lambda: &Partition,
    e: usize,
    n: usize,
    alpha: &[u32],
    eps: &Rational,
) -> Result<bool> {
    let sides = bridge_sides(lambda, e, n, alpha, eps)?;
    Ok(sides.hessian == sides.intersection)
}
