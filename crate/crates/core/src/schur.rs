//! Schur and derived Schur polynomials.
//!
//! Conventions follow the determinant in elementary symmetric polynomials:
//! `s_λ = det(c_{λ_r − r + s})`, so `s_(p) = c_p` and `s_λ` vanishes in `e`
//! variables exactly when `λ₁ > e`. The monomial expansion therefore counts
//! tableaux of the *conjugate* shape.
//!
//! Two independent routes are provided:
//! * [`schur_jt`]: fraction-free (Bareiss) determinant over the polynomial
//!   ring in `c₁ … c_e`, then substitution of the elementary polynomials;
//! * [`schur_ssyt`]: the tableau generating function built from
//!   [`ssyt_count`].
//!
//! Derived Schur polynomials `s_λ^{(i)}` are the coefficients of `tⁱ` in
//! `s_λ(x₁ + t, …, x_e + t)`.

use crate::error::{Error, Result};
use crate::partitions::{ssyt_count, Partition};
use crate::polyring::MultiPoly;
use crate::rational::{binomial, int, Rational};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// `i`-th elementary symmetric polynomial in `e` variables; zero outside `0..=e`.
pub fn elementary(i: i64, e: usize) -> MultiPoly {
    if i < 0 || i as usize > e {
        return MultiPoly::zero(e);
    }
    let i = i as usize;
    let mut terms = Vec::new();
    // walk all e-bit masks with i bits set
    fn go(start: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for j in start..=cur.len() - left {
            cur[j] = 1;
            go(j + 1, left - 1, cur, out);
            cur[j] = 0;
        }
    }
    go(0, i, &mut vec![0; e], &mut terms);
    MultiPoly::from_terms(e, terms.into_iter().map(|t| (t, Rational::one())))
        .expect("exponent vectors have length e")
}

/// `c_k` as a polynomial in the formal variables `c₁ … c_e`.
fn formal_elementary(k: i64, e: usize) -> MultiPoly {
    match k {
        0 => MultiPoly::one(e),
        k if k < 0 || k as usize > e => MultiPoly::zero(e),
        k => MultiPoly::var(e, k as usize - 1),
    }
}

/// Determinant of a square matrix of polynomials by Bareiss elimination.
pub fn poly_determinant(mut m: Vec<Vec<MultiPoly>>, nvars: usize) -> Result<MultiPoly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(MultiPoly::one(nvars));
    }
    let mut prev = MultiPoly::one(nvars);
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero(nvars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = (&m[k][k] * &m[i][j]).checked_sub(&(&m[i][k] * &m[k][j]))?;
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// `s_λ` written in the elementary symmetric polynomials: a polynomial in
/// the formal variables `c₁ … c_e` (displayed with prefix `c`).
pub fn schur_in_elementary(lambda: &Partition, e: usize) -> MultiPoly {
    let parts = lambda.parts();
    let n = parts.len();
    let matrix: Vec<Vec<MultiPoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|s| formal_elementary(parts[r] as i64 - r as i64 + s as i64, e))
                .collect()
        })
        .collect();
    poly_determinant(matrix, e).expect("Bareiss divisions over a domain are exact")
}

/// Replaces each formal `c_k` by the elementary polynomial in `e` variables.
pub fn elementary_to_monomial(p: &MultiPoly) -> MultiPoly {
    let e = p.nvars();
    let subs: Vec<MultiPoly> = (1..=e).map(|k| elementary(k as i64, e)).collect();
    p.substitute(&subs)
        .expect("one replacement per formal variable")
}

struct SchurEntry {
    elementary: MultiPoly,
    derived: Vec<MultiPoly>,
}

type Cache = Mutex<HashMap<(Vec<u32>, usize), Arc<SchurEntry>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn entry(lambda: &Partition, e: usize) -> Arc<SchurEntry> {
    let key = (lambda.parts().to_vec(), e);
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    // computed outside the lock; a racing duplicate is identical
    let elementary = schur_in_elementary(lambda, e);
    let s = elementary_to_monomial(&elementary);
    let derived = shift_coefficients(&s, lambda.weight() as usize);
    let value = Arc::new(SchurEntry {
        elementary,
        derived,
    });
    cache().lock().unwrap().entry(key).or_insert(value).clone()
}

/// Coefficients of `t⁰ … t^{top}` in `p(x₁ + t, …, x_e + t)`.
fn shift_coefficients(p: &MultiPoly, top: usize) -> Vec<MultiPoly> {
    let e = p.nvars();
    let t = MultiPoly::var(e + 1, e);
    let subs: Vec<MultiPoly> = (0..e).map(|j| &MultiPoly::var(e + 1, j) + &t).collect();
    let mut coeffs = p
        .substitute(&subs)
        .expect("one replacement per variable")
        .split_last_var();
    coeffs.resize(top + 1, MultiPoly::zero(e));
    coeffs
}

/// Jacobi–Trudi route: `det(c_{λ_r − r + s})` expanded in monomials.
pub fn schur_jt(lambda: &Partition, e: usize) -> MultiPoly {
    entry(lambda, e).derived[0].clone()
}

/// `s_λ` in the basis of elementary symmetric polynomials (cached).
pub fn schur_elementary_basis(lambda: &Partition, e: usize) -> MultiPoly {
    entry(lambda, e).elementary.clone()
}

/// Tableau route: `Σ_α #SSYT(λ', α) x^α` over weak compositions `α` of `|λ|`.
pub fn schur_ssyt(lambda: &Partition, e: usize) -> MultiPoly {
    let shape = lambda.conjugate();
    let n = lambda.weight();
    let mut terms = Vec::new();
    for alpha in compositions(n, e) {
        let count = ssyt_count(&shape, &alpha).expect("composition has the right weight");
        if count > 0 {
            terms.push((alpha, int(count as i64)));
        }
    }
    MultiPoly::from_terms(e, terms).expect("compositions have e parts")
}

/// Weak compositions of `n` into `parts` nonnegative parts.
pub fn compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(rem: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=rem {
            cur.push(k);
            go(rem - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, parts, &mut Vec::new(), &mut out);
    out
}

/// `s_λ^{(i)}` in `e` variables; zero for `i ∉ 0..=|λ|`.
pub fn derived_schur(lambda: &Partition, i: i64, e: usize) -> MultiPoly {
    if i < 0 || i > lambda.weight() as i64 {
        return MultiPoly::zero(e);
    }
    entry(lambda, e).derived[i as usize].clone()
}

/// All of `s_λ^{(0)}, …, s_λ^{(|λ|)}` (shared, cached).
pub fn derived_schur_all(lambda: &Partition, e: usize) -> Vec<MultiPoly> {
    entry(lambda, e).derived.clone()
}

/// One checked identity of a report.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: String,
    pub ok: bool,
}

/// Outcome of checking a list of closed-form identities for one `e`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdentityReport {
    pub e: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Checks the closed forms of the derived Schur polynomials of weight one
/// to three against [`derived_schur`]; requires `e ≥ 3`.
pub fn derived_schur_table_check(e: usize) -> Result<IdentityReport> {
    if e < 3 {
        return Err(Error::Precondition(format!("table needs e ≥ 3, got {e}")));
    }
    let ei = e as i64;
    let c = |k: i64| formal_elementary(k, e);
    let k = |v: Rational| MultiPoly::constant(e, v);
    let c1 = c(1);
    let c1sq = &c1 * &c1;
    let table: Vec<(&[u32], i64, &str, MultiPoly)> = vec![
        (&[1], 0, "c1", c(1)),
        (&[1], 1, "e", k(int(ei))),
        (&[2], 0, "c2", c(2)),
        (&[2], 1, "(e-1)c1", c(1).scale(&int(ei - 1))),
        (&[2], 2, "binom(e,2)", k(binomial(ei, 2))),
        (&[1, 1], 0, "c1^2 - c2", &c1sq - &c(2)),
        (&[1, 1], 1, "(e+1)c1", c(1).scale(&int(ei + 1))),
        (&[1, 1], 2, "binom(e+1,2)", k(binomial(ei + 1, 2))),
        (&[3], 0, "c3", c(3)),
        (&[3], 1, "(e-2)c2", c(2).scale(&int(ei - 2))),
        (&[3], 2, "binom(e-1,2)c1", c(1).scale(&binomial(ei - 1, 2))),
        (&[3], 3, "binom(e,3)", k(binomial(ei, 3))),
        (&[2, 1], 0, "c1c2 - c3", &(&c1 * &c(2)) - &c(3)),
        (
            &[2, 1],
            1,
            "2c2 + (e-1)c1^2",
            &c(2).scale(&int(2)) + &c1sq.scale(&int(ei - 1)),
        ),
        (&[2, 1], 2, "(e^2-1)c1", c(1).scale(&int(ei * ei - 1))),
        (&[2, 1], 3, "2binom(e+1,3)", k(binomial(ei + 1, 3) * int(2))),
        (
            &[1, 1, 1],
            0,
            "c1^3 - 2c1c2 + c3",
            &(&(&c1sq * &c1) - &(&c1 * &c(2)).scale(&int(2))) + &c(3),
        ),
        (
            &[1, 1, 1],
            1,
            "(e+2)(c1^2 - c2)",
            (&c1sq - &c(2)).scale(&int(ei + 2)),
        ),
        (
            &[1, 1, 1],
            2,
            "binom(e+2,2)c1",
            c(1).scale(&binomial(ei + 2, 2)),
        ),
        (&[1, 1, 1], 3, "binom(e+2,3)", k(binomial(ei + 2, 3))),
    ];
    let checks = table
        .into_iter()
        .map(|(parts, i, rhs, formal)| {
            let lambda = Partition::new(parts.to_vec()).expect("table partitions are valid");
            let ok = derived_schur(&lambda, i, e) == elementary_to_monomial(&formal);
            IdentityCheck {
                identity: format!("s_{lambda}^({i}) = {rhs}"),
                ok,
            }
        })
        .collect();
    Ok(IdentityReport { e, checks })
}

/// Checks `s_(p)^{(i)} = binom(e − p + i, i) c_{p−i}` for every
/// `1 ≤ p ≤ e` and `0 ≤ i ≤ p`.
pub fn chern_derived_check(e: usize) -> IdentityReport {
    let ei = e as i64;
    let mut checks = Vec::new();
    for p in 1..=ei {
        for i in 0..=p {
            let lhs = derived_schur(&Partition::row(p as u32), i, e);
            let rhs = elementary(p - i, e).scale(&binomial(ei - p + i, i));
            checks.push(IdentityCheck {
                identity: format!("s_({p})^({i}) = binom({},{i}) c_{}", ei - p + i, p - i),
                ok: lhs == rhs,
            });
        }
    }
    IdentityReport { e, checks }
}

/// `s_λ(x) = x₁^N ⋯ x_e^N · s_λ̄(1/x)` with `λ̄` the complement of `λ` in the
/// `e × N` box.
pub fn dual_reversal_check(lambda: &Partition, e: usize, n: usize) -> Result<bool> {
    let dual = lambda.dual_in_box(e as u32, n)?;
    let reversed = schur_jt(&dual, e).box_reverse(n as u32)?;
    Ok(reversed == schur_jt(lambda, e))
}

/// `true` if `s_λ` is identically zero in `e` variables.
pub fn vanishes(lambda: &Partition, e: usize) -> bool {
    lambda.first() as usize > e
}

/// Value of `s_λ^{(|λ|)}`, a constant.
pub fn top_derived_constant(lambda: &Partition, e: usize) -> Rational {
    let d = derived_schur(lambda, lambda.weight() as i64, e);
    if d.is_zero() {
        Rational::zero()
    } else {
        d.constant_term()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), int(*c)))).unwrap()
    }

    #[test]
    fn elementary_polys() {
        assert_eq!(elementary(1, 2), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(elementary(2, 2), poly(2, &[(&[1, 1], 1)]));
        assert_eq!(elementary(3, 2), MultiPoly::zero(2));
        assert_eq!(elementary(0, 2), MultiPoly::one(2));
        assert_eq!(elementary(-1, 2), MultiPoly::zero(2));
        assert_eq!(elementary(2, 4).len(), 6);
    }

    #[test]
    fn jacobi_trudi_examples() {
        let h2 = poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert_eq!(schur_jt(&p(&[1, 1]), 2), h2);
        let formal = schur_elementary_basis(&p(&[1, 1, 1]), 3);
        assert_eq!(formal.display_with("c").to_string(), "c1^3 - 2*c1*c2 + c3");
        assert_eq!(
            schur_jt(&p(&[2, 1]), 2),
            poly(2, &[(&[2, 1], 1), (&[1, 2], 1)])
        );
        assert_eq!(schur_jt(&Partition::empty(), 3), MultiPoly::one(3));
        assert_eq!(schur_jt(&p(&[3, 1]), 2), MultiPoly::zero(2));
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(schur_ssyt(&p(&[1, 1]), 2), schur_jt(&p(&[1, 1]), 2));
        assert_eq!(schur_ssyt(&p(&[1, 1, 1]), 1), poly(1, &[(&[3], 1)]));
        assert!(schur_ssyt(&p(&[3]), 1).is_zero());
        // shape (2,1) is self-conjugate: 6 monomials x_i²x_j plus 2·x1x2x3
        let s = schur_ssyt(&p(&[2, 1]), 3);
        assert_eq!(s.len(), 7);
        assert_eq!(s.coefficient(&[1, 1, 1]).unwrap(), int(2));
        assert_eq!(s.coefficient(&[2, 1, 0]).unwrap(), int(1));
        assert_eq!(s.terms().map(|(_, c)| c.clone()).sum::<Rational>(), int(8));
    }

    #[test]
    fn derived_examples() {
        assert_eq!(
            derived_schur(&p(&[1, 1]), 1, 2),
            elementary(1, 2).scale(&int(3))
        );
        assert_eq!(
            derived_schur(&p(&[1, 1]), 2, 2),
            MultiPoly::constant(2, int(3))
        );
        assert_eq!(
            derived_schur(&p(&[2]), 1, 4),
            elementary(1, 4).scale(&int(3))
        );
        assert_eq!(derived_schur(&p(&[2]), 3, 4), MultiPoly::zero(4));
        assert_eq!(derived_schur(&p(&[2]), -1, 4), MultiPoly::zero(4));
        assert_eq!(derived_schur(&p(&[2, 1]), 0, 3), schur_jt(&p(&[2, 1]), 3));
    }

    #[test]
    fn low_degree_table() {
        for e in 3..=5 {
            let r = derived_schur_table_check(e).unwrap();
            assert_eq!(r.checks.len(), 20);
            let bad: Vec<_> = r.checks.iter().filter(|c| !c.ok).collect();
            assert!(bad.is_empty(), "e = {e}: {bad:?}");
        }
        assert!(derived_schur_table_check(2).is_err());
    }

    #[test]
    fn chern_binomials() {
        for e in 1..=5 {
            assert!(chern_derived_check(e).all_ok());
        }
    }

    #[test]
    fn dual_reversal_examples() {
        assert!(dual_reversal_check(&p(&[2, 1]), 2, 2).unwrap());
        assert!(dual_reversal_check(&p(&[0]), 3, 1).unwrap());
        assert!(dual_reversal_check(&p(&[2, 2]), 2, 3).unwrap());
        assert!(dual_reversal_check(&p(&[3]), 2, 2).is_err());
    }

    #[test]
    fn top_derived_is_positive() {
        for n in 0..=5 {
            for l in Partition::all_of(n) {
                for e in 1..=4 {
                    let c = top_derived_constant(&l, e);
                    assert_eq!(c > Rational::zero(), !vanishes(&l, e), "{l} e={e}");
                }
            }
        }
    }

    #[test]
    fn bareiss_matches_cofactor_on_integers() {
        let m = |v: i64| MultiPoly::constant(1, int(v));
        let rows = vec![
            vec![m(0), m(1), m(2)],
            vec![m(1), m(0), m(3)],
            vec![m(4), m(-3), m(8)],
        ];
        assert_eq!(poly_determinant(rows, 1).unwrap(), m(-2));
    }

    fn small_partition(max: u32) -> impl Strategy<Value = Partition> {
        (0u32..=max).prop_flat_map(|n| {
            let all = Partition::all_of(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn derived_expansion_reproduces_shift(
            l in small_partition(5),
            e in 1usize..=3,
            pt in prop::collection::vec((-3i64..=3, 1i64..=3), 3),
            t in (-3i64..=3, 1i64..=3),
        ) {
            let x: Vec<Rational> = pt[..e].iter().map(|&(a, b)| frac(a, b)).collect();
            let t = frac(t.0, t.1);
            let mut acc = Rational::zero();
            for (i, d) in derived_schur_all(&l, e).iter().enumerate() {
                acc += d.evaluate(&x).unwrap() * num_traits::pow(t.clone(), i);
            }
            let shifted: Vec<Rational> = x.iter().map(|v| v + &t).collect();
            prop_assert_eq!(acc, schur_jt(&l, e).evaluate(&shifted).unwrap());
        }

        #[test]
        fn derived_coefficients_nonneg(l in small_partition(6), e in 1usize..=3) {
            for d in derived_schur_all(&l, e) {
                prop_assert!(d.all_coefficients_nonneg());
            }
        }

        #[test]
        fn vanishing_iff_first_part_exceeds_e(l in small_partition(6), e in 1usize..=4) {
            prop_assert_eq!(schur_jt(&l, e).is_zero(), vanishes(&l, e));
        }
    }
}
