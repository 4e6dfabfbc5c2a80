//! Pólya frequency sequences: a minor-based test, a real-rootedness test,
//! and the characteristic classes built from them.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::sturm::Univariate;
use crate::bundles::SplitBundle;
use crate::cohomology::CohClass;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::partitions::Partition;
use crate::rational::{self, Rational};

/// Longest sequence accepted by [`polya_check_minors`].
pub const MAX_MINOR_LENGTH: usize = 8;

/// Minors of every order up to this bound are examined by
/// [`polya_check_minors`].
pub const DEFAULT_MINOR_ORDER: usize = 32;

/// Strips leading and trailing zeros and rescales to coprime integers.
/// Returns `None` when a negative entry is present.
fn integer_core(mus: &[Rational]) -> Option<Vec<BigInt>> {
    if mus.iter().any(|m| m.is_negative()) {
        return None;
    }
    let first = mus.iter().position(|m| !m.is_zero());
    let Some(first) = first else {
        return Some(Vec::new());
    };
    let last = mus
        .iter()
        .rposition(|m| !m.is_zero())
        .expect("nonzero entry");
    let core = &mus[first..=last];
    let l = core.iter().fold(BigInt::one(), |acc, m| acc.lcm(m.denom()));
    Some(core.iter().map(|m| (m * &l).to_integer()).collect())
}

/// Decides whether every minor of order at most `order` of the Toeplitz
/// matrix `(μ_{i−j})` is nonnegative.
///
/// The minors of order at most `K` are nonnegative exactly when the
/// specialization `h_k ↦ μ_k` is nonnegative on every Schur function with
/// at most `K` rows. Those values are the column-initial minors of the
/// Toeplitz matrix of `1/f(−z)`, which a dynamic program over row subsets
/// enumerates with one Laplace expansion per subset.
pub fn toeplitz_minors_nonneg(mus: &[Rational], order: usize) -> bool {
    let Some(mu) = integer_core(mus) else {
        return false;
    };
    if mu.len() <= 1 {
        return true;
    }
    let n = mu.len() - 1;
    let rows = order + n;
    assert!(rows <= 64, "row subsets are stored as 64-bit masks");
    // eta_k = mu_0^{k+1} [z^k] 1/f(-z), an integer sequence
    let mut eta: Vec<BigInt> = vec![BigInt::one()];
    let signed: Vec<BigInt> = (0..=n)
        .map(|i| {
            let g = if i % 2 == 0 { mu[i].clone() } else { -&mu[i] };
            g * mu[0].pow(i.saturating_sub(1) as u32)
        })
        .collect();
    for k in 1..rows {
        let mut acc = BigInt::zero();
        for i in 1..=k.min(n) {
            acc -= &signed[i] * &eta[k - i];
        }
        eta.push(acc);
    }
    let entry = |r: usize, c: usize| -> Option<&BigInt> { r.checked_sub(c).map(|k| &eta[k]) };

    let mut layer: HashMap<u64, BigInt> = HashMap::new();
    layer.insert(0, BigInt::one());
    for m in 1..=n {
        let c = m - 1;
        let mut next: HashMap<u64, BigInt> = HashMap::with_capacity(layer.len() * 4);
        let completed = for_each_subset(rows, m, |mask| {
            let mut det = BigInt::zero();
            let mut bits = mask;
            let mut pos = 0usize;
            while bits != 0 {
                let r = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if let (Some(v), Some(sub)) = (entry(r, c), layer.get(&(mask & !(1u64 << r)))) {
                    let term = v * sub;
                    if (pos + c) & 1 == 0 {
                        det += term;
                    } else {
                        det -= term;
                    }
                }
                pos += 1;
            }
            // rows at or beyond order + m belong to Schur functions with more than `order` rows
            let in_window = (64 - mask.leading_zeros() as usize) <= order + m;
            if det.is_negative() && in_window {
                return false;
            }
            if m < n && !det.is_zero() {
                next.insert(mask, det);
            }
            true
        });
        if !completed {
            return false;
        }
        layer = next;
    }
    true
}

/// Visits the `m`-element subsets of `0..n` as bitmasks in lexicographic
/// order; stops and returns `false` as soon as `f` does.
fn for_each_subset(n: usize, m: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    if m > n {
        return true;
    }
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        let mask = idx.iter().fold(0u64, |acc, &i| acc | (1u64 << i));
        if !f(mask) {
            return false;
        }
        let Some(i) = (0..m).rev().find(|&i| idx[i] < n - m + i) else {
            return true;
        };
        idx[i] += 1;
        for j in i + 1..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Every minor of the `size × size` leading section of `(μ_{i−j})`,
/// enumerated directly.
pub fn section_minors_nonneg(mus: &[Rational], size: usize) -> bool {
    let t = Matrix::from_rows(
        (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        i.checked_sub(j)
                            .and_then(|k| mus.get(k).cloned())
                            .unwrap_or_else(Rational::zero)
                    })
                    .collect()
            })
            .collect(),
    )
    .expect("square section");
    for m in 1..=size {
        let mut rows_ok = true;
        for_each_subset(size, m, |rmask| {
            let rows = mask_to_indices(rmask);
            rows_ok = for_each_subset(size, m, |cmask| {
                !t.minor(&rows, &mask_to_indices(cmask)).is_negative()
            });
            rows_ok
        });
        if !rows_ok {
            return false;
        }
    }
    true
}

fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1u64 << i) != 0).collect()
}

/// Total nonnegativity of the Toeplitz matrix `(μ_{i−j})`, examined up to
/// minors of order [`DEFAULT_MINOR_ORDER`].
pub fn polya_check_minors(mus: &[Rational]) -> Result<bool> {
    polya_check_minors_to_order(mus, DEFAULT_MINOR_ORDER)
}

pub fn polya_check_minors_to_order(mus: &[Rational], order: usize) -> Result<bool> {
    if mus.len() > MAX_MINOR_LENGTH {
        return Err(Error::Invalid(format!(
            "minor test accepts at most {MAX_MINOR_LENGTH} entries, got {}",
            mus.len()
        )));
    }
    Ok(toeplitz_minors_nonneg(mus, order))
}

/// Nonnegative entries and a generating polynomial `Σ μᵢ zⁱ` with only
/// real roots, decided by Sturm sequences.
pub fn polya_check_roots(mus: &[Rational]) -> bool {
    !mus.iter().any(|m| m.is_negative()) && Univariate::new(mus.to_vec()).is_real_rooted()
}

/// `Σ cᵢ ωᵢ`.
pub fn linear_combination(classes: &[CohClass], coeffs: &[Rational]) -> Result<CohClass> {
    if classes.len() != coeffs.len() || classes.is_empty() {
        return Err(Error::Invalid(format!(
            "{} classes but {} coefficients",
            classes.len(),
            coeffs.len()
        )));
    }
    let mut acc = CohClass::zero(classes[0].space());
    for (w, c) in classes.iter().zip(coeffs) {
        acc = acc.add(&w.scale(c))?;
    }
    Ok(acc)
}

/// `Σᵢ μᵢ s_λ^{(i)}(E) hⁱ` for `|λ| = d − 2`, nef `E` and nef `h`.
pub fn polya_combination_class(
    lambda: &Partition,
    e: &SplitBundle,
    h: &CohClass,
    mus: &[Rational],
) -> Result<CohClass> {
    let space = e.space();
    if h.space() != space {
        return Err(Error::SpaceMismatch(
            "h and E live on different spaces".into(),
        ));
    }
    if !h.is_homogeneous_of(1) {
        return Err(Error::DegreeMismatch("h must be a degree-1 class".into()));
    }
    if lambda.weight() + 2 != space.dim() {
        return Err(Error::DegreeMismatch(format!(
            "need |λ| = d − 2 = {}, got {}",
            space.dim() as i64 - 2,
            lambda.weight()
        )));
    }
    if !e.is_nef() {
        return Err(Error::Precondition(format!("E is not nef: {e}")));
    }
    if h.linear_coefficients()?.iter().any(|c| c.is_negative()) {
        return Err(Error::Precondition(format!("h = {h} is not nef")));
    }
    if mus.iter().any(|m| m.is_negative()) {
        return Err(Error::Invalid(format!(
            "coefficients must be nonnegative: {:?}",
            rational::to_strings(mus)
        )));
    }
    let mut acc = CohClass::zero(space);
    let mut hp = CohClass::one(space);
    for (i, mu) in mus.iter().enumerate() {
        if !mu.is_zero() {
            let term = e.derived_schur_class(lambda, i as i64).multiply(&hp)?;
            acc = acc.add(&term.scale(mu))?;
        }
        hp = hp.multiply(h)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::example_bundle;
    use crate::quadforms::{inertia, intersection_form};
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn minor_examples() {
        assert!(polya_check_minors(&q(&[1, 2, 1])).unwrap());
        assert!(!polya_check_minors(&q(&[1, 0, 1])).unwrap());
        assert!(polya_check_minors(&q(&[1])).unwrap());
        assert!(polya_check_minors(&q(&[])).unwrap());
        assert!(polya_check_minors(&q(&[0, 0, 2, 3, 1, 0])).unwrap());
        assert!(!polya_check_minors(&q(&[1, -1])).unwrap());
        assert!(polya_check_minors(&q(&[1; 9])).is_err());
    }

    #[test]
    fn root_examples() {
        assert!(polya_check_roots(&q(&[1, 2, 1])));
        assert!(!polya_check_roots(&q(&[1, 0, 1])));
        assert!(polya_check_roots(&q(&[2, 3, 1])));
        assert!(!polya_check_roots(&q(&[1, -3, 2])));
        assert!(polya_check_roots(&q(&[0, 0, 5])));
    }

    #[test]
    fn sequences_needing_high_order_minors() {
        // negative minors appear only beyond the (length × length) section
        for (v, needed) in [
            (&[1, 1, 1][..], 3),
            (&[4, 6, 6], 3),
            (&[3, 4, 2], 5),
            (&[0, 1, 4, 5], 6),
            (&[1, 2, 2, 1], 5),
        ] {
            let mus = q(v);
            assert!(!polya_check_roots(&mus));
            assert!(section_minors_nonneg(&mus, v.len()));
            assert!(!toeplitz_minors_nonneg(&mus, needed));
            assert!(toeplitz_minors_nonneg(&mus, needed - 1));
        }
        let near = vec![int(1), int(2), frac(101, 100)];
        assert!(!polya_check_roots(&near));
        assert!(!polya_check_minors(&near).unwrap());
        assert!(toeplitz_minors_nonneg(&near, 30));
        assert!(!toeplitz_minors_nonneg(&near, 31));
    }

    #[test]
    fn binomial_rows_and_products() {
        for n in 0..8 {
            let row: Vec<Rational> = (0..=n).map(|k| rational::binomial(n, k)).collect();
            let order = if n <= 5 { DEFAULT_MINOR_ORDER } else { 10 };
            assert!(polya_check_minors_to_order(&row, order).unwrap());
            assert!(polya_check_roots(&row));
        }
    }

    fn triple(p: usize, m: usize, z: usize) -> crate::quadforms::InertiaTriple {
        crate::quadforms::InertiaTriple {
            n_plus: p,
            n_minus: m,
            n_zero: z,
        }
    }

    #[test]
    fn combination_examples() {
        let e = example_bundle();
        let s = e.space().clone();
        let h = CohClass::hyperplane_sum(&s);
        let lam = Partition::new(vec![2, 1]).unwrap();
        let single = polya_combination_class(&lam, &e, &h, &q(&[1, 0, 0])).unwrap();
        assert_eq!(single, e.schur_class(&lam));
        let binom = polya_combination_class(&lam, &e, &h, &q(&[1, 3, 3, 1])).unwrap();
        let tri = inertia(&intersection_form(&binom, &s).unwrap()).unwrap();
        assert!(tri.is_weak_hr());
        assert!(polya_combination_class(&Partition::row(2), &e, &h, &q(&[1])).is_err());

        let c3 = e.chern(3);
        let s111 = e.schur_class(&Partition::column(3));
        for t in [frac(1, 10), frac(1, 4), frac(2, 5)] {
            let w = linear_combination(&[c3.clone(), s111.clone()], &[int(1) - &t, t]).unwrap();
            let tri = inertia(&intersection_form(&w, &s).unwrap()).unwrap();
            assert_eq!(tri, triple(2, 0, 0));
            assert!(!tri.is_weak_hr());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn schur_route_is_sandwiched_by_sections(v in prop::collection::vec(0i64..6, 1..5), k in 1usize..4) {
            let mus = q(&v);
            let n = mus.len().saturating_sub(1);
            let dp = toeplitz_minors_nonneg(&mus, k);
            if section_minors_nonneg(&mus, k + n) {
                prop_assert!(dp);
            }
            if dp {
                prop_assert!(section_minors_nonneg(&mus, k));
            }
        }

        #[test]
        fn real_rooted_products_pass_both(roots in prop::collection::vec(1i64..20, 0..6), scale in 1i64..5) {
            let mut coeffs = vec![int(scale)];
            for r in roots {
                let t = frac(r, 7);
                let mut next = vec![int(0); coeffs.len() + 1];
                for (i, c) in coeffs.iter().enumerate() {
                    next[i] += c;
                    next[i + 1] += c * &t;
                }
                coeffs = next;
            }
            prop_assert!(polya_check_roots(&coeffs));
            prop_assert!(toeplitz_minors_nonneg(&coeffs, 8));
        }
    }
}
