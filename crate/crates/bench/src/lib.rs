//! Fixtures shared by the benchmarks.

use hrschur::{CohClass, Partition, Space, SplitBundle};

/// Partitions of weight `w` with at most `e` columns, in a fixed order.
pub fn partitions_fitting(w: u32, e: u32) -> Vec<Partition> {
    Partition::all_of(w)
        .into_iter()
        .filter(|p| p.first() <= e)
        .collect()
}

/// A nef split bundle of rank `e` on `P^{n₁} × … × P^{n_k}` whose line
/// degrees cycle through the factors.
pub fn cycling_bundle(factors: &[u32], e: usize) -> SplitBundle {
    let space = Space::new(factors.to_vec()).expect("valid factors");
    let k = factors.len();
    let lines = (0..e)
        .map(|r| {
            (0..k)
                .map(|j| i64::from(j == r % k) + i64::from(r % 2 == 1))
                .collect()
        })
        .collect();
    SplitBundle::untwisted(&space, lines).expect("valid bundle")
}

/// `s_λ(E)` for a rank-`e` cycling bundle with `|λ| = dim − 2`.
pub fn form_class(factors: &[u32], e: usize, lambda: &Partition) -> CohClass {
    cycling_bundle(factors, e).schur_class(lambda)
}
