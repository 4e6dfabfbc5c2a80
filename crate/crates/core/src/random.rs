//! Seeded generators for random test instances.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bundles::SplitBundle;
use crate::cohomology::{CohClass, Space};
use crate::partitions::Partition;
use crate::rational::{frac, int, Rational};

/// SplitMix64 finalizer, used to derive independent per-instance seeds.
pub fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for instance `index` of stream `stream` under a master seed.
pub fn instance_seed(master: u64, stream: u64, index: u64) -> u64 {
    mix(mix(master ^ mix(stream)) ^ index)
}

pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform on the grid `{k / den : lo ≤ k / den ≤ hi}` for a random
/// `den ≤ max_den`.
pub fn rational_in<R: Rng>(rng: &mut R, lo: i64, hi: i64, max_den: i64) -> Rational {
    let den = rng.random_range(1..=max_den);
    frac(rng.random_range(lo * den..=hi * den), den)
}

/// Rational in the open interval `(0, hi)`.
pub fn positive_below<R: Rng>(rng: &mut R, hi: Rational, max_den: i64) -> Rational {
    loop {
        let den = rng.random_range(2..=max_den.max(2));
        let num = rng.random_range(1..den);
        let t = frac(num, den) * &hi;
        if t > int(0) && t < hi {
            return t;
        }
    }
}

/// Nonnegative rational point with coordinates in `[0, hi]`; about one
/// coordinate in eight is zero.
pub fn nonneg_point<R: Rng>(rng: &mut R, n: usize, hi: i64, max_den: i64) -> Vec<Rational> {
    (0..n)
        .map(|_| {
            if rng.random_bool(0.125) {
                int(0)
            } else {
                rational_in(rng, 0, hi, max_den)
            }
        })
        .collect()
}

/// Random composition of `total` into `parts` nonnegative integers.
pub fn composition<R: Rng>(rng: &mut R, total: u32, parts: usize) -> Vec<u32> {
    let mut out = vec![0u32; parts];
    for _ in 0..total {
        out[rng.random_range(0..parts)] += 1;
    }
    out
}

/// Product of at most three projective spaces of total dimension `d ≥ 1`.
pub fn space_of_dim<R: Rng>(rng: &mut R, d: u32) -> Space {
    let k = rng.random_range(1..=d.min(3) as usize);
    let mut factors = vec![1u32; k];
    for _ in 0..d - k as u32 {
        factors[rng.random_range(0..k)] += 1;
    }
    Space::new(factors).expect("positive factors")
}

/// Split bundle whose roots all have nonnegative coordinates. Twists are
/// rationals in `[0, 1]`; a line may dip to `−1` where the twist is 1.
pub fn nef_bundle<R: Rng>(rng: &mut R, space: &Space, rank: usize) -> SplitBundle {
    let k = space.k();
    let twist: Vec<Rational> = (0..k)
        .map(|_| {
            if rng.random_bool(0.5) {
                int(0)
            } else {
                rational_in(rng, 0, 1, 4)
            }
        })
        .collect();
    let lines = (0..rank)
        .map(|_| {
            (0..k)
                .map(|j| {
                    let floor = twist[j].floor().to_integer();
                    let lo: i64 = -i64::try_from(floor).expect("small twist");
                    rng.random_range(lo..=2)
                })
                .collect()
        })
        .collect();
    let b = SplitBundle::new(space, lines, twist).expect("consistent shapes");
    debug_assert!(b.is_nef());
    b
}

/// Split bundle with arbitrary integer lines in `[−2, 2]` and a rational
/// twist in `[−2, 2]`.
pub fn any_bundle<R: Rng>(rng: &mut R, space: &Space, rank: usize) -> SplitBundle {
    let k = space.k();
    let lines = (0..rank)
        .map(|_| (0..k).map(|_| rng.random_range(-2..=2)).collect())
        .collect();
    let twist = (0..k).map(|_| rational_in(rng, -2, 2, 5)).collect();
    SplitBundle::new(space, lines, twist).expect("consistent shapes")
}

/// Uniform among the partitions of `w` whose largest part is at most
/// `max_part`.
pub fn partition_of<R: Rng>(rng: &mut R, w: u32, max_part: Option<u32>) -> Option<Partition> {
    let all: Vec<Partition> = Partition::all_of(w)
        .into_iter()
        .filter(|p| max_part.is_none_or(|m| p.first() <= m))
        .collect();
    if all.is_empty() {
        return None;
    }
    let i = rng.random_range(0..all.len());
    Some(all[i].clone())
}

/// Nonzero degree-one class with nonnegative coefficients.
pub fn nef_class<R: Rng>(rng: &mut R, space: &Space) -> CohClass {
    loop {
        let coeffs: Vec<Rational> = (0..space.k()).map(|_| rational_in(rng, 0, 3, 3)).collect();
        let c = CohClass::linear(space, &coeffs).expect("one coefficient per factor");
        if !c.is_zero() {
            return c;
        }
    }
}

/// Degree-one class with coefficients in `[−3, 3]`.
pub fn degree_one_class<R: Rng>(rng: &mut R, space: &Space) -> CohClass {
    let coeffs: Vec<Rational> = (0..space.k()).map(|_| rational_in(rng, -3, 3, 4)).collect();
    CohClass::linear(space, &coeffs).expect("one coefficient per factor")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = rng_from(7);
        for _ in 0..200 {
            let d = rng.random_range(1..=6);
            let s = space_of_dim(&mut rng, d);
            assert_eq!(s.dim(), d);
            assert!(nef_bundle(&mut rng, &s, 3).is_nef());
            let c = composition(&mut rng, 5, 3);
            assert_eq!(c.iter().sum::<u32>(), 5);
            let t = positive_below(&mut rng, frac(1, 2), 40);
            assert!(t > int(0) && t < frac(1, 2));
            let p = partition_of(&mut rng, 6, Some(2)).unwrap();
            assert!(p.weight() == 6 && p.first() <= 2);
        }
        assert!(partition_of(&mut rng, 3, Some(0)).is_none());
        assert_eq!(partition_of(&mut rng, 0, Some(0)), Some(Partition::empty()));
    }

    #[test]
    fn seeds_are_reproducible_and_spread() {
        assert_eq!(instance_seed(1, 2, 3), instance_seed(1, 2, 3));
        assert_ne!(instance_seed(1, 2, 3), instance_seed(1, 2, 4));
        assert_ne!(instance_seed(1, 2, 3), instance_seed(1, 3, 3));
        let a: Vec<i64> = (0..5).map(|_| rng_from(9).random_range(0..1000)).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
    }
}
