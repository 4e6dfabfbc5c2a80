//! Integer partitions: validation, conjugation, complement inside an
//! `e × N` box, and a brute-force semistandard tableau counter.
//!
//! A [`Partition`] keeps the parts it was built with (zero padding
//! included) but equality, ordering and hashing ignore trailing zeros.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::hash::{Hash, Hasher};

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The single-row partition `(p)`.
    pub fn row(p: u32) -> Self {
        Self { parts: vec![p] }
    }

    /// The single-column partition `(1, ..., 1)` with `n` boxes.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// Parses a comma separated list such as `"2,1,0"`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Self::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// Parts as stored, zero padding included.
    pub fn raw_parts(&self) -> &[u32] {
        &self.parts
    }

    /// Parts with trailing zeros removed.
    pub fn parts(&self) -> &[u32] {
        let n = self.parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        &self.parts[..n]
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Zero-padded copy of length `n`; fails if there are more than `n` nonzero parts.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        if self.len() > n {
            return Err(Error::InvalidPartition(format!(
                "{self} has more than {n} nonzero parts"
            )));
        }
        Ok((0..n).map(|i| self.part(i)).collect())
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.first())
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Self { parts }
    }

    /// Complement of `self` in the box with `n` rows of length `e`, read
    /// backwards: `λ̄ᵢ = e − λ_{N+1−i}` (1-based).
    pub fn dual_in_box(&self, e: u32, n: usize) -> Result<Self> {
        if self.first() > e {
            return Err(Error::InvalidPartition(format!(
                "{self} has a part larger than the box width {e}"
            )));
        }
        let padded = self.padded(n)?;
        Ok(Self {
            parts: padded.iter().rev().map(|&p| e - p).collect(),
        })
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Self> {
        fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.parts() == other.parts()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts().hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.parts().cmp(other.parts())
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Number of semistandard Young tableaux of the given shape whose entry `v`
/// (1-based) occurs exactly `weight[v-1]` times.
///
/// Plain backtracking over the cells in row-major order; meant as a test
/// oracle, not a fast path.
pub fn ssyt_count(shape: &Partition, weight: &[u32]) -> Result<u64> {
    let total: u32 = weight.iter().sum();
    if total != shape.weight() {
        return Err(Error::InvalidPartition(format!(
            "content {weight:?} has {total} entries but {shape} has {} boxes",
            shape.weight()
        )));
    }
    let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&r| vec![0; r]).collect();
    let mut remaining = weight.to_vec();
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut [Vec<usize>],
        remaining: &mut [u32],
    ) -> u64 {
        let Some(&(r, c)) = cells.get(k) else {
            return 1;
        };
        let lo_left = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let lo = lo_left.max(lo_above);
        let mut count = 0;
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[r][c] = v;
            count += fill(k + 1, cells, grid, remaining);
            remaining[v - 1] += 1;
        }
        grid[r][c] = 0;
        count
    }

    Ok(fill(0, &cells, &mut grid, &mut remaining))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::parse("2,x").is_err());
    }

    #[test]
    fn trailing_zeros_are_inert() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(p(&[2, 1, 0]).weight(), 3);
        assert_eq!(p(&[2, 1, 0]).len(), 2);
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    /// Column counts of the diagram, computed cell by cell.
    fn conjugate_by_cells(l: &Partition) -> Partition {
        let mut cols = vec![0u32; l.first() as usize];
        for &row in l.parts() {
            for c in cols.iter_mut().take(row as usize) {
                *c += 1;
            }
        }
        Partition::new(cols).unwrap()
    }

    #[test]
    fn conjugate_matches_cell_oracle() {
        for n in 0..=7 {
            for l in Partition::all_of(n) {
                assert_eq!(l.conjugate(), conjugate_by_cells(&l));
            }
        }
    }

    #[test]
    fn duals() {
        assert_eq!(p(&[1]).dual_in_box(1, 1).unwrap(), p(&[0]));
        assert_eq!(p(&[2, 1]).dual_in_box(2, 2).unwrap(), p(&[1, 0]));
        assert_eq!(p(&[0, 0]).dual_in_box(3, 2).unwrap(), p(&[3, 3]));
        assert!(p(&[3]).dual_in_box(2, 2).is_err());
        assert!(p(&[1, 1, 1]).dual_in_box(2, 2).is_err());
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(ssyt_count(&p(&[1, 1]), &[1, 1]).unwrap(), 1);
        assert_eq!(ssyt_count(&p(&[2]), &[1, 1]).unwrap(), 1);
        assert_eq!(ssyt_count(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(ssyt_count(&p(&[2, 1]), &[3, 0]).unwrap(), 0);
        assert!(ssyt_count(&p(&[2, 1]), &[1, 1]).is_err());
    }

    #[test]
    fn ssyt_standard_fillings_are_hook_length_counts() {
        // f^(3,2) = 5, f^(2,2,1) = 5, f^(3,1,1) = 6
        assert_eq!(ssyt_count(&p(&[3, 2]), &[1; 5]).unwrap(), 5);
        assert_eq!(ssyt_count(&p(&[2, 2, 1]), &[1; 5]).unwrap(), 5);
        assert_eq!(ssyt_count(&p(&[3, 1, 1]), &[1; 5]).unwrap(), 6);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn json_form() {
        let l = p(&[2, 1, 0]);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[2,1,0]");
        let back: Partition = serde_json::from_str("[2,1,0]").unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    fn small_partition() -> impl Strategy<Value = Partition> {
        (0u32..=6).prop_flat_map(|n| {
            let all = Partition::all_of(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(l in small_partition()) {
            prop_assert_eq!(l.conjugate().conjugate(), l);
        }

        #[test]
        fn dual_is_involution(l in small_partition(), e in 1u32..=5, n in 1usize..=5) {
            prop_assume!(l.first() <= e && l.len() <= n);
            let d = l.dual_in_box(e, n).unwrap();
            prop_assert_eq!(l.weight() + d.weight(), n as u32 * e);
            prop_assert_eq!(d.dual_in_box(e, n).unwrap(), l);
        }

        #[test]
        fn ssyt_count_symmetric_in_content(
            l in small_partition(),
            seed in any::<u64>(),
        ) {
            let n = l.weight();
            // a composition of n into 3 parts and one of its permutations
            let a = (seed % (n as u64 + 1)) as u32;
            let b = ((seed / 7) % ((n - a) as u64 + 1)) as u32;
            let w = [a, b, n - a - b];
            let perm = [w[2], w[0], w[1]];
            prop_assert_eq!(ssyt_count(&l, &w).unwrap(), ssyt_count(&l, &perm).unwrap());
        }
    }
}
