//! Integer partitions with the two statistics the character sum needs:
//! the dimension of the irreducible representation (hook-length formula)
//! and the content sum, which is the transposition central character scaled
//! by the class size.

use std::fmt;

use num_bigint::BigUint;

use crate::arith::factorial;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition { parts });
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts first; zero parts are still rejected.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Dimension of the irreducible representation, `d! / prod(hooks)`.
    pub fn irrep_dimension(&self) -> BigUint {
        let conj = self.conjugate();
        let mut hooks = BigUint::from(1u32);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j as usize] - i as u32 - 1;
                hooks *= arm + leg + 1;
            }
        }
        factorial(self.size()) / hooks
    }

    /// `sum over cells (i, j) of (j - i)`.
    pub fn content_sum(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                let row = row as i64;
                let i = i as i64;
                // sum_{j=0}^{row-1} (j - i)
                row * (row - 1) / 2 - i * row
            })
            .sum()
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

/// All partitions of `d`, each exactly once, in reverse-lexicographic order.
pub fn enumerate_partitions(d: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(d, d, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

pub fn irrep_dimension(lambda: &Partition) -> BigUint {
    lambda.irrep_dimension()
}

pub fn content_sum(lambda: &Partition) -> i64 {
    lambda.content_sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Partition numbers from Euler's pentagonal recurrence.
    fn pentagonal_counts(max: usize) -> Vec<u64> {
        let mut counts = vec![0i64; max + 1];
        counts[0] = 1;
        for n in 1..=max as i64 {
            let mut total = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                total += sign * counts[(n - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    total += sign * counts[(n - g2) as usize];
                }
            }
            counts[n as usize] = total;
        }
        counts.into_iter().map(|c| c as u64).collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(1), vec![p(&[1])]);
        assert_eq!(
            enumerate_partitions(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        let expected = pentagonal_counts(30);
        for d in 0..=30u32 {
            assert_eq!(enumerate_partitions(d).len() as u64, expected[d as usize], "d={d}");
        }
        assert_eq!(expected[30], 5604);
    }

    #[test]
    fn enumeration_is_strictly_decreasing_lexicographically() {
        for d in 0..=12 {
            let all = enumerate_partitions(d);
            assert!(all.windows(2).all(|w| w[0] > w[1]));
            assert!(all.iter().all(|l| l.size() == d));
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(p(&[5]).irrep_dimension(), BigUint::from(1u32));
        assert_eq!(p(&[1, 1, 1, 1, 1]).irrep_dimension(), BigUint::from(1u32));
        assert_eq!(p(&[2, 1]).irrep_dimension(), BigUint::from(2u32));
        assert_eq!(p(&[3, 2]).irrep_dimension(), BigUint::from(5u32));
        assert_eq!(Partition::empty().irrep_dimension(), BigUint::from(1u32));
    }

    #[test]
    fn burnside_identity() {
        for d in 0..=12 {
            let total: BigUint = enumerate_partitions(d)
                .iter()
                .map(|l| {
                    let dim = l.irrep_dimension();
                    &dim * &dim
                })
                .sum();
            assert_eq!(total, factorial(d), "d={d}");
        }
    }

    #[test]
    fn contents() {
        assert_eq!(p(&[2, 1]).content_sum(), 0);
        assert_eq!(p(&[3]).content_sum(), 3);
        assert_eq!(p(&[1, 1, 1]).content_sum(), -3);
        assert_eq!(Partition::empty().content_sum(), 0);
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 2]).unwrap(), p(&[3, 2, 1]));
    }

    proptest! {
        #[test]
        fn content_sum_antisymmetric(d in 0u32..=15, pick in any::<prop::sample::Index>()) {
            let all = enumerate_partitions(d);
            let lambda = &all[pick.index(all.len())];
            prop_assert_eq!(lambda.content_sum() + lambda.conjugate().content_sum(), 0);
            prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
            prop_assert_eq!(lambda.irrep_dimension(), lambda.conjugate().irrep_dimension());
        }
    }
}
