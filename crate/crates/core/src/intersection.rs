//! Genus-0 ψ-class intersection numbers and the Hodge-integral formula for
//! Hurwitz numbers in genus 0, where every λ-class vanishes:
//!
//! ```text
//! H_{0,d} = (2d-2)!/d! * sum over a with |a| = d-3 of  ∫ ψ_1^{a_1} ⋯ ψ_d^{a_d}
//! ```

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::{factorial, from_biguint};
use crate::{Error, ExactRational, Result};

/// Exponents `a_1, .., a_n` of a ψ monomial on the moduli space of genus-0
/// curves with `n >= 3` marked points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PsiExponentVector(Vec<u32>);

impl PsiExponentVector {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.len() < 3 {
            return Err(Error::TooFewMarkedPoints {
                len: exponents.len(),
            });
        }
        Ok(PsiExponentVector(exponents))
    }

    pub fn marked_points(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }
}

/// `(n-3)! / (a_1! ⋯ a_n!)` when `sum a_i = n - 3`, else 0.
pub fn psi_integral_genus0(a: &PsiExponentVector) -> BigUint {
    let dim = a.marked_points() as u64 - 3;
    if a.degree() != dim {
        return BigUint::zero();
    }
    let denominator = a
        .exponents()
        .iter()
        .fold(BigUint::from(1u32), |acc, &e| acc * factorial(e));
    factorial(dim as u32) / denominator
}

/// Iterator over compositions of `total` into `parts` nonnegative parts,
/// in lexicographically decreasing order.
pub struct Compositions {
    current: Vec<u32>,
    done: bool,
}

impl Compositions {
    pub fn new(total: u32, parts: usize) -> Self {
        if parts == 0 {
            return Compositions {
                current: Vec::new(),
                done: total != 0,
            };
        }
        let mut current = vec![0; parts];
        current[0] = total;
        Compositions {
            current,
            done: false,
        }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let n = self.current.len();
        // Rightmost nonzero entry before the last slot moves one unit right,
        // and everything after it collapses onto the next slot.
        match (0..n.saturating_sub(1)).rev().find(|&i| self.current[i] > 0) {
            None => self.done = true,
            Some(i) => {
                let tail: u32 = self.current[i + 1..].iter().sum();
                self.current[i] -= 1;
                for x in &mut self.current[i + 1..] {
                    *x = 0;
                }
                self.current[i + 1] = tail + 1;
            }
        }
        Some(out)
    }
}

/// The ψ-integral sum for `d` marked points, computed term by term.
pub fn psi_sum_genus0(d: u32) -> BigUint {
    let dim = d - 3;
    Compositions::new(dim, d as usize)
        .map(|a| psi_integral_genus0(&PsiExponentVector(a)))
        .sum()
}

/// `H_{0,d}` from the Hodge-integral formula. The cases `d = 1, 2` lie
/// outside its range and return [`Error::DegenerateCase`].
pub fn elsv_genus0(d: u32) -> Result<ExactRational> {
    if d < 3 {
        return Err(Error::DegenerateCase { degree: d });
    }
    let prefactor = from_biguint(factorial(2 * d - 2)) / from_biguint(factorial(d));
    Ok(prefactor * from_biguint(psi_sum_genus0(d)))
}
