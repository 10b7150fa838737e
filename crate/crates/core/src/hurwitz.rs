//! Hurwitz numbers from the symmetric group.
//!
//! The number of `r`-tuples of transpositions in `S_d` whose product is the
//! identity is the Frobenius sum
//!
//! ```text
//! N_r(d) = (1/d!) * sum over λ ⊢ d of (dim λ)^2 * c(λ)^r
//! ```
//!
//! where `c(λ)` is the content sum. Dividing by `d!` gives the possibly
//! disconnected count `h°(d, r)`. Connected counts come out of the formal
//! logarithm of `sum h°(d, r) p^d t^r / r!`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{factorial, from_biguint};
use crate::partitions::enumerate_partitions;
use crate::series::TruncatedSeries;
use crate::{branch_point_count, Error, ExactRational, Result};

/// Per-degree data for the character sum: `(dim λ)^2` and `c(λ)` for each
/// partition of `d`.
type CharacterData = Arc<Vec<(BigUint, i64)>>;

/// Memoizing front end for the character method. Tables are behind
/// `RwLock`s, so a single engine may be shared between threads.
#[derive(Debug, Default)]
pub struct CharacterEngine {
    characters: RwLock<HashMap<u32, CharacterData>>,
    disconnected: RwLock<HashMap<(u32, u32), ExactRational>>,
}

impl CharacterEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn characters(&self, d: u32) -> CharacterData {
        if let Some(data) = self.characters.read().unwrap().get(&d) {
            return Arc::clone(data);
        }
        let data: CharacterData = Arc::new(
            enumerate_partitions(d)
                .iter()
                .map(|l| {
                    let dim = l.irrep_dimension();
                    (&dim * &dim, l.content_sum())
                })
                .collect(),
        );
        self.characters
            .write()
            .unwrap()
            .entry(d)
            .or_insert(data)
            .clone()
    }

    /// Number of `r`-tuples of transpositions in `S_d` with product equal to
    /// the identity. Transitivity is not required.
    pub fn factorization_count(&self, d: u32, r: u32) -> Result<BigUint> {
        if d == 0 {
            return Err(Error::ZeroDegree);
        }
        let sum: BigInt = self
            .characters(d)
            .iter()
            .map(|(dim_sq, content)| {
                BigInt::from(dim_sq.clone()) * num_traits::pow(BigInt::from(*content), r as usize)
            })
            .sum();
        let (quotient, remainder) = sum.div_rem(&BigInt::from(factorial(d)));
        if !remainder.is_zero() || quotient.sign() == num_bigint::Sign::Minus {
            return Err(Error::NonIntegralCharacterSum {
                degree: d,
                branch_points: r,
            });
        }
        Ok(quotient.magnitude().clone())
    }

    /// `h°(d, r) = N_r(d) / d!`, every cover weighted by `1/|Aut|`.
    pub fn disconnected_hurwitz(&self, d: u32, r: u32) -> Result<ExactRational> {
        if let Some(v) = self.disconnected.read().unwrap().get(&(d, r)) {
            return Ok(v.clone());
        }
        let count = self.factorization_count(d, r)?;
        let value = from_biguint(count) / from_biguint(factorial(d));
        self.disconnected
            .write()
            .unwrap()
            .insert((d, r), value.clone());
        Ok(value)
    }

    /// Exponential generating series `sum h°(a, j) p^a t^j / j!` truncated
    /// at `(d, r)`, with `h°(0, 0) = 1` and `h°(0, j) = 0` for `j > 0`.
    pub fn disconnected_series(&self, d: u32, r: u32) -> Result<TruncatedSeries> {
        let mut series = TruncatedSeries::one(d as usize, r as usize);
        for a in 1..=d {
            for j in 0..=r {
                let value = self.disconnected_hurwitz(a, j)? / from_biguint(factorial(j));
                series.set(a as usize, j as usize, value);
            }
        }
        Ok(series)
    }

    /// Connected count `h(d, r)` extracted from the logarithm of the
    /// disconnected series.
    pub fn connected_by_branch_points(&self, d: u32, r: u32) -> Result<ExactRational> {
        if d == 0 {
            return Err(Error::ZeroDegree);
        }
        let log = self.disconnected_series(d, r)?.log()?;
        Ok(log.get(d as usize, r as usize) * from_biguint(factorial(r)))
    }

    /// `H_{g,d}` with `r = 2g - 2 + 2d` simple branch points.
    pub fn connected_hurwitz(&self, g: u32, d: u32) -> Result<ExactRational> {
        if d == 0 {
            return Err(Error::ZeroDegree);
        }
        self.connected_by_branch_points(d, branch_point_count(g, d))
    }

    /// `0 <= h(d, r) <= h°(d, r)`.
    pub fn disconnected_dominates(&self, d: u32, r: u32) -> Result<bool> {
        let connected = self.connected_by_branch_points(d, r)?;
        let disconnected = self.disconnected_hurwitz(d, r)?;
        Ok(connected >= ExactRational::zero() && disconnected >= connected)
    }
}

pub fn factorization_count(d: u32, r: u32) -> Result<BigUint> {
    CharacterEngine::new().factorization_count(d, r)
}

pub fn disconnected_hurwitz(d: u32, r: u32) -> Result<ExactRational> {
    CharacterEngine::new().disconnected_hurwitz(d, r)
}

pub fn connected_hurwitz(g: u32, d: u32) -> Result<ExactRational> {
    CharacterEngine::new().connected_hurwitz(g, d)
}
