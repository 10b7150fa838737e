//! Small exact-arithmetic helpers shared by the engines.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::ExactRational;

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Binomial coefficient with `C(n, k) = 0` whenever `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from((n - i) as u64) / BigUint::from((i + 1) as u64);
    }
    BigInt::from(acc)
}

/// `base^exp` as an exact rational; negative exponents give reciprocals.
///
/// Panics on `0^exp` with `exp < 0`.
pub fn rational_pow(base: i64, exp: i64) -> ExactRational {
    let b = ExactRational::from_integer(BigInt::from(base));
    if exp >= 0 {
        num_traits::pow(b, exp as usize)
    } else {
        assert!(base != 0, "zero to a negative power");
        num_traits::pow(b.recip(), (-exp) as usize)
    }
}

pub fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_biguint(n: BigUint) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}
