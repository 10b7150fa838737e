//! Bivariate power series `sum c[a][r] p^a t^r` over the rationals,
//! truncated at `a <= a_max`, `r <= r_max`.
//!
//! `log` and `exp` use the Euler-operator identity `E(S) = S * E(log S)`
//! with `E = p d/dp + t d/dt`, which gives each coefficient from
//! strictly smaller ones without forming powers of the series.

use num_traits::{One, Zero};

use crate::arith::int;
use crate::{Error, ExactRational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    a_max: usize,
    r_max: usize,
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    pub fn zero(a_max: usize, r_max: usize) -> Self {
        TruncatedSeries {
            a_max,
            r_max,
            coeffs: vec![ExactRational::zero(); (a_max + 1) * (r_max + 1)],
        }
    }

    pub fn one(a_max: usize, r_max: usize) -> Self {
        let mut s = Self::zero(a_max, r_max);
        s.set(0, 0, ExactRational::one());
        s
    }

    /// Fills every coefficient from `f(a, r)`.
    pub fn from_fn(
        a_max: usize,
        r_max: usize,
        mut f: impl FnMut(usize, usize) -> ExactRational,
    ) -> Self {
        let mut s = Self::zero(a_max, r_max);
        for a in 0..=a_max {
            for r in 0..=r_max {
                s.set(a, r, f(a, r));
            }
        }
        s
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.a_max, self.r_max)
    }

    fn index(&self, a: usize, r: usize) -> usize {
        assert!(
            a <= self.a_max && r <= self.r_max,
            "index ({a}, {r}) outside truncation ({}, {})",
            self.a_max,
            self.r_max
        );
        a * (self.r_max + 1) + r
    }

    pub fn get(&self, a: usize, r: usize) -> &ExactRational {
        &self.coeffs[self.index(a, r)]
    }

    pub fn set(&mut self, a: usize, r: usize, value: ExactRational) {
        let i = self.index(a, r);
        self.coeffs[i] = value;
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.bounds() != other.bounds() {
            return Err(Error::SeriesShape);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Ok(TruncatedSeries { coeffs, ..*self })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = Self::zero(self.a_max, self.r_max);
        for a1 in 0..=self.a_max {
            for r1 in 0..=self.r_max {
                let x = self.get(a1, r1);
                if x.is_zero() {
                    continue;
                }
                for a2 in 0..=self.a_max - a1 {
                    for r2 in 0..=self.r_max - r1 {
                        let y = other.get(a2, r2);
                        if !y.is_zero() {
                            let i = out.index(a1 + a2, r1 + r2);
                            out.coeffs[i] += x * y;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Formal logarithm; the constant term must be 1.
    pub fn log(&self) -> Result<Self> {
        if !self.get(0, 0).is_one() {
            return Err(Error::SeriesConstantTerm {
                operation: "log",
                expected: 1,
            });
        }
        let mut out = Self::zero(self.a_max, self.r_max);
        for a in 0..=self.a_max {
            for r in 0..=self.r_max {
                if a == 0 && r == 0 {
                    continue;
                }
                let weight = int((a + r) as i64);
                let mut acc = &weight * self.get(a, r);
                for i in 0..=a {
                    for j in 0..=r {
                        if (i == 0 && j == 0) || (i == a && j == r) {
                            continue;
                        }
                        let l = out.get(i, j);
                        if l.is_zero() {
                            continue;
                        }
                        acc -= int((i + j) as i64) * l * self.get(a - i, r - j);
                    }
                }
                out.set(a, r, acc / weight);
            }
        }
        Ok(out)
    }

    /// Formal exponential; the constant term must be 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.get(0, 0).is_zero() {
            return Err(Error::SeriesConstantTerm {
                operation: "exp",
                expected: 0,
            });
        }
        let mut out = Self::one(self.a_max, self.r_max);
        for a in 0..=self.a_max {
            for r in 0..=self.r_max {
                if a == 0 && r == 0 {
                    continue;
                }
                let mut acc = ExactRational::zero();
                for i in 0..=a {
                    for j in 0..=r {
                        if i == 0 && j == 0 {
                            continue;
                        }
                        let l = self.get(i, j);
                        if l.is_zero() {
                            continue;
                        }
                        acc += int((i + j) as i64) * l * out.get(a - i, r - j);
                    }
                }
                out.set(a, r, acc / int((a + r) as i64));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;
    use proptest::prelude::*;

    #[test]
    fn log_of_exp_p() {
        // exp(p) = sum p^a / a!
        let mut fact = 1i64;
        let s = TruncatedSeries::from_fn(6, 0, |a, _| {
            if a > 0 {
                fact *= a as i64;
            }
            frac(1, fact)
        });
        let l = s.log().unwrap();
        for a in 0..=6 {
            let expected = if a == 1 { int(1) } else { int(0) };
            assert_eq!(l.get(a, 0), &expected, "a={a}");
        }
    }

    #[test]
    fn log_of_one_minus_t() {
        // log(1 - t) = -sum t^r / r
        let s = TruncatedSeries::from_fn(0, 7, |_, r| match r {
            0 => int(1),
            1 => int(-1),
            _ => int(0),
        });
        let l = s.log().unwrap();
        for r in 1..=7 {
            assert_eq!(l.get(0, r), &frac(-1, r as i64));
        }
    }

    #[test]
    fn exp_is_multiplicative() {
        let x = TruncatedSeries::from_fn(3, 3, |a, r| if a + r == 0 { int(0) } else { frac(a as i64 + 1, r as i64 + 2) });
        let y = TruncatedSeries::from_fn(3, 3, |a, r| if a + r == 0 { int(0) } else { frac(r as i64 - 1, a as i64 + 3) });
        let lhs = x.add(&y).unwrap().exp().unwrap();
        let rhs = x.exp().unwrap().mul(&y.exp().unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn constant_term_checks() {
        let s = TruncatedSeries::zero(2, 2);
        assert!(matches!(s.log(), Err(Error::SeriesConstantTerm { .. })));
        assert!(matches!(TruncatedSeries::one(2, 2).exp(), Err(Error::SeriesConstantTerm { .. })));
        assert!(matches!(s.mul(&TruncatedSeries::zero(1, 2)), Err(Error::SeriesShape)));
    }

    fn small_rational() -> impl Strategy<Value = ExactRational> {
        (-6i64..=6, 1i64..=5).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #[test]
        fn exp_log_round_trip(
            a_max in 0usize..=3,
            r_max in 0usize..=4,
            raw in prop::collection::vec(small_rational(), 20),
        ) {
            let mut k = 0;
            let s = TruncatedSeries::from_fn(a_max, r_max, |a, r| {
                if a == 0 && r == 0 {
                    int(1)
                } else {
                    k += 1;
                    raw[k - 1].clone()
                }
            });
            let back = s.log().unwrap().exp().unwrap();
            prop_assert_eq!(&back, &s);
            let l = s.log().unwrap();
            prop_assert!(l.get(0, 0).is_zero());
        }
    }
}
