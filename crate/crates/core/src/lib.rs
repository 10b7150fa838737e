//! Exact computation of classical Hurwitz numbers `H_{g,d}` and of branch
//! divisors of combinatorially described stable maps.
//!
//! Every Hurwitz number can be obtained through several independent routes:
//!
//! * [`hurwitz`]: Frobenius character sum over partitions, followed by
//!   connected-cover extraction with a formal logarithm ([`series`]).
//! * [`oracle`]: brute-force enumeration of transposition tuples.
//! * [`recursion`]: the genus 0, 1 and 2 recursions and the genus-0 closed form.
//! * [`intersection`]: the Hodge-integral formula specialised to genus 0,
//!   where it reduces to a sum of ψ-class multinomials.
//!
//! [`branch`] evaluates the pointwise branch divisor of a nodal stable map to
//! a nonsingular target curve.

pub mod arith;
pub mod branch;
pub mod error;
pub mod hurwitz;
pub mod intersection;
pub mod oracle;
pub mod partitions;
pub mod recursion;
pub mod series;

pub use error::{Error, Result};
pub use hurwitz::{connected_hurwitz, disconnected_hurwitz, factorization_count, CharacterEngine};
pub use partitions::Partition;
pub use recursion::{build_table, compute, HurwitzTable, Method};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. `Display` prints `a/b`, or a bare integer when `b = 1`.
pub type ExactRational = num_rational::BigRational;

/// Number of simple branch points of a connected degree-`d` genus-`g` cover
/// of the projective line: `r = 2g - 2 + 2d`.
pub fn branch_point_count(genus: u32, degree: u32) -> u32 {
    2 * genus + 2 * degree - 2
}
