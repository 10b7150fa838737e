//! Brute-force oracle for connected Hurwitz numbers.
//!
//! Walks every `r`-tuple of transpositions of `{0, .., d-1}` depth first,
//! keeping the running product and a union-find over the letters. The last
//! transposition is never guessed: a prefix extends to a factorization of
//! the identity iff the inverse of its product is itself a transposition,
//! and then that transposition is the only completion.

use num_bigint::BigUint;

use crate::arith::{factorial, from_biguint};
use crate::{branch_point_count, Error, ExactRational, Result};

pub const MAX_DEGREE: u32 = 5;
pub const MAX_BRANCH_POINTS: u32 = 10;
/// Cap on `C(d, 2)^r`, the size of the tuple space.
pub const MAX_TUPLES: u64 = 100_000_000;

const LETTERS: usize = MAX_DEGREE as usize;

#[derive(Clone, Copy)]
struct State {
    /// `perm[i]` is the image of letter `i` under the running product.
    perm: [u8; LETTERS],
    parent: [u8; LETTERS],
}

impl State {
    fn identity(d: usize) -> Self {
        let mut perm = [0u8; LETTERS];
        for (i, p) in perm.iter_mut().enumerate().take(d) {
            *p = i as u8;
        }
        State { perm, parent: perm }
    }

    fn find(&mut self, mut x: u8) -> u8 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u8, b: u8) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra as usize] = rb;
        }
    }

    /// Right-multiplies the running product by the transposition `(a b)`.
    fn apply(&mut self, a: u8, b: u8) {
        self.perm.swap(a as usize, b as usize);
        self.union(a, b);
    }

    fn connected(&mut self, d: usize) -> bool {
        let root = self.find(0);
        (1..d as u8).all(|x| self.find(x) == root)
    }

    /// If the running product is a single transposition, returns it.
    fn as_transposition(&self, d: usize) -> Option<(u8, u8)> {
        let mut moved = (0..d as u8).filter(|&i| self.perm[i as usize] != i);
        let a = moved.next()?;
        let b = moved.next()?;
        if moved.next().is_some() || self.perm[a as usize] != b {
            return None;
        }
        Some((a, b))
    }
}

fn check_bound(d: u32, r: u32) -> Result<()> {
    let err = Error::OracleBound {
        degree: d,
        branch_points: r,
        limit: MAX_TUPLES,
    };
    if d > MAX_DEGREE || r > MAX_BRANCH_POINTS {
        return Err(err);
    }
    let transpositions = (d as u64) * (d.saturating_sub(1) as u64) / 2;
    match transpositions.checked_pow(r) {
        Some(n) if n <= MAX_TUPLES => Ok(()),
        _ => Err(err),
    }
}

/// Whether `(d, r)` lies inside the enumeration bound.
pub fn within_bound(d: u32, r: u32) -> bool {
    d >= 1 && check_bound(d, r).is_ok()
}

/// Number of transitive `r`-tuples of transpositions in `S_d` whose product
/// is the identity.
pub fn transitive_factorizations(d: u32, r: u32) -> Result<u64> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    check_bound(d, r)?;
    let d = d as usize;
    let transpositions: Vec<(u8, u8)> = (0..d as u8)
        .flat_map(|a| (a + 1..d as u8).map(move |b| (a, b)))
        .collect();
    let start = State::identity(d);
    if r == 0 {
        let mut s = start;
        return Ok(u64::from(s.connected(d)));
    }
    Ok(walk(start, r as usize - 1, &transpositions, d))
}

fn walk(state: State, remaining: usize, transpositions: &[(u8, u8)], d: usize) -> u64 {
    if remaining == 0 {
        let Some((a, b)) = state.as_transposition(d) else {
            return 0;
        };
        let mut last = state;
        last.union(a, b);
        return u64::from(last.connected(d));
    }
    transpositions
        .iter()
        .map(|&(a, b)| {
            let mut next = state;
            next.apply(a, b);
            walk(next, remaining - 1, transpositions, d)
        })
        .sum()
}

/// `H_{g,d}` by enumeration: transitive factorization count divided by `d!`.
pub fn oracle_connected(g: u32, d: u32) -> Result<ExactRational> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let count = transitive_factorizations(d, branch_point_count(g, d))?;
    Ok(from_biguint(BigUint::from(count)) / from_biguint(factorial(d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, int};

    #[test]
    fn examples() {
        assert_eq!(oracle_connected(0, 1).unwrap(), int(1));
        assert_eq!(oracle_connected(1, 1).unwrap(), int(0));
        assert_eq!(oracle_connected(2, 2).unwrap(), frac(1, 2));
        assert_eq!(oracle_connected(0, 3).unwrap(), int(4));
    }

    #[test]
    fn trivial_tuple_spaces() {
        assert_eq!(transitive_factorizations(1, 0).unwrap(), 1);
        assert_eq!(transitive_factorizations(2, 0).unwrap(), 0);
        assert_eq!(transitive_factorizations(2, 1).unwrap(), 0);
        assert_eq!(transitive_factorizations(3, 3).unwrap(), 0);
    }

    /// All 81 4-tuples on three letters multiply to the identity 27 times;
    /// the disconnected ones are (ab)^4 for the three transpositions.
    #[test]
    fn degree_three_four_tuples() {
        assert_eq!(transitive_factorizations(3, 4).unwrap(), 24);
    }

    #[test]
    fn bound_guards() {
        assert!(matches!(oracle_connected(2, 5), Err(Error::OracleBound { .. })));
        assert!(matches!(oracle_connected(0, 6), Err(Error::OracleBound { .. })));
        assert!(within_bound(4, 10));
        assert!(within_bound(5, 8));
        assert!(!within_bound(5, 10));
        assert!(!within_bound(0, 0));
    }
}
