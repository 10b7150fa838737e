//! Closed form and low-genus recursions for `H_{g,d}`, plus the
//! method-tagged table that the crosscheck compares.
//!
//! The recursions use `C(n, k) = 0` outside `0 <= k <= n`; with that
//! convention the degree-1 values `H_{1,1} = H_{2,1} = 0` need no special
//! casing.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::arith::{binomial, factorial, frac, from_biguint, int, rational_pow};
use crate::hurwitz::CharacterEngine;
use crate::intersection::elsv_genus0;
use crate::oracle::oracle_connected;
use crate::{Error, ExactRational, Result};

/// Coefficients of the genus-2 recursion.
mod genus2 {
    /// `97/136`, leading term.
    pub const LEAD_CUBIC: (i64, i64) = (97, 136);
    /// `20/17`, leading term.
    pub const LEAD_QUADRATIC: (i64, i64) = (20, 17);
    /// `115/17`, `H_0 * H_2` sum.
    pub const MIXED: (i64, i64) = (115, 17);
    /// `11697/34`, `H_1 * H_1` sum.
    pub const PAIR_CROSS: (i64, i64) = (11697, 34);
    /// `3899/68`, `H_1 * H_1` sum.
    pub const PAIR_SQUARE: (i64, i64) = (3899, 68);
}

fn q((n, d): (i64, i64)) -> ExactRational {
    frac(n, d)
}

fn binom(n: i64, k: i64) -> ExactRational {
    ExactRational::from_integer(binomial(n, k))
}

/// `H_{0,d} = (2d-2)!/d! * d^(d-3)`, with `d^(d-3)` a rational power for
/// `d <= 2`.
pub fn h0_closed(d: u32) -> Result<ExactRational> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let d_i = d as i64;
    Ok(from_biguint(factorial(2 * d - 2)) / from_biguint(factorial(d)) * rational_pow(d_i, d_i - 3))
}

/// Genus 0, 1 and 2 values produced by the recursions alone, indexed by
/// degree (index 0 unused).
#[derive(Clone, Debug)]
pub struct RecursionValues {
    pub genus0: Vec<ExactRational>,
    pub genus1: Vec<ExactRational>,
    pub genus2: Vec<ExactRational>,
}

impl RecursionValues {
    pub fn compute(d_max: u32) -> Self {
        let n = d_max as usize + 1;
        let mut h0 = vec![ExactRational::zero(); n];
        let mut h1 = vec![ExactRational::zero(); n];
        let mut h2 = vec![ExactRational::zero(); n];
        for d in 1..n {
            h0[d] = genus0_step(d, &h0);
            h1[d] = genus1_step(d, &h0, &h1);
            h2[d] = genus2_step(d, &h0, &h1, &h2);
        }
        RecursionValues {
            genus0: h0,
            genus1: h1,
            genus2: h2,
        }
    }

    pub fn get(&self, g: u32, d: u32) -> Option<&ExactRational> {
        let column = match g {
            0 => &self.genus0,
            1 => &self.genus1,
            2 => &self.genus2,
            _ => return None,
        };
        column.get(d as usize).filter(|_| d >= 1)
    }
}

fn genus0_step(d: usize, h0: &[ExactRational]) -> ExactRational {
    if d == 1 {
        return int(1);
    }
    let di = d as i64;
    let mut sum = ExactRational::zero();
    for i in 1..d {
        let ii = i as i64;
        let weight = binom(2 * di - 4, 2 * ii - 2) * int(ii * ii * (di - ii) * (di - ii));
        sum += weight * &h0[i] * &h0[d - i];
    }
    frac(2 * di - 3, di) * sum
}

fn genus1_step(d: usize, h0: &[ExactRational], h1: &[ExactRational]) -> ExactRational {
    let di = d as i64;
    let mut value = frac(di, 6) * binom(di, 2) * int(2 * di - 1) * &h0[d];
    for i in 1..d {
        let ii = i as i64;
        let weight = binom(2 * di - 2, 2 * ii - 2) * int((4 * di - 2) * ii * ii * (di - ii));
        value += weight * &h0[i] * &h1[d - i];
    }
    value
}

fn genus2_step(
    d: usize,
    h0: &[ExactRational],
    h1: &[ExactRational],
    h2: &[ExactRational],
) -> ExactRational {
    use genus2::*;
    let di = d as i64;
    let dq = int(di);
    let mut value = int(di * di) * (q(LEAD_CUBIC) * &dq - q(LEAD_QUADRATIC)) * &h1[d];
    for i in 1..d {
        let ii = i as i64;
        let iq = int(ii);
        let split = int(ii * (di - ii));
        let mixed = binom(2 * di, 2 * ii - 2) * (int(8 * di) - q(MIXED) * &iq) * &split;
        value += mixed * &h0[i] * &h2[d - i];
        let pair = binom(2 * di, 2 * ii)
            * (q(PAIR_CROSS) * &split - q(PAIR_SQUARE) * int(di * di))
            * &split;
        value += pair * &h1[i] * &h1[d - i];
    }
    value
}

pub fn h0_recursion(d: u32) -> Result<ExactRational> {
    recursion_value(0, d)
}

pub fn h1_recursion(d: u32) -> Result<ExactRational> {
    recursion_value(1, d)
}

pub fn h2_recursion(d: u32) -> Result<ExactRational> {
    recursion_value(2, d)
}

fn recursion_value(g: u32, d: u32) -> Result<ExactRational> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let values = RecursionValues::compute(d);
    values
        .get(g, d)
        .cloned()
        .ok_or(Error::RecursionGenus { genus: g })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Character,
    Recursion,
    ClosedForm,
    ElsvG0,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Character,
        Method::Recursion,
        Method::ClosedForm,
        Method::ElsvG0,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Character => "character",
            Method::Recursion => "recursion",
            Method::ClosedForm => "closed-form",
            Method::ElsvG0 => "elsv-g0",
            Method::Oracle => "oracle",
        }
    }

    /// Whether the method can produce `H_{g,d}` at all.
    pub fn applies_to(self, g: u32, d: u32) -> bool {
        if d == 0 {
            return false;
        }
        match self {
            Method::Character => true,
            Method::Recursion => g <= 2,
            Method::ClosedForm | Method::ElsvG0 => g == 0,
            Method::Oracle => crate::oracle::within_bound(d, crate::branch_point_count(g, d)),
        }
    }

    fn check_genus(self, g: u32) -> Result<()> {
        match self {
            Method::Recursion if g > 2 => Err(Error::RecursionGenus { genus: g }),
            Method::ClosedForm | Method::ElsvG0 if g > 0 => Err(Error::MethodNotApplicable {
                method: self.name(),
                genus: g,
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s || m.name().replace('-', "_") == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// Degenerate genus-0 values the Hodge-integral formula does not cover.
pub fn degenerate_genus0(d: u32) -> Option<ExactRational> {
    match d {
        1 => Some(int(1)),
        2 => Some(frac(1, 2)),
        _ => None,
    }
}

/// A single value `H_{g,d}` under `method`. `ElsvG0` falls back to the
/// degenerate values for `d = 1, 2`.
pub fn compute(g: u32, d: u32, method: Method) -> Result<ExactRational> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    method.check_genus(g)?;
    match method {
        Method::Character => CharacterEngine::new().connected_hurwitz(g, d),
        Method::Recursion => recursion_value(g, d),
        Method::ClosedForm => h0_closed(d),
        Method::ElsvG0 => match degenerate_genus0(d) {
            Some(v) => Ok(v),
            None => elsv_genus0(d),
        },
        Method::Oracle => oracle_connected(g, d),
    }
}

/// `H_{g,d}` under `(genus, degree, method)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HurwitzTable {
    entries: BTreeMap<(u32, u32, Method), ExactRational>,
}

impl HurwitzTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, g: u32, d: u32, method: Method) -> Option<&ExactRational> {
        self.entries.get(&(g, d, method))
    }

    pub fn insert(&mut self, g: u32, d: u32, method: Method, value: ExactRational) {
        self.entries.insert((g, d, method), value);
    }

    /// Entries ordered by genus, then degree, then method.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, Method, &ExactRational)> {
        self.entries.iter().map(|(&(g, d, m), v)| (g, d, m, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn extend(&mut self, other: HurwitzTable) {
        self.entries.extend(other.entries);
    }

    /// Cells `(g, d)` whose methods disagree.
    pub fn disagreements(&self) -> Vec<(u32, u32)> {
        let mut by_cell: BTreeMap<(u32, u32), Vec<&ExactRational>> = BTreeMap::new();
        for (g, d, _, v) in self.iter() {
            by_cell.entry((g, d)).or_default().push(v);
        }
        by_cell
            .into_iter()
            .filter(|(_, vs)| vs.windows(2).any(|w| w[0] != w[1]))
            .map(|(cell, _)| cell)
            .collect()
    }
}

/// Fills every `(g, d)` with `g <= g_max`, `1 <= d <= d_max` under `method`.
///
/// `ElsvG0` stores the degenerate values `1` and `1/2` for `d = 1, 2`.
pub fn build_table(g_max: u32, d_max: u32, method: Method) -> Result<HurwitzTable> {
    if d_max == 0 {
        return Err(Error::ZeroDegree);
    }
    method.check_genus(g_max)?;
    let mut table = HurwitzTable::new();
    match method {
        Method::Character => {
            let engine = CharacterEngine::new();
            for g in 0..=g_max {
                for d in 1..=d_max {
                    table.insert(g, d, method, engine.connected_hurwitz(g, d)?);
                }
            }
        }
        Method::Recursion => {
            let values = RecursionValues::compute(d_max);
            for g in 0..=g_max {
                for d in 1..=d_max {
                    let v = values.get(g, d).expect("genus checked above").clone();
                    table.insert(g, d, method, v);
                }
            }
        }
        Method::ClosedForm => {
            for d in 1..=d_max {
                table.insert(0, d, method, h0_closed(d)?);
            }
        }
        Method::ElsvG0 => {
            for d in 1..=d_max {
                let v = match degenerate_genus0(d) {
                    Some(v) => v,
                    None => elsv_genus0(d)?,
                };
                table.insert(0, d, method, v);
            }
        }
        Method::Oracle => {
            for g in 0..=g_max {
                for d in 1..=d_max {
                    table.insert(g, d, method, oracle_connected(g, d)?);
                }
            }
        }
    }
    Ok(table)
}
