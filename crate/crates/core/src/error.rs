use thiserror::Error;

use crate::branch::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("character sum for d={degree}, r={branch_points} is not divisible by d!")]
    NonIntegralCharacterSum { degree: u32, branch_points: u32 },

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("oracle enumeration bound exceeded for d={degree}, r={branch_points} (need d <= 5, r <= 10, C(d,2)^r <= {limit})")]
    OracleBound {
        degree: u32,
        branch_points: u32,
        limit: u64,
    },

    #[error("degenerate case: the Hodge-integral formula does not apply to (g, d) = (0, {degree})")]
    DegenerateCase { degree: u32 },

    #[error("no recursion is available for genus {genus} (only g <= 2)")]
    RecursionGenus { genus: u32 },

    #[error("method {method} is not applicable to genus {genus}")]
    MethodNotApplicable { method: &'static str, genus: u32 },

    #[error("psi exponent vector needs at least 3 entries, got {len}")]
    TooFewMarkedPoints { len: usize },

    #[error("invalid partition {parts:?}: parts must be positive and weakly decreasing")]
    InvalidPartition { parts: Vec<u32> },

    #[error("series constant term must be {expected} for {operation}")]
    SeriesConstantTerm {
        operation: &'static str,
        expected: u32,
    },

    #[error("series truncation bounds do not match")]
    SeriesShape,

    #[error("dual graph of the stable map is disconnected")]
    DisconnectedGraph,

    #[error("invalid stable map: {}", format_violations(.0))]
    InvalidGraph(Vec<Violation>),

    #[error("branch divisor degree does not fit in 64 bits")]
    Overflow,

    #[error("malformed stable map document: {0}")]
    Parse(String),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
