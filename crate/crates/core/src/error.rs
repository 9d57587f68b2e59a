use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("coefficient not in field: {0}")]
    CoefficientNotInField(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("polynomial is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("generator {0} is zero in the quotient ring")]
    ZeroGenerator(usize),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("index {index} is outside the interior [{lo}, {hi}] of the complex")]
    OutsideInterior { index: i64, lo: i64, hi: i64 },
    #[error("boundaries are not contained in cycles in degree {0}")]
    BoundariesNotCycles(i64),
    #[error("column {0} of the cycle matrix is not a 1-cycle")]
    NotACycle(usize),
    #[error("cycle matrix does not minimally generate H1: {0}")]
    NotMinimalGeneration(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("more Koszul relations than generators (g = {g} > f = {f})")]
    GExceedsF { f: usize, g: usize },
    #[error("empty window [{lo}, {hi}]")]
    EmptyWindow { lo: i64, hi: i64 },
    #[error("not a complete intersection: {0}")]
    NotCompleteIntersection(String),
    #[error("ideal inclusion fails: {0}")]
    NotContained(String),
    #[error("grading obstruction: {0}")]
    GradingObstruction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
