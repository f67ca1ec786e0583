use std::fmt;

use thiserror::Error;

/// A position in source text, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("exponent vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for a ring with {len} variables")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("variable name `{0}` already exists in the ring")]
    NameCollision(String),

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("input ideal must be homogeneous")]
    NonHomogeneous,

    #[error("input ideal is the zero ideal")]
    EmptyIdeal,

    #[error("radical candidate is not sandwiched between the ideal and its radical: {0}")]
    BadRadical(String),

    #[error("sample point {0} does not lie on the variety")]
    NotOnVariety(usize),

    #[error("curve is constant")]
    ConstantCurve,

    #[error("elimination ideal is zero")]
    TrivialElimination,

    #[error("pedal locus is degenerate (not a curve)")]
    DegeneratePedal,

    #[error("inversion radius squared must be nonzero")]
    ZeroRadius,

    #[error("Buchberger step limit of {0} pair reductions exceeded")]
    StepLimit(u64),

    #[error("parse error at {position}: {message}")]
    Parse { position: Position, message: String, expected: Vec<String> },

    #[error("unknown variable `{name}` at {position}")]
    UnknownVariable { name: String, position: Position },

    #[error("reserved variable name `{name}` at {position}")]
    ReservedName { name: String, position: Position },

    #[error("invalid plot window: {0}")]
    Window(String),
}

pub type Result<T> = std::result::Result<T, Error>;
