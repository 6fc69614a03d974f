use thiserror::Error;

use crate::function::MAX_VARS;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count {0} is outside the supported range 1..={MAX_VARS}")]
    Capacity(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// The inverse transform produced a value other than +-1 at `point`.
    #[error("spectrum is not the Walsh spectrum of a Boolean function (reconstruction fails at point {point})")]
    SpectrumNotBoolean { point: usize },

    #[error("function is neither bent nor plateaued")]
    NotPlateauedOrBent,

    #[error("anchor point {0} is not in the support")]
    VNotInSupport(usize),

    #[error("support size {0} is not an admissible power of two")]
    SizeNotPowerOfTwo(usize),

    #[error("row {row} is out of range for a Hadamard matrix of order {order}")]
    RowOutOfRange { row: usize, order: usize },

    #[error("support rows are not pairwise distinct (row {0} repeats)")]
    RepeatedRow(usize),

    #[error("dual has weight {weight}, expected {low} or {high}")]
    DualWeight { weight: usize, low: usize, high: usize },

    /// The dual fails the bent-distance condition against profile entry `entry`.
    #[error("dual is not at bent distance to sequence profile entry {entry}")]
    DualNotAtBentDistance { entry: usize },

    #[error("block list violates the Sylvester-Hadamard recursion at index {0}")]
    RecursionViolated(usize),

    #[error("shift vector lies inside the subspace")]
    VInsideE,

    #[error("row sets have different heights ({0} and {1})")]
    HeightMismatch(usize, usize),

    #[error("form expects {expected} coordinates, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("support cannot be split: {0}")]
    SupportNotSplittable(String),

    #[error("combination for delta = {delta} does not satisfy the requested mode")]
    ModeConditionFailed { delta: usize },

    #[error("derivative directions must differ")]
    EqualDirections,

    #[error("outside-MM certificate needs an even number of variables, got {0}")]
    OddArity(usize),

    #[error("sequence length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("support of function {0} is not a linear subspace")]
    SupportsNotLinear(usize),

    #[error("supports do not form a direct sum")]
    NotDirectSum,

    #[error("support dimensions exceed the ambient space")]
    NegativeT,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
