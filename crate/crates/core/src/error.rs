use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not divisible by (q - 1)")]
    NotDivisible(String),

    #[error("generator x[{row},{col}] is out of range for n = {n}")]
    InvalidGenerator { row: usize, col: usize, n: usize },

    #[error("elements live in different algebras (n = {left} vs n = {right})")]
    ContextMismatch { left: usize, right: usize },

    #[error("invalid parabolic block: {0}")]
    InvalidBlock(String),

    #[error("index tuples have different sizes ({rows} rows, {cols} columns)")]
    SizeMismatch { rows: usize, cols: usize },

    #[error("invalid index tuple {0:?}: indices must be strictly increasing within 1..=n")]
    InvalidIndexTuple(Vec<usize>),

    #[error("homogeneous component has dimension {dim}, above the configured bound {bound}")]
    ComponentTooLarge { dim: usize, bound: usize },

    #[error("{0} does not q-commute with the big-cell denominator")]
    NoQCommutation(String),

    #[error("{0} does not vanish at the identity")]
    NotInAugmentationIdeal(String),

    #[error("{0} has counit different from 1")]
    NotAUnit(String),

    #[error("({s}, {c}) is not on the unit circle")]
    NotOnCircle { s: String, c: String },

    #[error("invalid flag type {0:?}")]
    InvalidFlagType(Vec<usize>),

    #[error("fractions with different q-twist weights cannot be added ({0} vs {1})")]
    MixedTwist(i32, i32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("element is not a member of the filtration level it was declared in: {0}")]
    NotInFiltration(String),
}

pub type Result<T> = std::result::Result<T, Error>;
