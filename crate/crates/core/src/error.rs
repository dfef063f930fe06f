use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token {token:?}: expected a<k>, A<k> or a signed integer")]
    MalformedToken { token: String },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },

    #[error("braid needs at least {min} strands, got {strands}")]
    TooFewStrands { strands: usize, min: usize },

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("word contains a negative letter at position {position}")]
    NotPositive { position: usize },

    #[error("shift {shift} exceeds word length {len}")]
    ShiftOutOfRange { shift: usize, len: usize },

    #[error("matrix is not square ({rows} rows, row {row} has {cols} entries)")]
    NotSquare { rows: usize, row: usize, cols: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("torus link T({p}, {q}) outside supported range 2 <= p <= 4, q >= 1")]
    UnsupportedTorus { p: i64, q: i64 },

    #[error("closure splits into {components} pieces; expected a non-split closure")]
    SplitClosure { components: usize },

    #[error("invalid reduction target {target} for {strands} strands")]
    InvalidTarget { target: usize, strands: usize },

    #[error("block must be a positive 4-braid word of length 4, got length {len} on {strands} strands")]
    InvalidBlock { len: usize, strands: usize },

    #[error("power times word length ({total}) is not a multiple of 4 with n a multiple of 4 (n = {n})")]
    Divisibility { n: usize, total: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
