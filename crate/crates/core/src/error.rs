use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank parameter ell = {0} is not supported (need ell >= 2)")]
    RankTooSmall(usize),

    #[error("index {index} out of range for I = {{0, ..., {ell}}}")]
    IndexOutOfRange { index: usize, ell: usize },

    #[error("root sum has {got} entries, expected {expected}")]
    RootSumLength { got: usize, expected: usize },

    #[error("coefficient of alpha_{0} is zero, cannot remove it")]
    EmptyRootCoefficient(usize),

    #[error("node ({row},{col}) is neither addable nor removable")]
    NotAddableOrRemovable { row: usize, col: usize },

    #[error("partition parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("size mismatch: shape has {shape} nodes but word has length {word}")]
    SizeMismatch { shape: usize, word: usize },

    #[error("residue words have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),

    #[error("residue word {word:?} is not in I^beta for beta = {beta:?}")]
    NotInIBeta { word: Vec<usize>, beta: Vec<u64> },

    #[error("reflection r_{index} leaves the positive cone: {coeffs:?}")]
    LeavesPositiveCone { index: usize, coeffs: Vec<String> },

    #[error("dominantization exceeded {steps} steps without reaching the dominant chamber")]
    DominantizeAbort { steps: usize },

    #[error("weight is not of level one: {0}")]
    NotLevelOne(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
