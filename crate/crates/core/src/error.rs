use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable `{0}` occurs with a negative exponent but its image is not a monomial")]
    NonMonomialInverse(String),
    #[error("site {site} is outside the open lattice 1..={sites}")]
    InvalidSite { site: i64, sites: u32 },
    #[error("power {0} is not a half-integer")]
    NotHalfInteger(String),
    #[error("lattice mismatch: {0:?} vs {1:?}")]
    LatticeMismatch(crate::weyl::Lattice, crate::weyl::Lattice),
    #[error("term cap exceeded: {got} terms > cap {cap}")]
    TermCap { cap: usize, got: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("operation requires commuting entries")]
    NonCommutative,
    #[error("matrix is singular")]
    Singular,
    #[error("index {index} out of range for a chain of {size} sites")]
    IndexOutOfRange { index: i64, size: usize },
    #[error("chain of {size} sites is too short, need at least {need}")]
    ChainTooShort { size: usize, need: usize },
    #[error("the gamma = 1 branch of the scalar auxiliary matrix is degenerate and not supported")]
    GammaOne,
    #[error("conjugation would produce a half-integer power of d2 on {0}")]
    HalfIntegerConjugation(String),
    #[error("unsupported chart: {0}")]
    UnsupportedChart(String),
    #[error("element uses a generator foreign to the chart: {0}")]
    ForeignGenerator(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("truncation level {k} leaves no interior levels, need at least {need}")]
    TruncationTooSmall { k: u32, need: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
