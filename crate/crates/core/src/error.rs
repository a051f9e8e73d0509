use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight system must have at least two positive weights")]
    InvalidWeights,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not quasi-homogeneous: weighted degrees {0} and {1} both occur")]
    NotQuasiHomogeneous(i64, i64),
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("operands live on different ambient spaces")]
    AmbientMismatch,
    #[error("vector field components imply different degrees {0} and {1}")]
    InconsistentDegrees(i64, i64),
    #[error("vector field has no nonzero component")]
    ZeroField,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("foliation degrees differ: {0} vs {1}")]
    DegreeMismatch(i64, i64),
    #[error("point has all coordinates zero")]
    ZeroPoint,
    #[error("degree {degree} violates d > 1 - max(w_i + w_j) (threshold {threshold})")]
    DegreeConditionViolated { degree: i64, threshold: i64 },
    #[error("dimension {got} is too small (need at least {min})")]
    DimensionTooSmall { got: usize, min: usize },
    #[error("integers {0} and {1} share a common factor")]
    NotPairwiseCoprime(u64, u64),
    #[error("pair sums differ: {0} vs {1}")]
    UnequalPairSums(u64, u64),
    #[error("extra weight {0} shares a factor with {1}")]
    ExtraWeightNotCompatible(u64, u64),
    #[error("polynomials share a common factor (resultant vanishes identically)")]
    CommonFactor,
    #[error("no admissible shear found")]
    ShearExhausted,
    #[error("oracle failure: {0}")]
    OracleFailure(String),
    #[error("vector field has a non-isolated singular set")]
    InfinitelyManySingularities,
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("variable x{index} out of range for {num_vars} variables")]
    VariableIndexOutOfRange { index: usize, num_vars: usize },
    #[error("zero denominator at line {line}, column {column}")]
    ZeroDenominator { line: usize, column: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
