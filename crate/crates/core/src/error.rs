use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("polynomial is not homogeneous (degrees {0} and {1})")]
    NonHomogeneous(usize, usize),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("number of variables differs ({0} vs {1})")]
    VariableCount(usize, usize),

    #[error("expected a linear form, got degree {0}")]
    NotLinear(usize),

    #[error("linear form is zero")]
    ZeroForm,

    #[error("generators have mixed degrees; an equal-degree ideal is required")]
    MixedDegrees,

    #[error("linear forms {0} and {1} are proportional")]
    ProportionalForms(usize, usize),

    #[error("linear forms are concurrent (coefficient rank {0} < 3)")]
    ConcurrentForms(usize),

    #[error("characteristic {p} is too small for working degree {degree}")]
    Characteristic { p: u64, degree: usize },

    #[error("denominator vanishes in characteristic {0}")]
    DenominatorVanishes(u64),

    #[error("hypothesis h0(K({0})) = 0 fails: the generators have a syzygy of degree {0}")]
    SyzygyHypothesis(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid input: {0}")]
    Input(String),
}
