use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { got: usize, max: usize },
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("empty scheme: the ideal is the unit ideal")]
    EmptyScheme,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("degenerate random choice ({what}) with seed {seed}")]
    Degenerate { what: String, seed: u64 },
    #[error("Betti table row cap of {0} exceeded")]
    RegularityCapExceeded(usize),
    #[error("Betti table is incomplete")]
    IncompleteTable,
    #[error("point does not lie on the scheme")]
    NotOnScheme,
    #[error("containment failed: {0}")]
    ContainmentFailed(String),
    #[error("no integer divisor class fits degree {degree} and genus {genus}")]
    NoIntegerSolution { degree: i64, genus: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
