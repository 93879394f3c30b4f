use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("scalar domain mismatch")]
    DomainMismatch,
    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error on {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate name `{0}`")]
    Duplicate(String),
    #[error("path `{0}` is not composable")]
    NonComposable(String),
    #[error("relation `{0}` is not admissible: {1}")]
    NonAdmissible(String, String),
    #[error("relation `{0}` mixes path lengths; only length-homogeneous relations are supported")]
    InhomogeneousRelation(String),
    #[error("path basis exceeds {cap} elements; the algebra is not finite-dimensional within the cap")]
    BasisGrowth { cap: usize },
    #[error("invalid module data: {0}")]
    InvalidModule(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("enumeration budget exceeded: {needed} candidate tuples, budget {budget}")]
    Budget { needed: u128, budget: u128 },
    #[error("not enough primes: need {needed}, have {have}")]
    NotEnoughPrimes { needed: usize, have: usize },

    #[error("non-polynomial count: {0}")]
    NonPolynomialCount(String),
    #[error("Laurent phenomenon violated: {0}")]
    NonExactDivision(String),
    #[error("not finite within cap of {0} seeds")]
    NotFinite(usize),
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

/// Coarse classification, used for CLI exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Resource,
    Consistency,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            Budget { .. } | NotEnoughPrimes { .. } | NotFinite(_) => ErrorKind::Resource,
            NonPolynomialCount(_) | NonExactDivision(_) | Consistency(_) => ErrorKind::Consistency,
            _ => ErrorKind::Input,
        }
    }
}
