use thiserror::Error;

/// Errors produced by group construction and the subgroup algorithms.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("resource limit exceeded: {budget} = {limit} (needed {needed})")]
    Resource {
        budget: &'static str,
        limit: usize,
        needed: usize,
    },

    #[error("subgroup is not contained in the given group")]
    NotContained,

    #[error("subgroups live in different ambient groups")]
    AmbientMismatch,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unsupported {what}: {value}")]
    Unsupported { what: &'static str, value: String },

    #[error("unknown group {name:?}; known groups: {}", known.join(", "))]
    UnknownGroup { name: String, known: Vec<String> },

    #[error("invalid subgroup specifier {spec:?}: {reason}")]
    BadSpecifier { spec: String, reason: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for budget violations, which callers usually report rather than
    /// treat as a wrong answer.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
