use thiserror::Error;

use crate::td::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("framework has no arguments")]
    EmptyFramework,

    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),

    #[error("unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("invalid argument name `{0}`")]
    InvalidName(String),

    #[error("framework has {args} arguments, above the brute-force limit of {cap}")]
    OracleCap { args: usize, cap: usize },

    #[error("invalid tree decomposition: {}", fmt_violations(.0))]
    InvalidDecomposition(Vec<Violation>),

    #[error("node {node}: bucket of {size} rows exceeds the projection limit of {cap}")]
    BucketCap { node: usize, size: usize, cap: usize },

    #[error("node {node}: inclusion-exclusion needs {work} steps, above the budget of {budget}")]
    ProjectionBudget { node: usize, work: u128, budget: u128 },

    #[error("projection requires a purged tabled decomposition")]
    NotPurged,

    #[error("invalid CNF: {0}")]
    InvalidCnf(String),

    #[error("{0}")]
    Usage(String),

    #[error("{task}: solver says {solver}, brute force says {oracle}")]
    OracleMismatch {
        task: String,
        solver: String,
        oracle: String,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit status: 1 usage, 2 input, 3 internal, 4 oracle mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::UnknownArgument(_) | Error::OracleCap { .. } => 1,
            Error::Parse { .. }
            | Error::EmptyFramework
            | Error::DuplicateArgument(_)
            | Error::InvalidName(_)
            | Error::InvalidCnf(_)
            | Error::Io(_) => 2,
            Error::InvalidDecomposition(_)
            | Error::BucketCap { .. }
            | Error::ProjectionBudget { .. }
            | Error::NotPurged
            | Error::Invariant(_) => 3,
            Error::OracleMismatch { .. } => 4,
        }
    }
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
