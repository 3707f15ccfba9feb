use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("unsupported quiver: {0}")]
    Unsupported(String),

    /// The estimated number of candidate subspace tuples is above the configured budget.
    #[error("enumeration budget exceeded: estimated {estimate} candidate tuples, budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },

    #[error("base case out of range for root {root}: {reason}")]
    BaseCaseOutOfRange { root: String, reason: String },

    #[error("point count is not a polynomial: {0}")]
    PolynomialCountViolated(String),

    /// An identity that holds for every valid input failed. This is a bug.
    #[error("internal consistency violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit status for the command-line tool: 2 for bad input, 3 for
    /// a failed check, 4 when an enumeration is too large.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Input(_) | Error::Unsupported(_) => 2,
            Error::PolynomialCountViolated(_) | Error::Internal(_) => 3,
            Error::BudgetExceeded { .. } | Error::BaseCaseOutOfRange { .. } => 4,
        }
    }
}
