use thiserror::Error;

/// Errors produced by the growth-rate computations and their CLI surface.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("search depth {requested} exceeds the exhaustive-search cap {cap}")]
    DepthExceeded { requested: usize, cap: usize },

    #[error("{what} {requested} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("breadth-first search would store {required} states, over the budget of {budget}")]
    BudgetExceeded { required: u64, budget: u64 },

    #[error("matrix entry {0} is not an integer")]
    NonIntegerEntry(String),

    #[error("modulus {0} is not a prime below 2^32")]
    NotPrime(u64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("the bound requires nonnegative entries, found {0}")]
    NegativeEntry(String),

    #[error("singular input: {0}")]
    Singular(String),

    #[error("non-finite value encountered: {0}")]
    Nonfinite(String),

    #[error("words must be nonempty")]
    EmptyWord,

    #[error("(k, m) = ({k}, {m}) is outside the hypothesis k, m >= 2 or k = m = 1")]
    OutsideHypothesis { k: String, m: String },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit code for the CLI: 1 input, 2 resource cap, 3 internal invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DepthExceeded { .. }
            | Error::CapExceeded { .. }
            | Error::BudgetExceeded { .. } => 2,
            Error::Nonfinite(_) | Error::Invariant(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
