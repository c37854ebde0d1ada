//! Error type shared across the workspace.

use std::fmt;

/// Errors raised by exact computations and experiment drivers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An enclosure could not be tightened enough to decide a comparison or
    /// meet a requested width within the configured working precision.
    PrecisionExhausted,
    /// A prime argument was required.
    NotPrime(u64),
    /// A quadratic surd argument was malformed (zero denominator, square
    /// radicand where an irrational is required, ...).
    InvalidSurd(String),
    /// The folding construction needs the last partial quotient of the seed
    /// fraction to be at least 2.
    FoldNotApplicable,
    /// An argument fell outside the domain where a formula or scan is valid.
    OutOfRange(String),
    /// An explicit work budget (nodes, candidates, iterations) ran out.
    BudgetExceeded(String),
    /// A scan grid or enclosure resolution is too coarse for the requested
    /// statistic to be meaningful.
    ResolutionTooCoarse,
    /// A sequence of records was too short for the requested estimate.
    TooFewRecords { needed: usize, got: usize },
    /// A point set was too small for the requested statistic.
    TooFewPoints { needed: usize, got: usize },
    /// A root refinement bracket did not exhibit a sign change.
    NoSignChange,
    /// Malformed input (parse errors, violated structural invariants).
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PrecisionExhausted => {
                write!(f, "working precision exhausted before the result was decided")
            }
            Error::NotPrime(n) => write!(f, "{n} is not prime"),
            Error::InvalidSurd(msg) => write!(f, "invalid quadratic surd: {msg}"),
            Error::FoldNotApplicable => {
                write!(f, "folding needs a seed fraction whose last partial quotient is at least 2")
            }
            Error::OutOfRange(msg) => write!(f, "argument out of range: {msg}"),
            Error::BudgetExceeded(msg) => write!(f, "work budget exceeded: {msg}"),
            Error::ResolutionTooCoarse => write!(f, "scan resolution too coarse"),
            Error::TooFewRecords { needed, got } => {
                write!(f, "too few records: needed {needed}, got {got}")
            }
            Error::TooFewPoints { needed, got } => {
                write!(f, "too few points: needed {needed}, got {got}")
            }
            Error::NoSignChange => write!(f, "bracket endpoints do not straddle a sign change"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Result alias used across the workspace.
pub type Result<T> = std::result::Result<T, Error>;
