//! Crate-wide error type.

use crate::report::CheckReport;
use crate::scalar::ScalarError;

/// Errors produced by parsing, linear algebra, and precondition checks.
///
/// A failed *verification* (an identity that does not hold) is not an error:
/// checks report failures through [`CheckReport`]. Errors are reserved for
/// malformed input, dimension mismatches, singular matrices where inverses
/// are required, and preconditions whose violation makes a construction
/// meaningless. Preconditions that are themselves checks carry the failing
/// report so callers can surface the witness.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid scalar literal or scalar arithmetic failure.
    #[error(transparent)]
    Scalar(#[from] ScalarError),

    /// A dimension mismatch between two objects that must agree.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    Dim {
        /// What was being combined.
        context: &'static str,
        /// Required dimension.
        expected: usize,
        /// Dimension found.
        got: usize,
    },

    /// A matrix that must be invertible is singular.
    #[error("singular matrix in {context}")]
    Singular {
        /// The operation that needed the inverse.
        context: &'static str,
    },

    /// An operation restricted to rational scalars met a polynomial entry.
    #[error("{context} requires rational scalars, found polynomial entries")]
    PolynomialScalars {
        /// The operation that is rational-only.
        context: &'static str,
    },

    /// An operation needs an algebra with a single product table.
    #[error("{context} requires an algebra with a single product")]
    NeedSingleProduct {
        /// The operation in question.
        context: &'static str,
    },

    /// An operation needs an algebra with a left/right product pair.
    #[error("{context} requires an algebra with a left/right product pair")]
    NeedPairProduct {
        /// The operation in question.
        context: &'static str,
    },

    /// A product name that the algebra does not carry.
    #[error("unknown product {name:?}")]
    UnknownProduct {
        /// The requested product name.
        name: String,
    },

    /// A construction's precondition failed; the embedded report holds the
    /// witness of the failing check.
    #[error("precondition {name} failed")]
    Precondition {
        /// Which precondition failed.
        name: &'static str,
        /// The failing check report.
        report: Box<CheckReport>,
    },

    /// Two redundant computations of the same fact disagreed; indicates a
    /// bug in this crate, never user error.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    /// A structural problem in an input file.
    #[error("{file}: {message}")]
    File {
        /// Path or description of the file.
        file: String,
        /// What was wrong.
        message: String,
    },

    /// A structural problem with in-memory input.
    #[error("invalid input: {0}")]
    Input(String),

    /// An I/O failure while reading or writing a file.
    #[error("i/o error on {path}")]
    Io {
        /// The path involved.
        path: String,
        /// The underlying error.
        #[source]
        source: std::io::Error,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
