use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are grouped by how a caller should react, and the CLI maps them
/// onto its exit-code contract: usage/domain/instance problems are caller
/// mistakes, `BoundExceeded` is a refusal to start an oversized search, and
/// `OracleViolation` means a supplied oracle broke its own contract while
/// being queried.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed arguments: mismatched lengths, out-of-range vertices, kinds
    /// that do not match.
    #[error("usage: {0}")]
    Usage(String),

    /// Structurally valid arguments outside an operation's domain (for
    /// example the all-zero sign vector where a nonzero one is required).
    #[error("domain: {0}")]
    Domain(String),

    /// An instance violates an invariant the operation relies on.
    #[error("invalid instance: {0}")]
    Instance(String),

    /// The instance is degenerate for this reduction; callers are expected
    /// to short-circuit with the trivial solution instead.
    #[error("degenerate instance: {0}")]
    Degenerate(String),

    /// An oracle returned something outside its contract.
    #[error("oracle violation on {query}: {detail}")]
    OracleViolation { query: String, detail: String },

    /// The search was refused because the instance exceeds a configured bound.
    #[error("bound exceeded: {what} is {actual}, limit {limit}")]
    BoundExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// A state the surrounding proofs rule out for valid inputs. Reaching it
    /// means a bug or hand-tampered data, never a routine failure.
    #[error("internal consistency: {0}")]
    Inconsistent(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn instance(msg: impl Into<String>) -> Self {
        Error::Instance(msg.into())
    }

    pub fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }

    pub fn oracle(query: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::OracleViolation {
            query: query.into(),
            detail: detail.into(),
        }
    }
}
