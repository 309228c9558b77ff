//! Crate-wide error type.

/// Errors raised by arithmetic, algebra and geometry operations.
///
/// Mathematical precondition failures (`DivisionByZero`, `NotIntegral`,
/// `DeltaNotPositive`, ...) are kept distinct from input/schema problems
/// (`Invalid`, `TypeError`) so that callers can map them to different
/// exit codes.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not integral")]
    NotIntegral,
    #[error("outside unit ball")]
    OutsideUnitBall,
    #[error("type error: {0}")]
    TypeError(String),
    #[error("ord(tau) does not divide ord(g)")]
    NotSeparating,
    #[error("separating function requires two distinct points")]
    SamePoint,
    #[error("no probe element of order {0}")]
    NoProbe(usize),
    #[error("representative set is not stable under g")]
    RepsNotStable,
    #[error("delta is not positive")]
    DeltaNotPositive,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input{}: {msg}", path.as_ref().map(|p| format!(" at {p}")).unwrap_or_default())]
    Invalid {
        msg: String,
        path: Option<String>,
    },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid {
            msg: msg.into(),
            path: None,
        }
    }

    pub fn invalid_at(path: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Invalid {
            msg: msg.into(),
            path: Some(path.into()),
        }
    }

    /// True for failures of a mathematical precondition (as opposed to
    /// malformed input).
    pub fn is_math(&self) -> bool {
        !matches!(self, Error::Invalid { .. } | Error::TypeError(_) | Error::Unsupported(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
