use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Structurally malformed input: bad index, unknown name, wrong shape.
    #[error("input error: {0}")]
    Input(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("elements live over different algebras")]
    AlgebraMismatch,
    /// The trace condition fails, so `U/Ug0` has no nonzero invariant.
    #[error("no invariant: trace of ad'({element}) is {lambda}, not zero")]
    NoInvariant {
        element: String,
        index: usize,
        lambda: Scalar,
    },
    #[error("module is not semisimple over the even part: {0}")]
    NotSemisimple(String),
    #[error("odd dimension {m} exceeds the configured bound {max}")]
    TooManyOdd { m: usize, max: usize },
    /// A property that holds by theorem failed to hold; always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
