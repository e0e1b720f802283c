use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed input: non-squarefree k, composite "prime", bad parameter shape.
    #[error("validation error: {0}")]
    Validation(String),

    /// Input outside the domain of a formula (odd s for zeta, non-integrable parameter, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Two symbolic values tied to different quadratic fields.
    #[error("field context mismatch: |D| = {0} vs |D| = {1}")]
    Context(u64, u64),

    #[error("cannot add unlike atoms: {0}")]
    IncompatibleAtoms(String),

    #[error("division by zero")]
    DivisionByZero,

    /// Two independent evaluation routes disagreed.
    #[error("identity check failed: {0}")]
    IdentityFailure(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
