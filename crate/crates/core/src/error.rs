use thiserror::Error;

use crate::polyring::VarId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("monomial length mismatch ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("variable {0} is not in the ring")]
    UnknownVariable(VarId),
    #[error("no image given for variable {0}")]
    MissingImage(VarId),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("quotient is not Artinian: {0} has no pure power in the initial ideal")]
    NotArtinian(VarId),
    #[error("quotient is the zero ring")]
    ZeroRing,
    #[error("local length did not stabilize up to the power {0} of the maximal ideal")]
    NoStabilization(u32),
    #[error("generic reduction gave no agreeing pair of values in {draws} draws (seen: {seen:?})")]
    RetryCapExceeded { draws: usize, seen: Vec<u64> },
    #[error("elimination needs {vars} variables, above the cap of {cap}")]
    VarCapExceeded { vars: usize, cap: usize },
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
