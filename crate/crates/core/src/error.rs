use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A numeric parameter is outside its admissible range (e.g. alpha <= 1).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A rational literal could not be parsed.
    #[error("cannot parse rational {input:?}: {reason}")]
    ParseRational { input: String, reason: &'static str },

    /// An internal consistency check failed. Seeing this means a bug in the
    /// search, not bad input.
    #[error("logic fault: {0}")]
    LogicFault(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! logic_fault {
    ($($arg:tt)*) => {
        $crate::error::Error::LogicFault(format!($($arg)*))
    };
}
pub(crate) use logic_fault;
