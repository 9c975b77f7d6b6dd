use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in extended-integer {0}")]
    Overflow(&'static str),

    #[error("a spectrum needs at least one prime")]
    EmptySpectrum,

    #[error("spectrum mismatch: {0}")]
    SpectrumMismatch(String),

    #[error("the zero module is not in the domain of {0}")]
    ZeroModule(&'static str),

    #[error("zero is not allowed here: {0}")]
    ZeroRational(&'static str),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("not a Moore family: {0}")]
    NotMoore(String),

    #[error("refused: {0}")]
    Refused(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
