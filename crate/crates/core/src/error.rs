use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial of degree {degree} exceeds the bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },

    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("non-integral coefficient in {context}")]
    NotIntegral { context: String },

    #[error("series is not invertible: constant coefficient must be a nonzero rational constant")]
    NotInvertible,

    #[error("{what}: {got} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        got: usize,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    /// True for errors caused by bad input or violated caps, as opposed to
    /// internal mathematical inconsistencies.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. }
                | Error::InvalidGraph(_)
                | Error::InvalidComposition(_)
                | Error::Parse { .. }
                | Error::DegreeExceedsBound { .. }
                | Error::ZeroPolynomial
        )
    }
}
