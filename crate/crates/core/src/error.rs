use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse {what}: {input}")]
    Parse { what: &'static str, input: String },
    #[error("malformed algebra: {0}")]
    Malformed(String),
    #[error("bracket {bracket} has value `{value}` of degree {degree}, expected {expected}")]
    BracketDegree { bracket: String, value: String, degree: i32, expected: i32 },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("substitution for `{0}` is not homogeneous of the generator's degree")]
    Inhomogeneous(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("differential does not square to zero at degree {degree}, weight {weight}: {detail}")]
    NotAComplex { degree: i32, weight: u32, detail: String },
    #[error("out of range: {0}")]
    Range(String),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Errors caused by bad input rather than a failed mathematical check.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::NotAComplex { .. } | Error::BracketDegree { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
