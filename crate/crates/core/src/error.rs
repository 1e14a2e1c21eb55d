use thiserror::Error;

use crate::report::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("{0} is singular")]
    Singular(String),

    /// A construction refused because its hypotheses fail; the report says which.
    #[error("{op}: precondition failed\n{report}")]
    Precondition { op: &'static str, report: Box<CheckReport> },

    #[error("{location}: {message}")]
    Parse { location: String, message: String },

    #[error("structure has no `{0}` section")]
    MissingSection(&'static str),

    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
}

impl Error {
    pub(crate) fn dimension(op: &'static str, detail: impl Into<String>) -> Self {
        Error::DimensionMismatch { op, detail: detail.into() }
    }

    pub(crate) fn precondition(op: &'static str, report: CheckReport) -> Self {
        Error::Precondition { op, report: Box::new(report) }
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }

    /// The failing report carried by a precondition error.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            Error::Precondition { report, .. } => Some(report),
            _ => None,
        }
    }
}
