use thiserror::Error;

/// Errors raised by the engine. Variants map onto CLI exit codes in [`crate::cli`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("basis mismatch: `{left}` vs `{right}`")]
    BasisMismatch { left: String, right: String },

    #[error("{what}: cap of {cap} exceeded (needs {required}); {hint}")]
    CapExceeded {
        what: &'static str,
        cap: String,
        required: String,
        hint: &'static str,
    },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("malformed root system: {0}")]
    MalformedRootSystem(String),

    #[error("unrecognized Dynkin diagram for Cartan matrix {0:?}")]
    UnrecognizedDiagram(Vec<Vec<i64>>),

    #[error("internal consistency check failed in {stage}: {detail}")]
    Inconsistent { stage: &'static str, detail: String },

    #[error("{0} is not the restriction of any integral weight")]
    NotInImage(String),

    #[error("refusing to conclude, manual review needed: {0}")]
    Refusal(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, cap: impl ToString, required: impl ToString, hint: &'static str) -> Self {
        Error::CapExceeded {
            what,
            cap: cap.to_string(),
            required: required.to_string(),
            hint,
        }
    }

    pub(crate) fn inconsistent(stage: &'static str, detail: impl Into<String>) -> Self {
        Error::Inconsistent {
            stage,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
