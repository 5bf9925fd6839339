use thiserror::Error;

use crate::verify::VerificationReport;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("range error: {0}")]
    Range(String),

    #[error("alphabet mismatch: {left} vs {right}")]
    Alphabet { left: u32, right: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported parameters for {construction}: {reason}{}", hint.as_ref().map(|h| format!(" (try {h})")).unwrap_or_default())]
    UnsupportedParameters {
        construction: &'static str,
        reason: String,
        hint: Option<&'static str>,
    },

    /// Twins exist, so no identifying code of this radius can exist.
    #[error("B({d},{n}) is not {t}-identifiable: {} and {} are {t}-twins", twins.0, twins.1)]
    NotIdentifiable {
        d: u32,
        n: u32,
        t: u32,
        twins: (Word, Word),
    },

    /// No closed-form construction applies; a search may still succeed.
    #[error("no known construction for a {t}-identifying code in B({d},{n})")]
    NoKnownConstruction { d: u32, n: u32, t: u32 },

    #[error("construction {construction} failed verification: {report:?}")]
    ConstructionUnverified {
        construction: &'static str,
        report: Box<VerificationReport>,
    },

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("space mismatch: expected B({expected_d},{expected_n}), got B({got_d},{got_n})")]
    SpaceMismatch {
        expected_d: u32,
        expected_n: u32,
        got_d: u32,
        got_n: u32,
    },

    #[error("parse error: {0}")]
    Parse(String),

    /// Two vertices decoded to the same signature; the code is not identifying.
    #[error("ambiguous signature: matched both {} and {}", .0, .1)]
    Ambiguous(Word, Word),
}

pub type Result<T> = std::result::Result<T, Error>;
