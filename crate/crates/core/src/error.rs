use thiserror::Error;

/// Errors raised by ring construction, fusion and the verifiers.
///
/// Input errors (bad labels, malformed files) are kept apart from
/// [`Error::Overflow`], which signals that a level-truncated ring was asked
/// for a product it cannot represent.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("duplicate multiplicity entry ({0}, {1}, {2})")]
    DuplicateEntry(String, String, String),
    #[error("multiplicity for ({0}, {1}, {2}) must be >= 1, got {3}")]
    NonPositiveMultiplicity(String, String, String, i64),
    #[error("label `{0}` has no dual")]
    MissingDual(String),
    #[error("ring has no labels")]
    EmptyRing,
    #[error("ring `{ring}` fails its axioms: {summary}")]
    InvalidRing { ring: String, summary: String },
    #[error("fusion {a} x {b} in `{ring}` exceeds the truncation level")]
    Overflow { ring: String, a: String, b: String },
    #[error("power iteration did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("word {0} is not an even-length word starting on the C side")]
    NotInW(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("ring `{0}` is not pointed")]
    NotPointed(String),
    #[error("ring `{0}` is not of Temperley-Lieb-Jones shape")]
    NotTljShaped(String),
    #[error("even part of `{0}` is not closed under fusion")]
    NotClosed(String),
    #[error("elements belong to different group contexts")]
    ContextMismatch,
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_overflow(&self) -> bool {
        matches!(self, Error::Overflow { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
