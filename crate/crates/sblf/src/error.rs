use thiserror::Error;

/// Errors produced by the symbolic layer.
///
/// Everything here is loud and fatal by design: the toolkit certifies exact
/// statements, so a failed precondition must never degrade into a wrong
/// answer.
#[derive(Debug, Error)]
pub enum Error {
    /// A letter was `0` or referenced a generator outside `[1, rank]`.
    #[error("invalid generator letter {letter} for rank {rank}")]
    InvalidLetter { letter: i32, rank: usize },

    /// Two operands live in free groups of different ranks.
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    /// A word grew past the configured length cap (see `SBLF_WORD_CAP`).
    #[error("word length exceeded cap of {cap} letters")]
    WordCapExceeded { cap: usize },

    /// Claimed images/inverse images do not compose to the identity.
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),

    /// The chain twist table failed its self-validation suite.
    #[error("twist table validation failed: {0}")]
    TableValidation(String),

    /// A name was not found in the twist table / named-element alphabet.
    #[error("unknown mapping class name `{0}`")]
    UnknownName(String),

    /// A name was not found among the table's curves.
    #[error("unknown curve name `{0}`")]
    UnknownCurve(String),

    /// Genus outside the supported range (`genus >= 2`).
    #[error("unsupported genus {0} (need genus >= 2)")]
    UnsupportedGenus(usize),

    /// Homology classes are only defined for curves declared simple.
    #[error("curve `{0}` is not declared simple; refusing to treat it as embedded")]
    NotSimple(String),

    /// The cap homomorphism is only defined on classes preserving the end
    /// curve of the chain.
    #[error("mapping class does not preserve the capped curve; cap homomorphism undefined")]
    CapUndefined,

    /// Mixed bounded-model and closed-model operands.
    #[error("model mismatch: {0}")]
    ModelMismatch(String),

    /// First homology is not infinite cyclic, so there is no canonical
    /// section class to normalize by.
    #[error("normalization requires H_1 = Z, found invariant factors {0:?}")]
    NormalizationUnavailable(Vec<String>),

    /// A descriptor asked for a section where none exists.
    #[error("descriptor has no section: {0}")]
    NoSection(String),

    /// Expression parse failure, with a byte offset into the input.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// Malformed descriptor / factorization JSON.
    #[error("invalid input JSON: {0}")]
    Json(String),

    /// Matrix shape violations.
    #[error("matrix dimension error: {0}")]
    MatrixShape(String),

    /// An index (cycle number, Hurwitz position, ...) was out of range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Invariant count for `s` outside the supported family range.
    #[error("unsupported multiplicity s = {0} (need s >= 2)")]
    UnsupportedMultiplicity(i64),

    /// I/O while reading descriptor or factorization files.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
