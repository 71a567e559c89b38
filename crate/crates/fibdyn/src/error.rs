use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("letter {letter} out of range for alphabet of size {alphabet}")]
    LetterOutOfRange { letter: usize, alphabet: usize },

    #[error("image of letter {letter} is empty")]
    EmptyImage { letter: usize },

    #[error("substitution must have at least one letter")]
    EmptyAlphabet,

    #[error("power must be at least 1")]
    ZeroPower,

    #[error("letter {letter} is not a seed: its image must start with it and have length >= 2")]
    NotASeed { letter: usize },

    #[error("substitution must be primitive for this operation")]
    PrimitivityRequired,

    #[error("substitution must have some image of length >= 2")]
    NotExpanding,

    #[error("letter {letter} never occurs in the fixed point")]
    UnreachableLetter { letter: usize },

    #[error("window {window} at offset {offset} is not a coded block")]
    WindowNotInLanguage { offset: usize, window: String },

    #[error("word is too short: need at least {need} letters, got {got}")]
    WordTooShort { need: usize, got: usize },

    #[error("word is not a concatenation of the blocks; longest parsable prefix has length {longest_prefix}")]
    NotDecomposable { longest_prefix: usize },

    #[error("letter {letter} is not binary (expected 0 or 1)")]
    NonBinaryLetter { letter: usize },

    #[error("cut lengths for block {block} must total {expected}, got {got}")]
    CutLengthMismatch { block: usize, expected: usize, got: usize },

    #[error("cut lengths must be positive")]
    ZeroCut,

    #[error("blocks must cover every letter exactly once (letter {letter} appears {count} times)")]
    BlockCoverage { letter: usize, count: usize },

    #[error("cannot rotate an empty word")]
    EmptyWord,

    #[error("{name} must be at least {min}, got {value}")]
    TooSmall {
        name: &'static str,
        min: i64,
        value: i64,
    },

    #[error("length profile invalid: {reason}")]
    BadLengthProfile { reason: &'static str },

    #[error("certificate failed: {clauses}")]
    CertificateFailure { clauses: String },

    #[error("unsupported dimension {dim}")]
    UnsupportedDimension { dim: usize },

    #[error("matrix dimensions do not match")]
    DimensionMismatch,

    #[error("row {row} of the matrix is zero, so no substitution has this matrix")]
    ZeroRow { row: usize },

    #[error("alphabet sizes do not match ({left} vs {right})")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("letter map has length {got}, expected {expected}")]
    MapLengthMismatch { expected: usize, got: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
