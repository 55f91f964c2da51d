use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{0} is undefined on the empty partition")]
    EmptyPartition(&'static str),

    #[error("size mismatch: |{0}| != |{1}|")]
    SizeMismatch(String, String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("preset {0} requires n >= {1}")]
    PresetRange(String, u32),

    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("series inverse needs constant term 1")]
    NotInvertible,

    #[error("integer overflow computing {0}")]
    Overflow(&'static str),
}
