//! Error type shared across the pipeline.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty tutorial")]
    EmptyTutorial,

    #[error("invalid split level {0}, expected 1-4")]
    InvalidSplitLevel(u8),

    #[error("invalid API name {0:?}")]
    InvalidApiName(String),

    #[error("label rows reference missing fragments:\n{}", .0.join("\n"))]
    MissingFragments(Vec<String>),

    #[error("conflicting labels for {api} in {tutorial_id}/{fragment_id}")]
    ConflictingLabels {
        api: String,
        tutorial_id: String,
        fragment_id: String,
    },

    #[error("labels file: {0}")]
    LabelsFormat(String),

    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },

    #[error("Q&A corpus line {line}: {message}")]
    QaRecord { line: usize, message: String },

    #[error("Q&A corpus is empty")]
    EmptyQaCorpus,

    #[error("duplicate API specification entry for {0}")]
    DuplicateSpecEntry(String),

    #[error("empty training corpus")]
    EmptyCorpus,

    #[error("cannot train on an empty instance set")]
    EmptyTrainingSet,

    #[error("feature {0:?} missing from vector")]
    MissingFeature(String),

    #[error("API {0} has no specification description")]
    MissingDescription(String),

    #[error("no API has any relevant fragment; threshold undefined")]
    NoRelevantPairs,

    #[error("dataset needs at least 2 labeled pairs, found {0}")]
    TooFewLabeledPairs(usize),

    #[error("unknown tutorial {0:?}")]
    UnknownTutorial(String),

    #[error("unknown API {0:?}")]
    UnknownApi(String),

    #[error("pair references missing fragment {tutorial_id}/{fragment_id}")]
    PairWithoutFragment {
        tutorial_id: String,
        fragment_id: String,
    },

    #[error("model file: {0}")]
    ModelFormat(String),

    #[error("config: {0}")]
    Config(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, err: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            message: err.to_string(),
        }
    }
}
