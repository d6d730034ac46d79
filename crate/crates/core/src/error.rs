use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("load error: {0}")]
    Load(String),

    #[error("load error: column '{column}' {problem}")]
    SchemaMismatch { column: String, problem: String },

    #[error("load error: duplicate (subject '{subject}', visit {visit}) at rows {first_row} and {second_row}")]
    DuplicateVisit {
        subject: String,
        visit: u32,
        first_row: usize,
        second_row: usize,
    },

    #[error("invalid config: {0}")]
    Config(String),

    #[error("scenario '{0}' selected no rows")]
    EmptyScenario(String),

    #[error("fit error: {0}")]
    Fit(String),

    #[error("apply error: column '{0}' missing from dataset")]
    MissingColumn(String),

    #[error("split error: {0}")]
    Split(String),

    #[error("oversample error: label '{label}' has a single row, cannot interpolate")]
    SmoteSingleton { label: String },

    #[error("model error: {0}")]
    Model(String),

    #[error("evaluation error: {0}")]
    Eval(String),

    #[error("{n_features} features exceed the exact enumeration limit of {limit}; use the sampled engine")]
    EnumerationLimit { n_features: usize, limit: usize },

    #[error("feature mismatch: only in left {only_left:?}, only in right {only_right:?}")]
    FeatureMismatch {
        only_left: Vec<String>,
        only_right: Vec<String>,
    },

    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    #[error("importance source mismatch: expected {expected}, got {got}")]
    SourceMismatch { expected: String, got: String },

    #[error("plot error: {0}")]
    Plot(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for the degenerate-metric class of failures that analyses
    /// record as absent fields instead of aborting.
    pub fn is_undefined_metric(&self) -> bool {
        matches!(self, Error::UndefinedMetric(_))
    }
}
