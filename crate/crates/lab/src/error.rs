use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("no check matches `{0}`")]
    UnknownCheck(String),
    #[error("invalid filter `{0}`: {1}")]
    BadFilter(String, String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] hesse_core::Error),
}

pub type Result<T> = std::result::Result<T, LabError>;
