use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] e8grade_core::Error),
}

impl CliError {
    /// Short tag printed as `error[<tag>]:` on standard error.
    pub fn tag(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
            CliError::Io(_) => "io",
            CliError::Json(_) => "parse",
            CliError::Core(_) => "compute",
        }
    }
}
