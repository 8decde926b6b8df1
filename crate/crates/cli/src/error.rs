use thiserror::Error;

/// Errors that stop the driver before or while writing a report. Axiom
/// failures are never errors.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("plan schema: {0}")]
    Schema(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("report: {0}")]
    Report(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}
