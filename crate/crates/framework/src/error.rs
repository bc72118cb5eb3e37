use graph_core::GraphError;
use oracles::OracleError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrameworkError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource cap exceeded: {value} {what} > {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl FrameworkError {
    /// True for work-limit failures, as opposed to bad input.
    pub fn is_cap(&self) -> bool {
        matches!(self, Self::CapExceeded { .. } | Self::Oracle(OracleError::CapExceeded { .. }))
    }
}
