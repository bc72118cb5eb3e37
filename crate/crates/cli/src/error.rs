use biclique_free::BicliqueError;
use framework::FrameworkError;
use graph_core::GraphError;
use oracles::OracleError;
use reductions::ReductionError;
use sparse_structure::SparseError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("resource cap exceeded: {0}")]
    Cap(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for bad input (and I/O), 3 for a resource cap, 4 for a failed check.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Verification(_) => 4,
        }
    }
}

// Inner errors already carry their own "invalid input: " prefix.
fn invalid(e: impl ToString) -> CliError {
    let s = e.to_string();
    CliError::Invalid(s.strip_prefix("invalid input: ").map(str::to_string).unwrap_or(s))
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            _ => invalid(e),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::TooLarge { .. } => CliError::Cap(e.to_string()),
            _ => invalid(e),
        }
    }
}

impl From<FrameworkError> for CliError {
    fn from(e: FrameworkError) -> Self {
        match e {
            FrameworkError::Oracle(o) => o.into(),
            FrameworkError::Graph(g) => g.into(),
            e if e.is_cap() => CliError::Cap(e.to_string()),
            e => invalid(e),
        }
    }
}

impl From<BicliqueError> for CliError {
    fn from(e: BicliqueError) -> Self {
        match e {
            BicliqueError::Framework(f) => f.into(),
            e => invalid(e),
        }
    }
}

impl From<SparseError> for CliError {
    fn from(e: SparseError) -> Self {
        match e {
            SparseError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            SparseError::Oracle(o) => o.into(),
            SparseError::Graph(g) => g.into(),
            e => invalid(e),
        }
    }
}

impl From<ReductionError> for CliError {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::Oracle(o) => o.into(),
            e => invalid(e),
        }
    }
}
