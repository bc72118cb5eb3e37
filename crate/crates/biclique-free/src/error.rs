use framework::FrameworkError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BicliqueError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The reduction hit a configuration that a `K_{d,d}`-free graph cannot have.
    #[error("the graph is not K_{{{d},{d}}}-free: {reason}")]
    NotBicliqueFree { d: usize, reason: String },
    #[error(transparent)]
    Framework(#[from] FrameworkError),
}
