use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("capacity: group order {order} exceeds cap {cap}")]
    Capacity { order: usize, cap: usize },
    #[error("group law violated: {0}")]
    GroupLaw(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("character is not irreducible: {0}")]
    NotIrreducible(String),
    #[error("class function is not a character: {0}")]
    NotCharacter(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("internal diagnostic: {0}")]
    Diagnostic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
