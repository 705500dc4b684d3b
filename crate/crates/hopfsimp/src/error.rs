use thiserror::Error;

/// Errors surfaced by the library. `Input` covers malformed or out-of-contract
/// arguments; `Capacity` covers requests that exceed the documented exact-arithmetic
/// enumeration bounds and would otherwise run effectively forever.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("capacity error: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
