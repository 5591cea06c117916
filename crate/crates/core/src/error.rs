use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid algebra parameters: {0}")]
    InvalidParams(String),

    #[error("unsupported parameters n = {n}, m = {m}: closed forms need m >= n (and n > 1 for witnesses)")]
    Unsupported { n: u64, m: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("search budget exceeded: {bits} free vertices, limit is {max_bits}")]
    Budget { bits: usize, max_bits: usize },

    #[error("malformed document: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
