use thiserror::Error;

/// Errors surfaced by the simulator and its analytics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A model parameter violates its documented bound. The message names
    /// the first constraint that failed.
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    /// The bank's equity can no longer support any lending. `period` is the
    /// first period that could not be financed.
    #[error("bank failure at period {period}: equity {equity} cannot support lending")]
    BankFailure { period: u64, equity: f64 },

    /// An input slice or series is empty or too short for the operation.
    #[error("insufficient input: {0}")]
    InsufficientInput(String),

    /// The input is structurally valid but carries no usable signal
    /// (e.g. all sizes equal, so no tail slope exists).
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
