//! IO, reports, fuzzing and self-checks on top of [`bchrom_core`].

pub mod dimacs;
pub mod fuzz;
pub mod oracle;
pub mod random;
pub mod report;
pub mod selftest;

pub use bchrom_core as core;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] dimacs::ParseError),
    #[error(transparent)]
    Core(#[from] bchrom_core::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Invalid(String),
}

/// Search budget used when none is given.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// `BCHROM_BUDGET` if set and numeric, else [`DEFAULT_BUDGET`].
pub fn default_budget() -> u64 {
    std::env::var("BCHROM_BUDGET").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_BUDGET)
}
