use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The factoring or search work budget ran out before completion.
    #[error("work budget of {budget} steps exhausted while {context}")]
    BudgetExceeded { budget: u64, context: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A certificate failed validation. Violations are listed in registry order.
    #[error("invalid certificate: {}", .0.join("; "))]
    InvalidCertificate(Vec<String>),

    #[error("certificate references unknown relation {0}")]
    UnknownRelation(String),

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
