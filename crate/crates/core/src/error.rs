//! Error types shared across the kernel.

use thiserror::Error;

/// Errors raised while constructing or interrogating finitely presented
/// structures.  Axiom *failures* are not errors: validators report them in a
/// [`crate::report::ValidationReport`] so the caller gets the full list of
/// violations with witnesses.  `KernelError` is for inputs that are not even
/// well-formed enough to check.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    /// An id referred to a cell that does not exist.
    #[error("unknown {kind} id `{id}`")]
    UnknownId { kind: &'static str, id: String },

    /// A duplicate id was declared for the same cell kind.
    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: &'static str, id: String },

    /// A composite was requested for a non-composable pair.
    #[error("cells `{lhs}` and `{rhs}` are not composable in direction {dir}")]
    NotComposable { lhs: String, rhs: String, dir: u8 },

    /// A required table entry is missing from a finite presentation.
    #[error("missing table entry: {0}")]
    MissingEntry(String),

    /// A structural precondition on an operation's input was violated.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// An enumeration exceeded its configured budget.
    #[error("enumeration exceeded budget of {budget} at {context}")]
    BudgetExceeded { budget: u64, context: String },
}

pub type Result<T> = std::result::Result<T, KernelError>;
