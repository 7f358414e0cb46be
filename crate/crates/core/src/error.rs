//! Error type shared across the crate.
//!
//! Failure semantics matter here: a `Verification` error means an inequality
//! that is mathematically guaranteed did not hold, which can only be a bug in
//! this crate, while `Precondition` means the caller handed us an element that
//! does not satisfy the hypotheses of the check. The two are never conflated.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An element index outside `0..|G|`.
    #[error("element {index} out of range for group of order {order}")]
    InvalidElement { index: u32, order: usize },

    /// A permutation generator that is not a valid permutation, or a set of
    /// generators with inconsistent degrees.
    #[error("malformed generator: {0}")]
    MalformedGenerator(String),

    /// The group is larger than the enumeration cap. Never silently truncated.
    #[error("group order {order} exceeds enumeration cap {cap}")]
    CapacityExceeded { order: u128, cap: usize },

    /// Unparseable or invalid group specification.
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    /// A group file (Cayley table or permutation generators) that fails
    /// validation.
    #[error("{path}: {msg}")]
    MalformedFile { path: String, msg: String },

    /// Operation does not apply to this group (e.g. a witness search on an
    /// abelian group).
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),

    /// The caller passed an element violating a stated hypothesis.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A proven inequality failed on concrete data. This is always a bug in
    /// the artifact, never in the mathematics.
    #[error("verification failed: {0}")]
    Verification(String),

    /// Two internal computation routes disagreed.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
