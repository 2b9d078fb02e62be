use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed bracket or binary-tree string; `offset` is a byte offset.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// An operation defined only on the augmentation ideal received a term
    /// with a unit-forest component.
    #[error("{op} is not defined on the unit forest")]
    UnitOperand { op: &'static str },

    /// A forest with zero or several trees was used where a single tree is
    /// required.
    #[error("expected a single tree, got a forest with {trees} trees")]
    NotATree { trees: usize },

    /// Weight-indexed constructions need a positive weight.
    #[error("{what} requires n >= 1")]
    ZeroWeight { what: &'static str },

    /// Operadic application with the wrong number of arguments.
    #[error("arity mismatch: element of arity {expected} applied to {got} arguments")]
    ArityMismatch { expected: usize, got: usize },

    /// An operad element must be homogeneous: every basis term of weight
    /// equal to the arity.
    #[error("inhomogeneous operad element: term of weight {got}, arity {arity}")]
    Inhomogeneous { arity: usize, got: usize },

    /// Vertex identifiers are only meaningful relative to their host forest.
    #[error("vertex not contained in the forest")]
    VertexNotFound,

    /// Both operands of a flavored composition must carry the same flavor.
    #[error("flavor mismatch in operad composition")]
    FlavorMismatch,

    /// A checked structural identity failed; carries a description of the
    /// counterexample. Raised by the bridge operations whose contract is
    /// "compute and verify".
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
