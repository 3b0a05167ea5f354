//! Crate-wide error type.

use crate::shape::{MatrixShape, VariableId};
use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Shape constructor rejected the dimensions.
    #[error("invalid shape {m}x{n}: need 2 <= m <= n")]
    InvalidShape { m: u16, n: u16 },

    /// Two arguments were built over different shapes.
    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: MatrixShape, right: MatrixShape },

    /// A cell lies outside the grid of the given shape.
    #[error("cell {cell} is outside the {shape} grid")]
    CellOutOfRange { shape: MatrixShape, cell: VariableId },

    /// A custom variable order is not a permutation of all cells.
    #[error("invalid variable order: {reason}")]
    InvalidPermutation { reason: String },

    /// A vertex set refers to a vertex the complex does not have.
    #[error("unknown vertex {vertex}")]
    UnknownVertex { vertex: VariableId },

    /// An operation required a face of the complex.
    #[error("the given vertex set is not a face of the complex")]
    NotAFace,

    /// An operation required one complex to contain another.
    #[error("the second complex is not a subcomplex of the first")]
    NotASubcomplex,

    /// A monomial that must be square-free has an exponent above one.
    #[error("generator {0} is not square-free")]
    NotSquareFree(String),

    /// The characteristic given for a prime field is not prime.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A full-subset sweep was requested over too many vertices.
    #[error(
        "complex has {vertices} vertices; the 2^|V| sweep is capped at {limit} \
         (pass --force, or call betti_table_with_limit with a higher cap)"
    )]
    SweepGuard { vertices: usize, limit: usize },

    /// The complex has more vertices than a face bitmask can hold.
    #[error("complex has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    /// Malformed input data (files, JSON documents, fixtures).
    #[error("parse error: {0}")]
    Parse(String),
}
