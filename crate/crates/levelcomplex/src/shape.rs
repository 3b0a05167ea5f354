//! Matrix shapes and variable identifiers.
//!
//! Everything in this crate works over a generic m×n matrix of
//! indeterminates `x[i,j]` with `2 <= m <= n`. A [`VariableId`] names one
//! cell (1-based row and column); a [`MatrixShape`] fixes the grid.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::Error;

/// The shape of the generic matrix: `m` rows and `n` columns, `2 <= m <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixShape {
    m: u16,
    n: u16,
}

impl MatrixShape {
    /// Creates a shape after validating `2 <= m <= n`.
    pub fn new(m: u16, n: u16) -> Result<Self, Error> {
        if m < 2 || m > n {
            return Err(Error::InvalidShape { m, n });
        }
        Ok(MatrixShape { m, n })
    }

    /// Number of rows.
    pub fn m(&self) -> u16 {
        self.m
    }

    /// Number of columns.
    pub fn n(&self) -> u16 {
        self.n
    }

    /// Total number of cells, `m * n`.
    pub fn num_cells(&self) -> usize {
        self.m as usize * self.n as usize
    }

    /// True when the cell lies inside the grid.
    pub fn contains(&self, v: VariableId) -> bool {
        (1..=self.m).contains(&v.row) && (1..=self.n).contains(&v.col)
    }

    /// Row-major index of a cell, `0..m*n`.
    pub fn cell_index(&self, v: VariableId) -> usize {
        debug_assert!(self.contains(v));
        (v.row as usize - 1) * self.n as usize + (v.col as usize - 1)
    }

    /// Inverse of [`MatrixShape::cell_index`].
    pub fn cell_at(&self, index: usize) -> VariableId {
        debug_assert!(index < self.num_cells());
        VariableId::new(
            (index / self.n as usize) as u16 + 1,
            (index % self.n as usize) as u16 + 1,
        )
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = VariableId> + '_ {
        let n = self.n;
        (1..=self.m).flat_map(move |i| (1..=n).map(move |j| VariableId::new(i, j)))
    }

    /// The cells `(k,k)` for `k = 1..=m` ("main diagonal").
    pub fn diagonal_cells(&self) -> impl Iterator<Item = VariableId> + '_ {
        (1..=self.m).map(|k| VariableId::new(k, k))
    }

    /// All cells off the main diagonal, row-major.
    pub fn off_diagonal_cells(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.cells().filter(|v| !v.is_diagonal())
    }
}

impl fmt::Display for MatrixShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// One matrix entry `x[i,j]`, with 1-based row `i` and column `j`.
///
/// The derived `Ord` is row-major reading order; monomial-order priority is
/// a separate concern handled by [`crate::order::MonomialOrder`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VariableId {
    /// 1-based row index.
    pub row: u16,
    /// 1-based column index.
    pub col: u16,
}

impl VariableId {
    /// Creates the identifier for `x[row,col]`.
    pub fn new(row: u16, col: u16) -> Self {
        VariableId { row, col }
    }

    /// True for cells `(k,k)` on the main diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }

    /// Diagonal index `i - j`; constant along each diagonal of the matrix.
    pub fn diagonal_offset(&self) -> i32 {
        self.row as i32 - self.col as i32
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}
