//! Monomial orders on the matrix variables and initial ideals of 2-minors.
//!
//! All orders here are degree-reverse-lexicographic with respect to some
//! total priority on the variables `x[i,j]`: higher total degree wins, and
//! ties are broken by scanning exponents from the *lowest*-priority variable
//! upward — at the first variable where the exponents differ, the monomial
//! with the *smaller* exponent is the larger one.
//!
//! Three built-in priorities are provided, plus arbitrary custom
//! permutations. The interesting ones place the diagonal cells `(k,k)` at
//! the very bottom, which forces every leading term of a 2-minor to avoid
//! the diagonal and makes the resulting initial ideal square-free.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;
use crate::shape::{MatrixShape, VariableId};

/// A monomial in the cells of a fixed [`MatrixShape`], stored as an
/// exponent vector over the row-major cell indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    shape: MatrixShape,
    exponents: Vec<u8>,
}

impl Monomial {
    /// The monomial `1`.
    pub fn one(shape: MatrixShape) -> Self {
        Monomial { shape, exponents: vec![0; shape.num_cells()] }
    }

    /// Product of the given variables (repetitions allowed).
    pub fn from_cells(shape: MatrixShape, cells: &[VariableId]) -> Result<Self, Error> {
        let mut mono = Monomial::one(shape);
        for &cell in cells {
            if !shape.contains(cell) {
                return Err(Error::CellOutOfRange { shape, cell });
            }
            mono.exponents[shape.cell_index(cell)] += 1;
        }
        Ok(mono)
    }

    /// The shape this monomial lives over.
    pub fn shape(&self) -> MatrixShape {
        self.shape
    }

    /// Exponent of the given cell.
    pub fn exponent(&self, cell: VariableId) -> u8 {
        self.exponents[self.shape.cell_index(cell)]
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exponents.iter().map(|&e| e as u32).sum()
    }

    /// True when every exponent is 0 or 1.
    pub fn is_square_free(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// The cells with nonzero exponent, row-major.
    pub fn support(&self) -> Vec<VariableId> {
        (0..self.exponents.len())
            .filter(|&k| self.exponents[k] > 0)
            .map(|k| self.shape.cell_at(k))
            .collect()
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.shape == other.shape
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    /// Componentwise product.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.shape, other.shape);
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { shape: self.shape, exponents }
    }

    /// Exact quotient; caller must ensure `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a - b)
            .collect();
        Monomial { shape: self.shape, exponents }
    }

    /// Least common multiple (componentwise max).
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.shape, other.shape);
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial { shape: self.shape, exponents }
    }

    pub(crate) fn exponents(&self) -> &[u8] {
        &self.exponents
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in 0..self.exponents.len() {
            let e = self.exponents[k];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.shape.cell_at(k))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A 2x2 minor of the generic matrix, named by its row pair and column pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Minor2 {
    /// Row indices `(i, k)` with `i < k`.
    pub rows: (u16, u16),
    /// Column indices `(j, l)` with `j < l`.
    pub cols: (u16, u16),
}

impl Minor2 {
    /// Creates a minor after validating index order and range.
    pub fn new(shape: MatrixShape, rows: (u16, u16), cols: (u16, u16)) -> Result<Self, Error> {
        let minor = Minor2 { rows, cols };
        if rows.0 >= rows.1 || cols.0 >= cols.1 {
            return Err(Error::Parse(format!(
                "minor rows/cols must be strictly increasing pairs, got {rows:?} {cols:?}"
            )));
        }
        for cell in minor.cells() {
            if !shape.contains(cell) {
                return Err(Error::CellOutOfRange { shape, cell });
            }
        }
        Ok(minor)
    }

    /// All `C(m,2) * C(n,2)` minors of the shape, deterministic order.
    pub fn all(shape: MatrixShape) -> Vec<Minor2> {
        let mut minors = Vec::new();
        for i in 1..=shape.m() {
            for k in i + 1..=shape.m() {
                for j in 1..=shape.n() {
                    for l in j + 1..=shape.n() {
                        minors.push(Minor2 { rows: (i, k), cols: (j, l) });
                    }
                }
            }
        }
        minors
    }

    /// The four cells of the minor.
    pub fn cells(&self) -> [VariableId; 4] {
        [
            VariableId::new(self.rows.0, self.cols.0),
            VariableId::new(self.rows.0, self.cols.1),
            VariableId::new(self.rows.1, self.cols.0),
            VariableId::new(self.rows.1, self.cols.1),
        ]
    }

    /// The term `x[i,j] * x[k,l]` (main-diagonal orientation).
    pub fn diagonal_term(&self, shape: MatrixShape) -> Monomial {
        Monomial::from_cells(
            shape,
            &[
                VariableId::new(self.rows.0, self.cols.0),
                VariableId::new(self.rows.1, self.cols.1),
            ],
        )
        .expect("minor cells validated at construction")
    }

    /// The term `x[i,l] * x[k,j]` (antidiagonal orientation).
    pub fn antidiagonal_term(&self, shape: MatrixShape) -> Monomial {
        Monomial::from_cells(
            shape,
            &[
                VariableId::new(self.rows.0, self.cols.1),
                VariableId::new(self.rows.1, self.cols.0),
            ],
        )
        .expect("minor cells validated at construction")
    }
}

impl fmt::Display for Minor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{}|{},{}]",
            self.rows.0, self.rows.1, self.cols.0, self.cols.1
        )
    }
}

/// Variable priority defining a degree-reverse-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Off-diagonal cells in row-major reading order, then the diagonal
    /// cells `(1,1)..(m,m)` at the bottom.
    PaperRows,
    /// Off-diagonal cells sorted by decreasing diagonal offset `i-j`
    /// (lower-left diagonals first), within a diagonal by increasing row
    /// (higher cell first), then the diagonal cells `(1,1)..(m,m)`.
    PaperDiagonals,
    /// All cells in plain row-major reading order, diagonal included.
    NaturalRowMajor,
    /// Arbitrary priority: all `m*n` cells listed from highest to lowest.
    Custom(Vec<VariableId>),
}

impl MonomialOrder {
    /// Short stable name used in CLI arguments and JSON output.
    pub fn label(&self) -> &'static str {
        match self {
            MonomialOrder::PaperRows => "rows",
            MonomialOrder::PaperDiagonals => "diag",
            MonomialOrder::NaturalRowMajor => "natural",
            MonomialOrder::Custom(_) => "custom",
        }
    }

    /// The priority list (highest first) this order induces on a shape.
    pub fn priority(&self, shape: MatrixShape) -> Result<Vec<VariableId>, Error> {
        let cells = match self {
            MonomialOrder::PaperRows => shape
                .off_diagonal_cells()
                .chain(shape.diagonal_cells())
                .collect(),
            MonomialOrder::PaperDiagonals => {
                let mut off: Vec<VariableId> = shape.off_diagonal_cells().collect();
                off.sort_by_key(|v| (-v.diagonal_offset(), v.row));
                off.extend(shape.diagonal_cells());
                off
            }
            MonomialOrder::NaturalRowMajor => shape.cells().collect(),
            MonomialOrder::Custom(cells) => {
                validate_permutation(shape, cells)?;
                cells.clone()
            }
        };
        debug_assert_eq!(cells.len(), shape.num_cells());
        Ok(cells)
    }

    /// Parses a custom priority from text: one cell per line as `i j`,
    /// highest priority first, exactly `m*n` lines, each cell once.
    pub fn custom_from_text(shape: MatrixShape, text: &str) -> Result<Self, Error> {
        let mut cells = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(i), Some(j), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::InvalidPermutation {
                    reason: format!("line {}: expected `i j`, got `{line}`", lineno + 1),
                });
            };
            let row: u16 = i.parse().map_err(|_| Error::InvalidPermutation {
                reason: format!("line {}: bad row index `{i}`", lineno + 1),
            })?;
            let col: u16 = j.parse().map_err(|_| Error::InvalidPermutation {
                reason: format!("line {}: bad column index `{j}`", lineno + 1),
            })?;
            cells.push(VariableId::new(row, col));
        }
        validate_permutation(shape, &cells)?;
        Ok(MonomialOrder::Custom(cells))
    }
}

fn validate_permutation(shape: MatrixShape, cells: &[VariableId]) -> Result<(), Error> {
    if cells.len() != shape.num_cells() {
        return Err(Error::InvalidPermutation {
            reason: format!(
                "expected {} cells for shape {shape}, got {}",
                shape.num_cells(),
                cells.len()
            ),
        });
    }
    let mut seen = vec![false; shape.num_cells()];
    for &cell in cells {
        if !shape.contains(cell) {
            return Err(Error::InvalidPermutation {
                reason: format!("cell {cell} is outside the {shape} grid"),
            });
        }
        let k = shape.cell_index(cell);
        if seen[k] {
            return Err(Error::InvalidPermutation { reason: format!("cell {cell} listed twice") });
        }
        seen[k] = true;
    }
    Ok(())
}

/// Precomputed comparison table for one order over one shape.
///
/// Construction validates custom permutations once; comparisons are then
/// allocation-free.
#[derive(Clone, Debug)]
pub struct OrderTable {
    shape: MatrixShape,
    /// Cell indices scanned from lowest priority to highest.
    scan: Vec<usize>,
}

impl OrderTable {
    /// Builds the table for an order over a shape.
    pub fn new(shape: MatrixShape, order: &MonomialOrder) -> Result<Self, Error> {
        let priority = order.priority(shape)?;
        let scan = priority
            .iter()
            .rev()
            .map(|&cell| shape.cell_index(cell))
            .collect();
        Ok(OrderTable { shape, scan })
    }

    /// The shape this table was built for.
    pub fn shape(&self) -> MatrixShape {
        self.shape
    }

    /// Degree-reverse-lexicographic comparison of two monomials.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, Error> {
        if a.shape() != self.shape {
            return Err(Error::ShapeMismatch { left: self.shape, right: a.shape() });
        }
        if b.shape() != self.shape {
            return Err(Error::ShapeMismatch { left: self.shape, right: b.shape() });
        }
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            unequal => return Ok(unequal),
        }
        for &k in &self.scan {
            let (ea, eb) = (a.exponents()[k], b.exponents()[k]);
            if ea != eb {
                // Reverse-lex twist: at the lowest differing variable the
                // monomial with the smaller exponent is the larger one.
                return Ok(eb.cmp(&ea));
            }
        }
        Ok(Ordering::Equal)
    }

    /// Leading term of the 2-minor `x[i,j]x[k,l] - x[i,l]x[k,j]` under this
    /// order. Both terms have degree two, so the reverse-lex tie-break
    /// decides.
    pub fn leading_term(&self, minor: Minor2) -> Monomial {
        let diag = minor.diagonal_term(self.shape);
        let anti = minor.antidiagonal_term(self.shape);
        match self.compare(&diag, &anti).expect("terms share the table's shape") {
            Ordering::Less => anti,
            _ => diag,
        }
    }
}

/// Compares two monomials under `order`, validating shape agreement.
pub fn compare_monomials(
    shape: MatrixShape,
    order: &MonomialOrder,
    a: &Monomial,
    b: &Monomial,
) -> Result<Ordering, Error> {
    OrderTable::new(shape, order)?.compare(a, b)
}

/// Leading term of one 2-minor under `order`.
pub fn leading_term(
    shape: MatrixShape,
    order: &MonomialOrder,
    minor: Minor2,
) -> Result<Monomial, Error> {
    Ok(OrderTable::new(shape, order)?.leading_term(minor))
}

/// Leading terms of all 2-minors: the generators of the initial ideal.
///
/// The 2-minors form a Groebner basis for every order produced by this
/// module (verifiable with [`crate::groebner::verify_groebner_basis`]), so
/// these monomials generate the full initial ideal of the ideal of
/// 2-minors. The result follows the deterministic minor order of
/// [`Minor2::all`].
pub fn initial_ideal_generators(
    shape: MatrixShape,
    order: &MonomialOrder,
) -> Result<Vec<Monomial>, Error> {
    let table = OrderTable::new(shape, order)?;
    Ok(Minor2::all(shape)
        .into_iter()
        .map(|minor| table.leading_term(minor))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(shape: MatrixShape, i: u16, j: u16) -> Monomial {
        Monomial::from_cells(shape, &[VariableId::new(i, j)]).unwrap()
    }

    #[test]
    fn priority_rows_3x4() {
        let shape = MatrixShape::new(3, 4).unwrap();
        let priority = MonomialOrder::PaperRows.priority(shape).unwrap();
        let expected: Vec<(u16, u16)> = vec![
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 1),
            (2, 3),
            (2, 4),
            (3, 1),
            (3, 2),
            (3, 4),
            (1, 1),
            (2, 2),
            (3, 3),
        ];
        let got: Vec<(u16, u16)> = priority.iter().map(|v| (v.row, v.col)).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn priority_diagonals_3x4() {
        let shape = MatrixShape::new(3, 4).unwrap();
        let priority = MonomialOrder::PaperDiagonals.priority(shape).unwrap();
        // Diagonals scanned from lower-left (largest i-j) to upper-right,
        // higher cell first inside a diagonal, main diagonal last.
        let expected: Vec<(u16, u16)> = vec![
            (3, 1),
            (2, 1),
            (3, 2),
            (1, 2),
            (2, 3),
            (3, 4),
            (1, 3),
            (2, 4),
            (1, 4),
            (1, 1),
            (2, 2),
            (3, 3),
        ];
        let got: Vec<(u16, u16)> = priority.iter().map(|v| (v.row, v.col)).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn degrevlex_2x2() {
        let shape = MatrixShape::new(2, 2).unwrap();
        let diag = var(shape, 1, 1).mul(&var(shape, 2, 2));
        let anti = var(shape, 1, 2).mul(&var(shape, 2, 1));
        let cmp = compare_monomials(shape, &MonomialOrder::PaperRows, &diag, &anti).unwrap();
        assert_eq!(cmp, Ordering::Less);
    }

    #[test]
    fn degree_dominates() {
        let shape = MatrixShape::new(2, 2).unwrap();
        let low = var(shape, 1, 2);
        let high = var(shape, 2, 1).mul(&var(shape, 2, 1));
        let cmp = compare_monomials(shape, &MonomialOrder::PaperRows, &high, &low).unwrap();
        assert_eq!(cmp, Ordering::Greater);
    }

    #[test]
    fn leading_terms_3x4() {
        let shape = MatrixShape::new(3, 4).unwrap();
        let order = MonomialOrder::PaperRows;
        // No cone variable in sight: antidiagonal leads.
        let minor = Minor2::new(shape, (1, 2), (3, 4)).unwrap();
        let lt = leading_term(shape, &order, minor).unwrap();
        assert_eq!(lt, minor.antidiagonal_term(shape));
        // Antidiagonal hits the main diagonal at (3,3): diagonal leads.
        let minor = Minor2::new(shape, (1, 3), (3, 4)).unwrap();
        let lt = leading_term(shape, &order, minor).unwrap();
        assert_eq!(lt, minor.diagonal_term(shape));
    }

    #[test]
    fn generator_count() {
        let shape = MatrixShape::new(3, 4).unwrap();
        let generators =
            initial_ideal_generators(shape, &MonomialOrder::PaperRows).unwrap();
        assert_eq!(generators.len(), 18);
        assert!(generators.iter().all(|g| g.is_square_free()));
    }

    #[test]
    fn custom_permutation_rejects_garbage() {
        let shape = MatrixShape::new(2, 2).unwrap();
        assert!(MonomialOrder::custom_from_text(shape, "1 1\n1 2\n2 1\n").is_err());
        assert!(MonomialOrder::custom_from_text(shape, "1 1\n1 2\n2 1\n2 1\n").is_err());
        assert!(MonomialOrder::custom_from_text(shape, "1 1\n1 2\n2 1\n2 2\n").is_ok());
    }

    #[test]
    fn shape_mismatch_rejected() {
        let s22 = MatrixShape::new(2, 2).unwrap();
        let s23 = MatrixShape::new(2, 3).unwrap();
        let a = var(s22, 1, 2);
        let b = var(s23, 1, 2);
        assert!(compare_monomials(s22, &MonomialOrder::PaperRows, &a, &b).is_err());
    }
}
