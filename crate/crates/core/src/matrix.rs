//! Rectangular matrices over a skew field.
//!
//! A single row-major grid serves both index notations. Cell `(i, j)` is the
//! RC-notation entry with lower (row) index `i` and upper (column) index `j`.
//! The CR notation reads the same grid with the roles swapped, which is what
//! [`cr_product`] and the CR quasideterminant do through [`SkewMatrix::transpose`].
//!
//! All indices in the library API are 0-based.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::skewfield::{Quaternion, SkewField};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewMatrix<F> {
    rows: usize,
    cols: usize,
    cells: Vec<F>,
}

/// Ordered row and column index sets of equal size, selecting a square minor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexSelection {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl IndexSelection {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} rows selected against {} columns",
                rows.len(),
                cols.len()
            )));
        }
        Ok(IndexSelection { rows, cols })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// The same selection read on the transposed grid.
    pub fn swapped(&self) -> Self {
        IndexSelection {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }
}

impl<F: SkewField> SkewMatrix<F> {
    pub fn from_vec(rows: usize, cols: usize, cells: Vec<F>) -> Result<Self> {
        if cells.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} cells for a {rows}x{cols} matrix",
                cells.len()
            )));
        }
        Ok(SkewMatrix { rows, cols, cells })
    }

    /// Build from nested rows. An empty outer vector gives the 0×0 matrix.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != n_cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {n_cols}",
                rows[bad].len()
            )));
        }
        Ok(SkewMatrix {
            rows: n_rows,
            cols: n_cols,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut cells = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                cells.push(f(i, j));
            }
        }
        SkewMatrix { rows, cols, cells }
    }

    /// 1×n matrix.
    pub fn row_vector(entries: Vec<F>) -> Self {
        SkewMatrix {
            rows: 1,
            cols: entries.len(),
            cells: entries,
        }
    }

    /// n×1 matrix.
    pub fn col_vector(entries: Vec<F>) -> Self {
        SkewMatrix {
            rows: entries.len(),
            cols: 1,
            cells: entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SkewMatrix::from_fn(rows, cols, |_, _| F::zero())
    }

    /// The Kronecker delta δ of order `n`.
    pub fn identity(n: usize) -> Self {
        SkewMatrix::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().all(F::is_zero)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&F> {
        (i < self.rows && j < self.cols).then(|| &self.cells[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.cells[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[F]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn cells(&self) -> &[F] {
        &self.cells
    }

    pub fn into_cells(self) -> Vec<F> {
        self.cells
    }

    pub fn transpose(&self) -> Self {
        SkewMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Arbitrary submatrix picking the listed rows and columns in order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if let Some(&r) = rows.iter().find(|&&r| r >= self.rows) {
            return Err(Error::IndexOutOfRange(format!("row {r} of {}", self.rows)));
        }
        if let Some(&c) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::IndexOutOfRange(format!("column {c} of {}", self.cols)));
        }
        Ok(SkewMatrix::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        }))
    }

    pub fn minor(&self, sel: &IndexSelection) -> Result<Self> {
        if sel.rows.len() != sel.cols.len() {
            return Err(Error::DimensionMismatch("selection is not square".into()));
        }
        self.submatrix(&sel.rows, &sel.cols)
    }

    /// Matrix with row `p` and column `r` removed.
    pub fn without(&self, p: usize, r: usize) -> Result<Self> {
        self.check_index(p, r)?;
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != p).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != r).collect();
        self.submatrix(&rows, &cols)
    }

    pub(crate) fn check_index(&self, i: usize, j: usize) -> Result<()> {
        if i >= self.rows || j >= self.cols {
            return Err(Error::IndexOutOfRange(format!(
                "({i}, {j}) in a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Stack `b` (1×n) under this m×n matrix, giving the extended matrix of
    /// the system `x RC⋆ A = b`.
    pub fn extended(&self, b: &SkewMatrix<F>) -> Result<Self> {
        if b.rows != 1 || b.cols != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side is {}x{}, expected 1x{}",
                b.rows, b.cols, self.cols
            )));
        }
        let mut cells = self.cells.clone();
        cells.extend(b.cells.iter().cloned());
        Ok(SkewMatrix {
            rows: self.rows + 1,
            cols: self.cols,
            cells,
        })
    }

    /// Stack rows of `other` under `self`.
    pub fn vstack(&self, other: &SkewMatrix<F>) -> Result<Self> {
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns on {}",
                other.cols, self.cols
            )));
        }
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut cells = self.cells.clone();
        cells.extend(other.cells.iter().cloned());
        Ok(SkewMatrix {
            rows: self.rows + other.rows,
            cols,
            cells,
        })
    }

    pub fn add(&self, other: &SkewMatrix<F>) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &SkewMatrix<F>) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, other: &SkewMatrix<F>, f: impl Fn(&F, &F) -> F) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch(format!(
                "{:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        Ok(SkewMatrix {
            rows: self.rows,
            cols: self.cols,
            cells: self.cells.iter().zip(&other.cells).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// `s · A`, scalar acting from the left on every entry.
    pub fn left_scale(&self, s: &F) -> Self {
        self.map(|a| s.clone() * a.clone())
    }

    /// `A · s`, scalar acting from the right on every entry.
    pub fn right_scale(&self, s: &F) -> Self {
        self.map(|a| a.clone() * s.clone())
    }

    pub fn map(&self, f: impl Fn(&F) -> F) -> Self {
        SkewMatrix {
            rows: self.rows,
            cols: self.cols,
            cells: self.cells.iter().map(f).collect(),
        }
    }
}

impl<F> Index<(usize, usize)> for SkewMatrix<F> {
    type Output = F;

    fn index(&self, (i, j): (usize, usize)) -> &F {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.cells[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for SkewMatrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &mut self.cells[i * self.cols + j]
    }
}

/// RC⋆ product: `C[i][j] = Σ_k A[i][k] · B[k][j]`, the `A` factor on the left.
pub fn rc_product<F: SkewField>(a: &SkewMatrix<F>, b: &SkewMatrix<F>) -> Result<SkewMatrix<F>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "RC product of {}x{} and {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    Ok(SkewMatrix::from_fn(a.rows, b.cols, |i, j| {
        (0..a.cols).fold(F::zero(), |acc, k| acc + a[(i, k)].clone() * b[(k, j)].clone())
    }))
}

/// CR⋆ product: `C[i][j] = Σ_k A[k][j] · B[i][k]`, the `A` factor on the left.
///
/// `A` is n×p and `B` is m×n; the result is m×p. Equal to
/// `transpose(rc_product(Aᵀ, Bᵀ))`.
pub fn cr_product<F: SkewField>(a: &SkewMatrix<F>, b: &SkewMatrix<F>) -> Result<SkewMatrix<F>> {
    if a.rows != b.cols {
        return Err(Error::DimensionMismatch(format!(
            "CR product of {}x{} and {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    Ok(SkewMatrix::from_fn(b.rows, a.cols, |i, j| {
        (0..a.rows).fold(F::zero(), |acc, k| acc + a[(k, j)].clone() * b[(i, k)].clone())
    }))
}

impl<F: fmt::Display> fmt::Display for SkewMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.cells[i * self.cols + j])?;
            }
        }
        f.write_str("]")
    }
}

impl SkewMatrix<Quaternion> {
    /// Parse `"[e, e; e, e]"`: rows split by `;`, entries by `,`.
    pub fn parse(text: &str) -> Result<Self> {
        let open = text
            .find(|c: char| !c.is_whitespace())
            .filter(|&p| text[p..].starts_with('['))
            .ok_or_else(|| Error::parse(0, "matrix must start with '['"))?;
        let close = text
            .rfind(|c: char| !c.is_whitespace())
            .filter(|&p| text[p..].starts_with(']') && p > open)
            .ok_or_else(|| Error::parse(text.len(), "matrix must end with ']'"))?;
        let body = &text[open + 1..close];
        if body.trim().is_empty() {
            return Ok(SkewMatrix::zeros(0, 0));
        }
        let mut rows = Vec::new();
        let mut offset = open + 1;
        for row_text in body.split(';') {
            let mut row = Vec::new();
            let mut entry_offset = offset;
            for entry in row_text.split(',') {
                let q = Quaternion::parse(entry).map_err(|e| match e {
                    Error::Parse { position, message } => Error::Parse {
                        position: entry_offset + position,
                        message,
                    },
                    other => other,
                })?;
                row.push(q);
                entry_offset += entry.len() + 1;
            }
            rows.push(row);
            offset += row_text.len() + 1;
        }
        SkewMatrix::from_rows(rows).map_err(|e| Error::parse(open, e.to_string()))
    }
}

impl std::str::FromStr for SkewMatrix<Quaternion> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SkewMatrix::parse(s)
    }
}

impl Serialize for SkewMatrix<Quaternion> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SkewMatrix<Quaternion> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> SkewMatrix<Quaternion> {
        s.parse().unwrap()
    }

    fn example() -> SkewMatrix<Quaternion> {
        m("[k, -i; k-1, -i-j]")
    }

    #[test]
    fn one_by_one_products() {
        assert_eq!(rc_product(&m("[i]"), &m("[j]")).unwrap(), m("[k]"));
        assert_eq!(cr_product(&m("[i]"), &m("[j]")).unwrap(), m("[k]"));
    }

    #[test]
    fn identity_is_neutral() {
        let a = example();
        let id = SkewMatrix::identity(2);
        assert_eq!(rc_product(&a, &id).unwrap(), a);
        assert_eq!(rc_product(&id, &a).unwrap(), a);
        assert_eq!(rc_product(&id, &id).unwrap(), id);
    }

    #[test]
    fn singular_family_row_kills_example() {
        let lambda = m("[1+k, -1]");
        assert_eq!(rc_product(&lambda, &example()).unwrap(), m("[0, 0]"));
    }

    #[test]
    fn cr_unit_selector_reads_display_column() {
        let sel = m("[1; 0]");
        assert_eq!(cr_product(&sel, &example()).unwrap(), m("[k; k-1]"));
    }

    #[test]
    fn transpose_and_extended() {
        assert_eq!(example().transpose(), m("[k, k-1; -i, -i-j]"));
        let ext = example().extended(&m("[0, 0]")).unwrap();
        assert_eq!(ext.shape(), (3, 2));
        assert_eq!(ext, m("[k, -i; k-1, -i-j; 0, 0]"));
        assert!(example().extended(&m("[0]")).is_err());
    }

    #[test]
    fn dimension_and_index_errors() {
        assert!(matches!(
            rc_product(&m("[1, 2]"), &m("[1, 2]")),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            cr_product(&m("[1, 2]"), &m("[1, 2]")),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(example().without(2, 0), Err(Error::IndexOutOfRange(_))));
        let sel = IndexSelection::new(vec![0], vec![5]).unwrap();
        assert!(matches!(example().minor(&sel), Err(Error::IndexOutOfRange(_))));
        assert!(IndexSelection::new(vec![0, 1], vec![0]).is_err());
    }

    #[test]
    fn empty_products() {
        let a: SkewMatrix<Quaternion> = SkewMatrix::zeros(0, 3);
        let b = SkewMatrix::zeros(3, 2);
        assert_eq!(rc_product(&a, &b).unwrap().shape(), (0, 2));
        let c: SkewMatrix<Quaternion> = SkewMatrix::zeros(2, 0);
        let d = SkewMatrix::zeros(0, 2);
        assert_eq!(rc_product(&c, &d).unwrap(), SkewMatrix::zeros(2, 2));
    }

    #[test]
    fn text_format() {
        assert_eq!(example().to_string(), "[k, -i; -1+k, -i-j]");
        assert_eq!(m(&example().to_string()), example());
        assert_eq!(m("[]").shape(), (0, 0));
        assert!(SkewMatrix::parse("[1, 2; 3]").is_err());
        match SkewMatrix::parse("[1, 2x]") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
    }
}
