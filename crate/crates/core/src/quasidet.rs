//! RC/CR quasideterminants and inverse matrices.
//!
//! Elimination is the authoritative nonsingularity test. The quasideterminant
//! recursion
//!
//! ```text
//! |A|_{p r} = A[p][r] - row_p(A without col r) RC⋆ (A without row p, col r)⁻¹ RC⋆ col_r(A without row p)
//! ```
//!
//! is undefined whenever the complementary minor is singular, which is a
//! different condition from `A` itself being singular.

use crate::error::{Error, Result};
use crate::matrix::SkewMatrix;
use crate::skewfield::SkewField;

/// Value of a quasideterminant, or `Undefined` when the complementary minor
/// has no RC-inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QdetResult<F> {
    Defined(F),
    Undefined,
}

impl<F> QdetResult<F> {
    pub fn value(&self) -> Option<&F> {
        match self {
            QdetResult::Defined(v) => Some(v),
            QdetResult::Undefined => None,
        }
    }

    pub fn into_value(self) -> Option<F> {
        match self {
            QdetResult::Defined(v) => Some(v),
            QdetResult::Undefined => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, QdetResult::Defined(_))
    }
}

fn require_square<F: SkewField>(a: &SkewMatrix<F>) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "expected a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(a.rows())
}

/// Gauss–Jordan by row operations (scalars multiply from the left).
/// Returns the inverse when `track` is set; `Some(zeros)` otherwise.
fn eliminate_rows<F: SkewField>(a: &SkewMatrix<F>, track: bool) -> Option<SkewMatrix<F>> {
    let n = a.rows();
    let mut work = a.clone();
    let mut inv = if track {
        SkewMatrix::identity(n)
    } else {
        SkewMatrix::zeros(0, 0)
    };
    for c in 0..n {
        let pivot_row = (c..n).find(|&r| !work[(r, c)].is_zero())?;
        if pivot_row != c {
            swap_rows(&mut work, c, pivot_row);
            if track {
                swap_rows(&mut inv, c, pivot_row);
            }
        }
        let scale = work[(c, c)].inv().ok()?;
        scale_row(&mut work, c, &scale);
        if track {
            scale_row(&mut inv, c, &scale);
        }
        for r in 0..n {
            if r == c || work[(r, c)].is_zero() {
                continue;
            }
            let factor = work[(r, c)].clone();
            subtract_row(&mut work, r, c, &factor);
            if track {
                subtract_row(&mut inv, r, c, &factor);
            }
        }
    }
    Some(inv)
}

fn swap_rows<F: SkewField>(m: &mut SkewMatrix<F>, a: usize, b: usize) {
    for j in 0..m.cols() {
        let tmp = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = tmp;
    }
}

fn scale_row<F: SkewField>(m: &mut SkewMatrix<F>, row: usize, s: &F) {
    for j in 0..m.cols() {
        m[(row, j)] = s.clone() * m[(row, j)].clone();
    }
}

/// `row_target ← row_target - factor · row_source`
fn subtract_row<F: SkewField>(m: &mut SkewMatrix<F>, target: usize, source: usize, factor: &F) {
    for j in 0..m.cols() {
        let delta = factor.clone() * m[(source, j)].clone();
        m[(target, j)] = m[(target, j)].clone() - delta;
    }
}

/// True when `a` is square and has an RC-inverse.
pub fn is_rc_nonsingular<F: SkewField>(a: &SkewMatrix<F>) -> bool {
    a.is_square() && eliminate_rows(a, false).is_some()
}

/// RC-inverse by row elimination: `A RC⋆ X = δ = X RC⋆ A`.
pub fn rc_inverse<F: SkewField>(a: &SkewMatrix<F>) -> Result<SkewMatrix<F>> {
    require_square(a)?;
    eliminate_rows(a, true).ok_or(Error::Singular)
}

/// RC-inverse by column elimination (scalars multiply from the right).
///
/// Builds a right inverse independently of [`rc_inverse`]; over a division
/// ring both coincide.
pub fn rc_inverse_by_columns<F: SkewField>(a: &SkewMatrix<F>) -> Result<SkewMatrix<F>> {
    require_square(a)?;
    let n = a.rows();
    let mut work = a.transpose();
    let mut inv: SkewMatrix<F> = SkewMatrix::identity(n);
    // columns of `a` are stored as rows of `work`/`inv` so the helpers stay row-based
    for c in 0..n {
        let pivot = (c..n).find(|&r| !work[(r, c)].is_zero()).ok_or(Error::Singular)?;
        swap_rows(&mut work, c, pivot);
        swap_rows(&mut inv, c, pivot);
        let scale = work[(c, c)].inv()?;
        for m in [&mut work, &mut inv] {
            for j in 0..n {
                m[(c, j)] = m[(c, j)].clone() * scale.clone();
            }
        }
        for r in 0..n {
            if r == c || work[(r, c)].is_zero() {
                continue;
            }
            let factor = work[(r, c)].clone();
            for m in [&mut work, &mut inv] {
                for j in 0..n {
                    let delta = m[(c, j)].clone() * factor.clone();
                    m[(r, j)] = m[(r, j)].clone() - delta;
                }
            }
        }
    }
    Ok(inv.transpose())
}

/// CR-inverse: `cr_product(A, X) = δ = cr_product(X, A)`.
pub fn cr_inverse<F: SkewField>(a: &SkewMatrix<F>) -> Result<SkewMatrix<F>> {
    Ok(rc_inverse(&a.transpose())?.transpose())
}

/// RC quasideterminant at row `p`, column `r`.
pub fn rc_quasideterminant<F: SkewField>(
    a: &SkewMatrix<F>,
    p: usize,
    r: usize,
) -> Result<QdetResult<F>> {
    let n = require_square(a)?;
    a.check_index(p, r)?;
    if n == 1 {
        return Ok(QdetResult::Defined(a[(0, 0)].clone()));
    }
    // Order rows and columns so that (p, r) comes last, then eliminate the
    // complementary block by left row operations; the entry left in the
    // corner is `a_pr - row · minor⁻¹ · col`.
    let rows: Vec<usize> = (0..n).filter(|&i| i != p).chain([p]).collect();
    let cols: Vec<usize> = (0..n).filter(|&j| j != r).chain([r]).collect();
    let mut work = a.submatrix(&rows, &cols)?;
    let last = n - 1;
    for c in 0..last {
        let Some(pivot_row) = (c..last).find(|&i| !work[(i, c)].is_zero()) else {
            return Ok(QdetResult::Undefined);
        };
        if pivot_row != c {
            swap_rows(&mut work, c, pivot_row);
        }
        let pivot_inv = work[(c, c)].inv()?;
        for i in c + 1..n {
            if work[(i, c)].is_zero() {
                continue;
            }
            let factor = work[(i, c)].clone() * pivot_inv.clone();
            for j in c + 1..n {
                let delta = factor.clone() * work[(c, j)].clone();
                work[(i, j)] = work[(i, j)].clone() - delta;
            }
        }
    }
    Ok(QdetResult::Defined(work[(last, last)].clone()))
}

/// CR quasideterminant with lower index `i` and upper index `j`; the RC
/// quasideterminant of the transposed grid.
pub fn cr_quasideterminant<F: SkewField>(
    a: &SkewMatrix<F>,
    i: usize,
    j: usize,
) -> Result<QdetResult<F>> {
    rc_quasideterminant(&a.transpose(), i, j)
}

/// RC-inverse assembled from quasideterminants: `X[r][p] = |A|_{p r}⁻¹`.
///
/// An undefined quasideterminant contributes a zero entry: for nonsingular
/// `A` the complementary minor at `(p, r)` is singular exactly when
/// `X[r][p] = 0`. A vanishing quasideterminant, or no defined one at all,
/// means `A` is singular.
pub fn rc_inverse_via_quasidet<F: SkewField>(a: &SkewMatrix<F>) -> Result<SkewMatrix<F>> {
    let n = require_square(a)?;
    let mut out = SkewMatrix::zeros(n, n);
    let mut any_defined = false;
    for p in 0..n {
        for r in 0..n {
            if let QdetResult::Defined(q) = rc_quasideterminant(a, p, r)? {
                out[(r, p)] = q.inv().map_err(|_| Error::Singular)?;
                any_defined = true;
            }
        }
    }
    if n > 0 && !any_defined {
        return Err(Error::Singular);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rc_product;
    use crate::skewfield::Quaternion;

    fn m(s: &str) -> SkewMatrix<Quaternion> {
        s.parse().unwrap()
    }

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    fn example() -> SkewMatrix<Quaternion> {
        m("[k, -i; k-1, -i-j]")
    }

    #[test]
    fn identity_inverse() {
        let id: SkewMatrix<Quaternion> = SkewMatrix::identity(3);
        assert_eq!(rc_inverse(&id).unwrap(), id);
        assert_eq!(rc_inverse_via_quasidet(&SkewMatrix::<Quaternion>::identity(2)).unwrap(), SkewMatrix::identity(2));
    }

    #[test]
    fn diagonal_inverse() {
        let a = m("[k, 0; 0, j]");
        let expected = m("[-k, 0; 0, -j]");
        assert_eq!(rc_inverse(&a).unwrap(), expected);
        assert_eq!(rc_inverse_by_columns(&a).unwrap(), expected);
        assert_eq!(rc_inverse_via_quasidet(&a).unwrap(), expected);
        assert_eq!(rc_product(&a, &expected).unwrap(), SkewMatrix::identity(2));
    }

    #[test]
    fn example_is_singular() {
        assert_eq!(rc_inverse(&example()), Err(Error::Singular));
        assert_eq!(rc_inverse_by_columns(&example()), Err(Error::Singular));
        assert_eq!(
            rc_quasideterminant(&example(), 1, 1).unwrap(),
            QdetResult::Defined(Quaternion::default())
        );
        assert_eq!(rc_inverse_via_quasidet(&example()), Err(Error::Singular));
    }

    #[test]
    fn example_cr_quasideterminants() {
        assert_eq!(cr_quasideterminant(&example(), 0, 0).unwrap().into_value(), Some(q("1+k")));
        assert_eq!(cr_quasideterminant(&example(), 1, 1).unwrap().into_value(), Some(q("-2j")));
    }

    #[test]
    fn one_by_one_base_case() {
        let a = m("[3/2i]");
        assert_eq!(rc_quasideterminant(&a, 0, 0).unwrap().into_value(), Some(q("3/2i")));
        assert_eq!(cr_quasideterminant(&a, 0, 0).unwrap().into_value(), Some(q("3/2i")));
    }

    #[test]
    fn undefined_is_not_singular() {
        let id: SkewMatrix<Quaternion> = SkewMatrix::identity(2);
        assert_eq!(rc_quasideterminant(&id, 0, 1).unwrap(), QdetResult::Undefined);
        assert!(is_rc_nonsingular(&id));
        assert_eq!(rc_inverse_via_quasidet(&id.clone()).ok(), Some(id.clone()));
        let swap = m("[0, 1; 1, 0]");
        assert_eq!(rc_quasideterminant(&swap, 0, 0).unwrap(), QdetResult::Undefined);
        assert_eq!(rc_inverse_via_quasidet(&swap).unwrap(), swap);
        assert_eq!(rc_inverse(&swap).unwrap(), swap);
        // rank 0: every quasideterminant undefined
        let zero: SkewMatrix<Quaternion> = SkewMatrix::zeros(2, 2);
        assert_eq!(rc_inverse_via_quasidet(&zero), Err(Error::Singular));
    }

    #[test]
    fn argument_errors() {
        assert!(matches!(rc_quasideterminant(&example(), 2, 0), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(rc_inverse(&m("[1, 2]")), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn cr_inverse_roundtrip() {
        use crate::matrix::cr_product;
        let a = m("[1+i, j; k, 2]");
        let x = cr_inverse(&a).unwrap();
        assert_eq!(cr_product(&a, &x).unwrap(), SkewMatrix::identity(2));
        assert_eq!(cr_product(&x, &a).unwrap(), SkewMatrix::identity(2));
    }
}
