//! RC/CR rank via minors and solvers for `x RC⋆ A = b`.
//!
//! The rank is the largest order of an RC-nonsingular square minor. Minors are
//! searched by decreasing order and, within one order, lexicographically by
//! row set then column set; the first hit is reported as the major minor.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{rc_product, IndexSelection, SkewMatrix};
use crate::quasidet::{is_rc_nonsingular, rc_inverse};
use crate::skewfield::SkewField;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rank: usize,
    /// `None` exactly when the rank is zero.
    pub major_minor: Option<IndexSelection>,
}

impl RankReport {
    /// Row indices of the major minor (empty for rank zero).
    pub fn rows(&self) -> &[usize] {
        self.major_minor.as_ref().map_or(&[], |s| &s.rows)
    }

    pub fn cols(&self) -> &[usize] {
        self.major_minor.as_ref().map_or(&[], |s| &s.cols)
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
}

pub fn rc_rank<F: SkewField>(a: &SkewMatrix<F>) -> RankReport {
    let max = a.rows().min(a.cols());
    for k in (1..=max).rev() {
        let col_sets = combinations(a.cols(), k);
        for rows in combinations(a.rows(), k) {
            for cols in &col_sets {
                let minor = a
                    .submatrix(&rows, cols)
                    .expect("combinations stay in range");
                if is_rc_nonsingular(&minor) {
                    return RankReport {
                        rank: k,
                        major_minor: Some(IndexSelection {
                            rows,
                            cols: cols.clone(),
                        }),
                    };
                }
            }
        }
    }
    RankReport {
        rank: 0,
        major_minor: None,
    }
}

/// CR rank: the RC rank of the transposed grid, with the minor read back in
/// the original row/column orientation.
pub fn cr_rank<F: SkewField>(a: &SkewMatrix<F>) -> RankReport {
    let report = rc_rank(&a.transpose());
    RankReport {
        rank: report.rank,
        major_minor: report.major_minor.map(|s| s.swapped()),
    }
}

/// Coefficients `c` (1×k) with `c RC⋆ A[S, ·] = A[p, ·]`, where `S` is the
/// row set of the major minor and `p ∉ S`.
pub fn row_dependence<F: SkewField>(
    a: &SkewMatrix<F>,
    report: &RankReport,
    p: usize,
) -> Result<SkewMatrix<F>> {
    if p >= a.rows() {
        return Err(Error::IndexOutOfRange(format!("row {p} of {}", a.rows())));
    }
    if report.rows().contains(&p) {
        return Err(Error::InvalidRow(p));
    }
    let minor = a.submatrix(report.rows(), report.cols())?;
    let minor_inv = rc_inverse(&minor)?;
    let row = a.submatrix(&[p], report.cols())?;
    rc_product(&row, &minor_inv)
}

/// Unique solution of `x RC⋆ A = b` for RC-nonsingular `A`.
pub fn solve_nonsingular<F: SkewField>(
    a: &SkewMatrix<F>,
    b: &SkewMatrix<F>,
) -> Result<SkewMatrix<F>> {
    check_rhs(a, b)?;
    rc_product(b, &rc_inverse(a)?)
}

fn check_rhs<F: SkewField>(a: &SkewMatrix<F>, b: &SkewMatrix<F>) -> Result<()> {
    if b.rows() != 1 || b.cols() != a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side is {}x{}, expected 1x{}",
            b.rows(),
            b.cols(),
            a.cols()
        )));
    }
    Ok(())
}

/// Solution set of `x RC⋆ A = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet<F> {
    pub consistent: bool,
    /// Solution with every free variable set to zero; `None` when inconsistent.
    pub particular: Option<SkewMatrix<F>>,
    /// One solution of `h RC⋆ A = 0` per free variable, with that variable
    /// set to one and the other free variables to zero.
    pub homogeneous_basis: Vec<SkewMatrix<F>>,
    /// Indices of the unknowns outside the major minor.
    pub free_variables: Vec<usize>,
    pub rank: RankReport,
}

impl<F: SkewField> SolutionSet<F> {
    /// `particular + Σ s_h · h`, scalars acting from the left.
    pub fn combine(&self, scalars: &[F]) -> Result<SkewMatrix<F>> {
        let base = self
            .particular
            .clone()
            .ok_or_else(|| Error::DimensionMismatch("system is inconsistent".into()))?;
        if scalars.len() != self.homogeneous_basis.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} scalars for {} basis vectors",
                scalars.len(),
                self.homogeneous_basis.len()
            )));
        }
        self.homogeneous_basis
            .iter()
            .zip(scalars)
            .try_fold(base, |acc, (h, s)| acc.add(&h.left_scale(s)))
    }
}

/// General solver for `x RC⋆ A = b`, `A` m×n and `b` 1×n.
///
/// The system is consistent iff `A` and its extended matrix have the same RC
/// rank. The major minor core is solved directly for the bound unknowns.
pub fn solve_general<F: SkewField>(a: &SkewMatrix<F>, b: &SkewMatrix<F>) -> Result<SolutionSet<F>> {
    check_rhs(a, b)?;
    let report = rc_rank(a);
    let extended_rank = rc_rank(&a.extended(b)?).rank;
    let consistent = extended_rank == report.rank;

    let bound = report.rows().to_vec();
    let free_variables: Vec<usize> = (0..a.rows()).filter(|i| !bound.contains(i)).collect();
    let minor_inv = rc_inverse(&a.submatrix(&bound, report.cols())?)?;

    let spread = |core: &SkewMatrix<F>, extra: Option<usize>| {
        let mut x = vec![F::zero(); a.rows()];
        for (slot, &row) in bound.iter().enumerate() {
            x[row] = core[(0, slot)].clone();
        }
        if let Some(p) = extra {
            x[p] = F::one();
        }
        SkewMatrix::row_vector(x)
    };

    let particular = if consistent {
        let rhs = b.submatrix(&[0], report.cols())?;
        Some(spread(&rc_product(&rhs, &minor_inv)?, None))
    } else {
        None
    };

    let homogeneous_basis = free_variables
        .iter()
        .map(|&p| {
            let row = a.submatrix(&[p], report.cols())?;
            let core = rc_product(&row, &minor_inv)?.map(|v| -v.clone());
            Ok(spread(&core, Some(p)))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SolutionSet {
        consistent,
        particular,
        homogeneous_basis,
        free_variables,
        rank: report,
    })
}

/// Nonzero `λ` with `λ RC⋆ A = 0`, if the rows of `A` are RC-dependent.
pub fn left_null_vector<F: SkewField>(a: &SkewMatrix<F>) -> Option<SkewMatrix<F>> {
    let b = SkewMatrix::zeros(1, a.cols());
    solve_general(a, &b).ok()?.homogeneous_basis.into_iter().next()
}

/// `[[d, d c], [b d, b d c]]`, RC-singular for every choice of entries.
pub fn rc_singular_family<F: SkewField>(b: &F, c: &F, d: &F) -> SkewMatrix<F> {
    let dc = d.clone() * c.clone();
    let bd = b.clone() * d.clone();
    let bdc = bd.clone() * c.clone();
    SkewMatrix::from_rows(vec![vec![d.clone(), dc], vec![bd, bdc]]).expect("2x2")
}

/// `[[d, c' d], [d b', c' d b']]`, CR-singular for every choice of entries.
pub fn cr_singular_family<F: SkewField>(b: &F, c: &F, d: &F) -> SkewMatrix<F> {
    let cd = c.clone() * d.clone();
    let db = d.clone() * b.clone();
    let cdb = cd.clone() * b.clone();
    SkewMatrix::from_rows(vec![vec![d.clone(), cd], vec![db, cdb]]).expect("2x2")
}
