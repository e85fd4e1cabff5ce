#![allow(dead_code)]

use proptest::prelude::*;
use skewalg::skewfield::ratio;
use skewalg::{Quaternion, Rational, SkewMatrix};

pub fn q(s: &str) -> Quaternion {
    s.parse().unwrap()
}

pub fn m(s: &str) -> SkewMatrix<Quaternion> {
    s.parse().unwrap()
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

pub fn quaternion() -> impl Strategy<Value = Quaternion> {
    (rational(), rational(), rational(), rational()).prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

pub fn nonzero_quaternion() -> impl Strategy<Value = Quaternion> {
    quaternion().prop_filter("nonzero", |a| a != &Quaternion::default())
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = SkewMatrix<Quaternion>> {
    prop::collection::vec(quaternion(), rows * cols)
        .prop_map(move |cells| SkewMatrix::from_vec(rows, cols, cells).unwrap())
}

/// Matrix whose entries are mostly small integers and zeros, so that
/// singular and rank-deficient cases show up often.
pub fn sparse_matrix(rows: usize, cols: usize) -> impl Strategy<Value = SkewMatrix<Quaternion>> {
    let entry = prop_oneof![
        2 => Just(Quaternion::default()),
        1 => (-1i64..=1, -1i64..=1, -1i64..=1, -1i64..=1).prop_map(|(w, x, y, z)| Quaternion::from_ints(w, x, y, z)),
        1 => quaternion(),
    ];
    prop::collection::vec(entry, rows * cols)
        .prop_map(move |cells| SkewMatrix::from_vec(rows, cols, cells).unwrap())
}

pub fn square(max: usize) -> impl Strategy<Value = SkewMatrix<Quaternion>> {
    (1..=max).prop_flat_map(|n| matrix(n, n))
}

/// Entry-by-entry RC product written straight from `Σ_k A[i][k]·B[k][j]`.
pub fn rc_oracle(a: &SkewMatrix<Quaternion>, b: &SkewMatrix<Quaternion>) -> SkewMatrix<Quaternion> {
    let mut rows = Vec::new();
    for i in 0..a.rows() {
        let mut row = Vec::new();
        for j in 0..b.cols() {
            let mut acc = Quaternion::default();
            for k in 0..a.cols() {
                acc = &acc + &(&a[(i, k)] * &b[(k, j)]);
            }
            row.push(acc);
        }
        rows.push(row);
    }
    SkewMatrix::from_fn(a.rows(), b.cols(), |i, j| rows[i][j].clone())
}
