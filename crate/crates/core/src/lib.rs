//! Exact linear algebra over noncommutative skew fields.
//!
//! The crate is generic over [`SkewField`]; rational quaternions
//! ([`Quaternion`]) are the reference instance. Matrices carry two products,
//! [`rc_product`] and [`cr_product`], related by transposition. On top of
//! them sit quasideterminants and inverses ([`quasidet`]), rank and linear
//! systems ([`rank`]), coordinate vector spaces ([`vecspace`]), finite
//! representations and their morphisms ([`repr`]), and pointwise algebra over
//! a finite base ([`fibered`]).
//!
//! Quaternion multiplication uses Hamilton's convention `i j = k`.

pub mod error;
pub mod fibered;
pub mod matrix;
pub mod quasidet;
pub mod rank;
pub mod repr;
pub mod skewfield;
pub mod vecspace;

pub use error::{Error, Result};
pub use matrix::{cr_product, rc_product, IndexSelection, SkewMatrix};
pub use quasidet::{
    cr_inverse, cr_quasideterminant, rc_inverse, rc_inverse_via_quasidet, rc_quasideterminant,
    QdetResult,
};
pub use rank::{cr_rank, rc_rank, row_dependence, solve_general, solve_nonsingular, RankReport, SolutionSet};
pub use skewfield::{Quaternion, Rational, SkewField};

/// The 2×2 quaternion matrix `[[k, -i], [k-1, -i-j]]`, built from the
/// RC-singular family with `b = 1 + k`, `c = j`, `d = k`.
pub fn example_matrix() -> SkewMatrix<Quaternion> {
    rank::rc_singular_family(
        &Quaternion::from_ints(1, 0, 0, 1),
        &Quaternion::j(),
        &Quaternion::k(),
    )
}
