//! Coordinate models of vector spaces over a skew field.
//!
//! Vectors are coordinate rows relative to an ambient standard basis. The drc
//! side (scalars on the left, RC⋆ product) is implemented directly; the other
//! three space types are reached through [`dualize`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{cr_product, rc_product, SkewMatrix};
use crate::quasidet::{is_rc_nonsingular, rc_inverse};
use crate::rank::{rc_rank, solve_nonsingular};
use crate::skewfield::SkewField;

/// Which product combines coordinates with a basis, and from which side
/// scalars act.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceType {
    Drc,
    Dcr,
    Crd,
    Rcd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    Rc,
    Cr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl SpaceType {
    pub const ALL: [SpaceType; 4] = [SpaceType::Drc, SpaceType::Dcr, SpaceType::Crd, SpaceType::Rcd];

    pub fn product(self) -> Product {
        match self {
            SpaceType::Drc | SpaceType::Rcd => Product::Rc,
            SpaceType::Dcr | SpaceType::Crd => Product::Cr,
        }
    }

    pub fn scalar_side(self) -> Side {
        match self {
            SpaceType::Drc | SpaceType::Dcr => Side::Left,
            SpaceType::Crd | SpaceType::Rcd => Side::Right,
        }
    }

    /// The type obtained by swapping the roles of rows and columns.
    pub fn dual(self) -> SpaceType {
        match self {
            SpaceType::Drc => SpaceType::Dcr,
            SpaceType::Dcr => SpaceType::Drc,
            SpaceType::Crd => SpaceType::Rcd,
            SpaceType::Rcd => SpaceType::Crd,
        }
    }

    /// Combine coordinates with a coordinate matrix in this type's product.
    ///
    /// For CR types the coordinates form a column and the result is a column.
    pub fn combine<F: SkewField>(
        self,
        coords: &SkewMatrix<F>,
        basis: &SkewMatrix<F>,
    ) -> Result<SkewMatrix<F>> {
        match self.product() {
            Product::Rc => rc_product(coords, basis),
            Product::Cr => cr_product(coords, basis),
        }
    }
}

impl fmt::Display for SpaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceType::Drc => "drc",
            SpaceType::Dcr => "dcr",
            SpaceType::Crd => "crd",
            SpaceType::Rcd => "rcd",
        })
    }
}

impl FromStr for SpaceType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpaceType::ALL
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown space type {s:?}")))
    }
}

/// A basis given by its coordinate matrix: row `i` holds the coordinates of
/// the `i`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisModel<F> {
    space_type: SpaceType,
    coords: SkewMatrix<F>,
}

impl<F: SkewField> BasisModel<F> {
    /// Accepts any RC-independent family; a full basis of the ambient space
    /// is square and RC-nonsingular.
    pub fn new(coords: SkewMatrix<F>) -> Result<Self> {
        if !is_independent(&coords) {
            return Err(Error::Singular);
        }
        Ok(BasisModel {
            space_type: SpaceType::Drc,
            coords,
        })
    }

    pub fn standard(n: usize) -> Self {
        BasisModel {
            space_type: SpaceType::Drc,
            coords: SkewMatrix::identity(n),
        }
    }

    pub fn space_type(&self) -> SpaceType {
        self.space_type
    }

    pub fn dimension(&self) -> usize {
        self.coords.rows()
    }

    pub fn coords(&self) -> &SkewMatrix<F> {
        &self.coords
    }

    /// The same basis seen from the dual type: coordinate rows become
    /// columns and RC⋆ becomes CR⋆.
    pub fn dual(&self) -> Self {
        BasisModel {
            space_type: self.space_type.dual(),
            coords: dualize(&self.coords),
        }
    }

    /// Vector with coordinates `x` relative to this basis.
    pub fn vector(&self, x: &SkewMatrix<F>) -> Result<SkewMatrix<F>> {
        self.space_type.combine(x, &self.coords)
    }
}

/// The unique coordinates `x` of `v`: `x RC⋆ E = v` for RC types, and
/// `x CR⋆ E = v` (columns) for CR types.
pub fn expand_in_basis<F: SkewField>(v: &SkewMatrix<F>, basis: &BasisModel<F>) -> Result<SkewMatrix<F>> {
    if !basis.coords.is_square() {
        return Err(Error::Singular);
    }
    match basis.space_type.product() {
        Product::Rc => solve_nonsingular(&basis.coords, v),
        Product::Cr => Ok(solve_nonsingular(&dualize(&basis.coords), &dualize(v))?.transpose()),
    }
}

/// Rows are RC-independent iff the RC rank equals the row count.
pub fn is_independent<F: SkewField>(vectors: &SkewMatrix<F>) -> bool {
    rc_rank(vectors).rank == vectors.rows()
}

/// Matrix of a drc-linear map relative to chosen bases: coordinates `a` map
/// to `a RC⋆ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMapPresentation<F> {
    pub matrix: SkewMatrix<F>,
}

impl<F: SkewField> LinearMapPresentation<F> {
    pub fn new(matrix: SkewMatrix<F>) -> Self {
        LinearMapPresentation { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMapPresentation::new(SkewMatrix::identity(n))
    }

    /// Matrix of the same map relative to new bases `E` (source) and `G`
    /// (target), both given in the current coordinates: `E RC⋆ H RC⋆ G⁻¹`.
    pub fn change_bases(&self, source: &BasisModel<F>, target: &BasisModel<F>) -> Result<Self> {
        let g_inv = rc_inverse(target.coords())?;
        let m = rc_product(&rc_product(source.coords(), &self.matrix)?, &g_inv)?;
        Ok(LinearMapPresentation::new(m))
    }
}

pub fn apply_map<F: SkewField>(a: &SkewMatrix<F>, h: &LinearMapPresentation<F>) -> Result<SkewMatrix<F>> {
    rc_product(a, &h.matrix)
}

/// Composite "first `a`, then `b`".
pub fn compose_maps<F: SkewField>(
    a: &LinearMapPresentation<F>,
    b: &LinearMapPresentation<F>,
) -> Result<LinearMapPresentation<F>> {
    Ok(LinearMapPresentation::new(rc_product(&a.matrix, &b.matrix)?))
}

pub fn is_automorphism<F: SkewField>(h: &SkewMatrix<F>) -> bool {
    is_rc_nonsingular(h)
}

/// Duality functor: moves any drc-side statement to the dcr side.
pub fn dualize<F: SkewField>(a: &SkewMatrix<F>) -> SkewMatrix<F> {
    a.transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasidet::{cr_quasideterminant, rc_quasideterminant};
    use crate::skewfield::Quaternion;

    fn m(s: &str) -> SkewMatrix<Quaternion> {
        s.parse().unwrap()
    }

    fn example() -> SkewMatrix<Quaternion> {
        m("[k, -i; k-1, -i-j]")
    }

    #[test]
    fn expansion() {
        let v = m("[1+i, k]");
        assert_eq!(expand_in_basis(&v, &BasisModel::standard(2)).unwrap(), v);

        let basis = BasisModel::new(m("[k, -i; 0, 1]")).unwrap();
        assert_eq!(expand_in_basis(&m("[k, -i]"), &basis).unwrap(), m("[1, 0]"));

        assert_eq!(BasisModel::new(example()), Err(Error::Singular));
    }

    #[test]
    fn dual_basis_expands_columns() {
        let basis = BasisModel::new(m("[1, k; i, 2]")).unwrap();
        let dual = basis.dual();
        assert_eq!(dual.space_type(), SpaceType::Dcr);
        let v = m("[3, 1+j]");
        let x = expand_in_basis(&v, &basis).unwrap();
        let y = expand_in_basis(&dualize(&v), &dual).unwrap();
        assert_eq!(y, dualize(&x));
        assert_eq!(dual.vector(&y).unwrap(), dualize(&v));
    }

    #[test]
    fn independence() {
        assert!(is_independent(&SkewMatrix::<Quaternion>::identity(3)));
        assert!(!is_independent(&example()));
        assert!(is_independent(&m("[0, j, 0]")));
        assert!(!is_independent(&m("[0, 0]")));
    }

    #[test]
    fn maps() {
        let a = m("[1, i]");
        assert_eq!(apply_map(&a, &LinearMapPresentation::identity(2)).unwrap(), a);
        let step = apply_map(&m("[1]"), &LinearMapPresentation::new(m("[i]"))).unwrap();
        assert_eq!(apply_map(&step, &LinearMapPresentation::new(m("[j]"))).unwrap(), m("[k]"));
        let c = compose_maps(&LinearMapPresentation::new(m("[i]")), &LinearMapPresentation::new(m("[j]"))).unwrap();
        assert_eq!(c.matrix, m("[k]"));
        assert!(apply_map(&m("[1, 2, 3]"), &LinearMapPresentation::identity(2)).is_err());
    }

    #[test]
    fn automorphisms() {
        assert!(is_automorphism(&SkewMatrix::<Quaternion>::identity(2)));
        assert!(!is_automorphism(&example()));
        assert!(is_automorphism(&m("[k, 0; 0, j]")));
        assert!(!is_automorphism(&m("[1, 0]")));
    }

    #[test]
    fn duality() {
        let a = example();
        assert_eq!(dualize(&dualize(&a)), a);
        let d = dualize(&a);
        assert_eq!(cr_product(&SkewMatrix::identity(2), &d).unwrap(), d);
        assert_eq!(
            cr_quasideterminant(&a, 0, 0).unwrap(),
            rc_quasideterminant(&dualize(&a), 0, 0).unwrap()
        );
        for t in SpaceType::ALL {
            assert_eq!(t.dual().dual(), t);
            assert_eq!(t.to_string().parse::<SpaceType>().unwrap(), t);
            assert_ne!(t.dual().product(), t.product());
            assert_eq!(t.dual().scalar_side(), t.scalar_side());
        }
    }

    #[test]
    fn change_of_bases_commutes() {
        let h = LinearMapPresentation::new(m("[1, i; j, 2]"));
        let e = BasisModel::new(m("[1, k; 0, 1]")).unwrap();
        let g = BasisModel::new(m("[j, 0; 1, 1]")).unwrap();
        let h2 = h.change_bases(&e, &g).unwrap();
        let x = m("[2, -k]");
        // image of the vector with E-coordinates x, expanded in G
        let image = apply_map(&e.vector(&x).unwrap(), &h).unwrap();
        assert_eq!(expand_in_basis(&image, &g).unwrap(), apply_map(&x, &h2).unwrap());
    }
}
