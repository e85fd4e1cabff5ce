mod common;

use common::*;
use proptest::prelude::*;
use skewalg::fibered::{
    add_fields, apply_fibered_map, compose_fibered_maps, scalar_action, Base, FiberedLinearMap, Section,
};
use skewalg::repr::{check_morphism, morphism_from_base_points, FiniteRepresentation, RepMorphism};
use skewalg::skewfield::ratio;
use skewalg::*;

fn two_by_two_rc_oracle(a: &SkewMatrix<Quaternion>, p: usize, r: usize) -> Option<Quaternion> {
    let (p2, r2) = (1 - p, 1 - r);
    let pivot = a[(p2, r2)].inv().ok()?;
    Some(&a[(p, r)] - &(&(&a[(p, r2)] * &pivot) * &a[(p2, r)]))
}

#[test]
fn worked_example_values() {
    let a = m("[k, -i; k-1, -i-j]");
    assert_eq!(a, example_matrix());
    assert_eq!(rc_quasideterminant(&a, 1, 1).unwrap(), QdetResult::Defined(Quaternion::default()));
    assert_eq!(cr_quasideterminant(&a, 0, 0).unwrap(), QdetResult::Defined(q("1+k")));
    assert_eq!(rc_inverse(&a), Err(Error::Singular));
    assert_eq!(rc_rank(&a).rank, 1);
    assert_eq!(cr_rank(&a).rank, 2);
}

#[test]
fn cr_corner_matches_direct_formula() {
    let a = example_matrix();
    // a²₂ − a²₁ (a¹₁)⁻¹ a¹₂ with the upper index naming the column
    let (a11, a12, a21, a22) = (&a[(0, 0)], &a[(1, 0)], &a[(0, 1)], &a[(1, 1)]);
    let expected = a22 - &(&(a21 * &a11.inv().unwrap()) * a12);
    assert_eq!(cr_quasideterminant(&a, 1, 1).unwrap(), QdetResult::Defined(expected.clone()));
    assert_eq!(expected, q("-2j"));
}

#[test]
fn inverse_matches_conjugate_over_norm() {
    let a = Quaternion::new(ratio(1, 2), ratio(-3, 4), ratio(2, 1), ratio(0, 1));
    let norm = ratio(1, 4) + ratio(9, 16) + ratio(4, 1);
    let expected = Quaternion::new(
        ratio(1, 2) / &norm,
        ratio(3, 4) / &norm,
        ratio(-2, 1) / &norm,
        ratio(0, 1),
    );
    assert_eq!(a.inv().unwrap(), expected);
}

/// Every carrier map `R` for a fixed `r`, by brute force.
fn all_morphisms(f: &FiniteRepresentation, g: &FiniteRepresentation, r: &[usize]) -> Vec<RepMorphism> {
    let n = f.carrier();
    let mut out = Vec::new();
    let mut big_r = vec![0; n];
    loop {
        let candidate = RepMorphism::new(r.to_vec(), big_r.clone());
        if check_morphism(&candidate, f, g) {
            out.push(candidate);
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            big_r[i] += 1;
            if big_r[i] < g.carrier() {
                break;
            }
            big_r[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn base_points_enumerate_all_morphisms_of_rotations() {
    for a in 1..=4usize {
        for b in 1..=4usize {
            for mf in (1..=a).filter(|d| a % d == 0) {
                for mg in (1..=b).filter(|d| b % d == 0) {
                    let f = FiniteRepresentation::cyclic_rotation(a, mf).unwrap();
                    let g = FiniteRepresentation::cyclic_rotation(b, mg).unwrap();
                    for gen in 0..b {
                        let r: Vec<usize> = (0..a).map(|x| x * gen % b).collect();
                        if !f.algebra().is_homomorphism(&r, g.algebra()) {
                            continue;
                        }
                        let mut built: Vec<RepMorphism> = (0..mg)
                            .filter_map(|n0| morphism_from_base_points(&f, &g, &r, 0, n0).ok())
                            .collect();
                        built.sort_by(|x, y| x.carrier_map.cmp(&y.carrier_map));
                        let mut brute = all_morphisms(&f, &g, &r);
                        brute.sort_by(|x, y| x.carrier_map.cmp(&y.carrier_map));
                        assert_eq!(built, brute, "Z{a} on {mf} -> Z{b} on {mg}, r(1) = {gen}");
                    }
                }
            }
        }
    }
}

type Fields = (Vec<Quaternion>, Vec<Quaternion>, Vec<SkewMatrix<Quaternion>>, Vec<SkewMatrix<Quaternion>>);

fn fields(n: usize) -> impl Strategy<Value = Fields> {
    (
        prop::collection::vec(quaternion(), n),
        prop::collection::vec(quaternion(), n),
        prop::collection::vec(matrix(1, 2), n),
        prop::collection::vec(matrix(1, 2), n),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cr_product_matches_entrywise_formula(
        (a, b) in (1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(m, n, p)| (matrix(n, p), matrix(m, n)))
    ) {
        let c = cr_product(&a, &b).unwrap();
        for i in 0..b.rows() {
            for j in 0..a.cols() {
                let mut acc = Quaternion::default();
                for k in 0..a.rows() {
                    acc = &acc + &(&a[(k, j)] * &b[(i, k)]);
                }
                prop_assert_eq!(&c[(i, j)], &acc);
            }
        }
    }

    #[test]
    fn two_by_two_quasideterminants_match_direct_formula(a in matrix(2, 2), p in 0usize..2, r in 0usize..2) {
        let expected = match two_by_two_rc_oracle(&a, p, r) {
            Some(v) => QdetResult::Defined(v),
            None => QdetResult::Undefined,
        };
        prop_assert_eq!(rc_quasideterminant(&a, p, r).unwrap(), expected);
    }

    #[test]
    fn vector_field_laws((a, b, u, v) in fields(4)) {
        let base = Base::numbered(4).unwrap();
        let a = Section::new(base.clone(), a).unwrap();
        let b = Section::new(base.clone(), b).unwrap();
        let u = Section::new(base.clone(), u).unwrap();
        let v = Section::new(base.clone(), v).unwrap();
        let ab = lift_mul(&a, &b);
        prop_assert_eq!(
            scalar_action(&a, &scalar_action(&b, &u).unwrap()).unwrap(),
            scalar_action(&ab, &u).unwrap()
        );
        let a_plus_b = Section::from_fn(base.clone(), |x| &a.values()[x] + &b.values()[x]);
        prop_assert_eq!(
            scalar_action(&a_plus_b, &u).unwrap(),
            add_fields(&scalar_action(&a, &u).unwrap(), &scalar_action(&b, &u).unwrap()).unwrap()
        );
        prop_assert_eq!(
            scalar_action(&a, &add_fields(&u, &v).unwrap()).unwrap(),
            add_fields(&scalar_action(&a, &u).unwrap(), &scalar_action(&a, &v).unwrap()).unwrap()
        );
        let one = Section::constant(base, Quaternion::from(1));
        prop_assert_eq!(scalar_action(&one, &u).unwrap(), u);
    }

    #[test]
    fn fibered_composition_is_pointwise(
        f in prop::collection::vec(matrix(2, 3), 4),
        g in prop::collection::vec(matrix(3, 2), 4),
        x in prop::collection::vec(matrix(1, 2), 4),
    ) {
        let base = Base::numbered(4).unwrap();
        let fm = FiberedLinearMap::new(Section::new(base.clone(), f.clone()).unwrap()).unwrap();
        let gm = FiberedLinearMap::new(Section::new(base.clone(), g.clone()).unwrap()).unwrap();
        let composed = compose_fibered_maps(&fm, &gm).unwrap();
        for p in 0..4 {
            prop_assert_eq!(&composed.matrices().values()[p], &rc_product(&f[p], &g[p]).unwrap());
        }
        let x = Section::new(base, x).unwrap();
        prop_assert_eq!(
            apply_fibered_map(&x, &composed).unwrap(),
            apply_fibered_map(&apply_fibered_map(&x, &fm).unwrap(), &gm).unwrap()
        );
    }
}

fn lift_mul(a: &Section<Quaternion>, b: &Section<Quaternion>) -> Section<Quaternion> {
    Section::from_fn(a.base().clone(), |x| &a.values()[x] * &b.values()[x])
}
