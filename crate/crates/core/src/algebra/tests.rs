use super::*;
use crate::exactmath::rat;
use proptest::prelude::*;

fn q() -> NumberField {
    NumberField::rationals()
}

/// e_{pq} in M_n(k).
fn e(k: &NumberField, n: usize, p: usize, qq: usize) -> Vec<Scalar> {
    vector::unit(k, n * n, p * n + qq)
}

fn upper_triangular(k: &NumberField) -> (Arc<FinAlgebra>, Subalgebra) {
    let m2 = Arc::new(FinAlgebra::full_matrix_algebra(k, 2));
    let t2 = Subalgebra::closure(&m2, &[e(k, 2, 0, 1), e(k, 2, 0, 0)], "T2");
    (m2, t2)
}

#[test]
fn matrix_units_multiply() {
    let k = q();
    let m = FinAlgebra::full_matrix_algebra(&k, 2);
    assert_eq!(m.dim, 4);
    m.verify().unwrap();
    assert_eq!(m.mul(&e(&k, 2, 0, 0), &e(&k, 2, 0, 1)), e(&k, 2, 0, 1));
    assert!(vector::is_zero(&k, &m.mul(&e(&k, 2, 0, 1), &e(&k, 2, 0, 0))));
}

#[test]
fn matrix_algebra_over_gaussian_numbers_is_associative() {
    let k = q();
    let qi = FinAlgebra::from_number_field(&NumberField::preset("Qi").unwrap()).unwrap();
    let m = FinAlgebra::matrix_algebra(&qi, 2);
    assert_eq!(m.dim, 8);
    m.verify().unwrap();
    assert_eq!(m.field, k);
}

#[test]
fn broken_tables_are_rejected() {
    let k = q();
    let sv = |v: &[i64]| SVec::from_dense(&k, &vector::from_ints(&k, v));
    let unit = vector::from_ints(&k, &[1, 0]);
    // Q[x]/(x^2 - x - 1)
    let good = vec![sv(&[1, 0]), sv(&[0, 1]), sv(&[0, 1]), sv(&[1, 1])];
    assert!(FinAlgebra::new(k.clone(), 2, good, unit.clone(), "ok", Orientation::Native).is_ok());
    // b1 b0 = b0 breaks the unit
    let bad_unit = vec![sv(&[1, 0]), sv(&[0, 1]), sv(&[1, 0]), sv(&[0, 0])];
    assert!(FinAlgebra::new(k.clone(), 2, bad_unit, unit.clone(), "bad", Orientation::Native).is_err());
    // 3-dim: b1 b1 = b2, b2 b1 = 0, b1 b2 = b1 is not associative
    let sv3 = |v: &[i64]| SVec::from_dense(&k, &vector::from_ints(&k, v));
    let mut m = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            m.push(match (i, j) {
                (0, t) | (t, 0) => sv3(&[i64::from(t == 0), i64::from(t == 1), i64::from(t == 2)]),
                (1, 1) => sv3(&[0, 0, 1]),
                (1, 2) => sv3(&[0, 1, 0]),
                _ => sv3(&[0, 0, 0]),
            });
        }
    }
    let err = FinAlgebra::new(k.clone(), 3, m, vector::from_ints(&k, &[1, 0, 0]), "bad", Orientation::Native);
    assert!(matches!(err, Err(Error::NotAnAlgebra(_))));
}

#[test]
fn radical_of_triangular_matrices() {
    let k = q();
    let (_, t2) = upper_triangular(&k);
    assert_eq!(t2.dim(), 3);
    let a = t2.to_algebra();
    let rad = a.jacobson_radical();
    assert_eq!(rad.dim(), 1);
    // map back into M_2: the radical is spanned by e12
    let v = t2.space.combine(&k, &rad.vectors()[0]);
    assert_eq!(Subspace::span(&k, 4, &[v]), Subspace::span(&k, 4, &[e(&k, 2, 0, 1)]));
    let cert = a.is_simple_artinian().unwrap();
    assert!(!cert.simple);
}

#[test]
fn real_quaternions_are_a_division_algebra() {
    let k = q();
    let h = FinAlgebra::quaternion(&k, &k.from_int(-1), &k.from_int(-1), "H").unwrap();
    assert_eq!(h.jacobson_radical().dim(), 0);
    let c = h.is_simple_artinian().unwrap();
    assert!(c.simple);
    assert_eq!(c.center_dim, 1);
    assert_eq!(c.division, DivisionStatus::Certified);
}

#[test]
fn split_quaternions_have_zero_divisors() {
    let k = q();
    let h = FinAlgebra::quaternion(&k, &k.one(), &k.one(), "M").unwrap();
    let c = h.is_simple_artinian().unwrap();
    assert!(c.simple);
    assert_eq!(c.division, DivisionStatus::NotDivision);
}

#[test]
fn product_of_fields_is_not_simple() {
    let k = q();
    // Q[x]/(x^2 - x) = Q x Q
    let a = FinAlgebra::poly_quotient(&k, &vector::from_ints(&k, &[0, -1, 1]), "QxQ").unwrap();
    let c = a.is_simple_artinian().unwrap();
    assert_eq!(c.radical_dim, 0);
    assert_eq!(c.center_is_field, Some(false));
    assert!(!c.simple);
}

#[test]
fn number_field_is_simple_and_division() {
    let a = FinAlgebra::from_number_field(&NumberField::preset("Qw3").unwrap()).unwrap();
    let c = a.is_simple_artinian().unwrap();
    assert!(c.simple);
    assert_eq!(c.division, DivisionStatus::Certified);
}

#[test]
fn clock_and_shift_generate_full_matrices() {
    let k = NumberField::preset("Qw3").unwrap();
    let w = k.gen();
    let m3 = Arc::new(FinAlgebra::full_matrix_algebra(&k, 3));
    let mut x = m3.zero();
    x[0] = k.one();
    x[4] = w.clone();
    x[8] = k.mul(&w, &w);
    let mut y = m3.zero();
    y[1] = k.one();
    y[5] = k.one();
    y[6] = k.one();
    let s = Subalgebra::closure(&m3, &[x, y], "XY");
    assert_eq!(s.dim(), 9);
    assert_eq!(s, Subalgebra::whole(&m3));
    let c = m3.is_simple_artinian().unwrap();
    assert!(c.simple);
    assert_eq!(c.center_dim, 1);
    assert_eq!(c.division, DivisionStatus::NotDivision);
}

#[test]
fn center_and_commutant_of_diagonal() {
    let k = q();
    let m2 = FinAlgebra::full_matrix_algebra(&k, 2);
    assert_eq!(m2.center().dim(), 1);
    let comm = m2.centralizer(&[e(&k, 2, 0, 0)]);
    assert_eq!(comm, Subspace::span(&k, 4, &[e(&k, 2, 0, 0), e(&k, 2, 1, 1)]));
}

#[test]
fn min_poly_and_inverse() {
    let k = q();
    let m2 = FinAlgebra::full_matrix_algebra(&k, 2);
    let a = vector::from_ints(&k, &[1, 2, 3, 4]);
    // x^2 - 5x - 2
    assert_eq!(m2.min_poly(&a), vector::from_ints(&k, &[-2, -5, 1]));
    let inv = m2.inverse(&a).unwrap();
    assert_eq!(m2.mul(&a, &inv), m2.one());
    assert!(m2.inverse(&vector::from_ints(&k, &[1, 2, 2, 4])).is_none());
    assert!(vector::is_zero(&k, &m2.eval_poly(&m2.min_poly(&a), &a)));
}

#[test]
fn generators_regenerate_subalgebra() {
    let k = q();
    let (m2, t2) = upper_triangular(&k);
    let plain = Subalgebra::from_space(&m2, t2.space.clone(), "T2").unwrap();
    let g = plain.generators();
    assert!(g.len() <= 2);
    assert_eq!(Subalgebra::closure(&m2, &g, "T2"), t2);
}

#[test]
fn opposite_flips_orientation() {
    let k = q();
    let m2 = FinAlgebra::full_matrix_algebra(&k, 2);
    assert_eq!(m2.orientation, Orientation::Composition);
    let op = m2.opposite();
    assert_eq!(op.orientation, Orientation::Opposite);
    assert_eq!(op.mul(&e(&k, 2, 0, 1), &e(&k, 2, 0, 0)), e(&k, 2, 0, 1));
}

#[test]
fn signature_of_diagonal_form() {
    let k = q();
    let g = Matrix::from_ints(&k, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, -3]]);
    assert_eq!(rational_signature(&k, &g), Some((1, 2, 0)));
    let _ = rat(0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closure_is_idempotent(entries in proptest::collection::vec(-2i64..=2, 8)) {
        let k = q();
        let m2 = Arc::new(FinAlgebra::full_matrix_algebra(&k, 2));
        let g1 = vector::from_ints(&k, &entries[..4]);
        let g2 = vector::from_ints(&k, &entries[4..]);
        let s = Subalgebra::closure(&m2, &[g1, g2], "S");
        let again = Subalgebra::closure(&m2, &s.basis(), "S");
        prop_assert_eq!(&again, &s);
        prop_assert!(Subalgebra::from_space(&m2, s.space.clone(), "S").is_ok());
    }
}
