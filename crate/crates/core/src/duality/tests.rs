use super::*;
use crate::algebra::FinAlgebra;
use crate::comatrix::comatrix_coring;
use crate::coring::counit_kernel;
use crate::examples::{aomega, trig};
use crate::exactmath::NumberField;
use crate::galois::{is_simple_cosemisimple, j_of};

fn n2() -> crate::examples::AOmega {
    let k = NumberField::rationals();
    let m1 = k.from_int(-1);
    aomega(2, &k, &m1, &m1, &m1).unwrap()
}

#[test]
fn dual_iso_on_the_lattice() {
    let inst = n2();
    for (name, c) in &inst.extensions {
        let cm = comatrix_coring(&inst.sigma, c).unwrap();
        let iso = dual_iso_end(&cm).unwrap();
        assert_eq!(iso.dual_dim, iso.end_dim, "{name}");
        assert!(iso.passed(), "{name}");
    }
}

#[test]
fn dual_iso_ground_field() {
    let a = Arc::new(FinAlgebra::ground(&NumberField::rationals()));
    let sigma = FreeRightModule::new(&a, 2);
    let cm = comatrix_coring(&sigma, &Subalgebra::scalars(&sigma.end_alg)).unwrap();
    let iso = dual_iso_end(&cm).unwrap();
    assert_eq!(iso.end_dim, 4);
    assert!(iso.passed());
}

#[test]
fn quaternion_commutant() {
    let t = trig().unwrap();
    let u = j_star(&t.sigma, &t.quaternions).unwrap();
    assert_eq!(u.dim(), 4);
    assert_eq!(r_star(&t.sigma, &u).unwrap(), t.quaternions);
    let iso = dual_iso_end(&t.comatrix).unwrap();
    assert!(iso.passed());
    assert_eq!(iso.end_b, u);
}

#[test]
fn j_prime_examples() {
    let t = trig().unwrap();
    let base = comatrix_coring(&t.sigma, &Subalgebra::scalars(&t.sigma.end_alg)).unwrap();
    let a_image = Subalgebra::closure(
        t.sigma.endk_alg(),
        &[right_mult(&t.sigma, &t.sigma.alg.basis(1)).data],
        "A",
    );
    assert_eq!(j_prime(&base, &a_image).unwrap(), counit_kernel(&base.coring));
    let u = j_star(&t.sigma, &t.quaternions).unwrap();
    assert_eq!(j_prime(&t.comatrix, &u).unwrap().dim(), 0);
    for v in [&a_image, &u] {
        let p = r_prime_j_prime_property(&base, v).unwrap();
        assert!(p.equals_double_commutant && p.contains_u);
    }
}

#[test]
fn r_prime_examples() {
    let t = trig().unwrap();
    let base = comatrix_coring(&t.sigma, &Subalgebra::scalars(&t.sigma.end_alg)).unwrap();
    let k = t.sigma.field();
    let full = r_prime(&base, &Subspace::zero(k, base.coring.dim())).unwrap();
    assert_eq!(full.dim(), t.sigma.endk_alg().dim);
    let a = r_prime(&base, &counit_kernel(&base.coring)).unwrap();
    assert_eq!(a.dim(), t.sigma.d());
    let h = r_prime(&base, &j_of(&base, &t.quaternions).unwrap()).unwrap();
    assert_eq!(h, j_star(&t.sigma, &t.quaternions).unwrap());
}

#[test]
fn theorem_jb_on_the_lattice() {
    let inst = n2();
    for e in verify_theorem_jb(&inst.sigma, &inst.extensions).unwrap() {
        assert!(e.passed(), "{e:?}");
    }
}

#[test]
fn ustar_of_quaternions_is_galois() {
    let t = trig().unwrap();
    let ring = ARing::new(&t.sigma, j_star(&t.sigma, &t.quaternions).unwrap()).unwrap();
    let us = UStarCoring::new(&ring).unwrap();
    assert!(us.coring.check_exhaustive());
    assert_eq!(us.coring.dim(), 4);
    let m = us.comodule();
    assert!(m.check().passed());
    let can = us.canonical_map().unwrap();
    assert_eq!(can.t, t.quaternions);
    assert!(can.is_bijective());
    assert!(is_simple_cosemisimple(&m).unwrap().value());
}

#[test]
fn ring_without_a_is_rejected() {
    let t = trig().unwrap();
    let v = Subalgebra::scalars(t.sigma.endk_alg());
    assert!(ARing::new(&t.sigma, v).is_err());
}
