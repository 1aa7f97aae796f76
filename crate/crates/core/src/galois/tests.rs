use super::*;
use crate::coring::counit_kernel;
use crate::examples::{aomega, sweedler, trig};
use crate::exactmath::NumberField;

fn n2() -> crate::examples::AOmega {
    let k = NumberField::rationals();
    let m1 = k.from_int(-1);
    aomega(2, &k, &m1, &m1, &m1).unwrap()
}

#[test]
fn trivial_ends_of_the_lattice() {
    let inst = n2();
    let base = &inst.base;
    let zero = j_of(base, &inst.extensions[0].1).unwrap();
    assert_eq!(zero.dim(), 0);
    assert_eq!(r_of(base, &zero).unwrap(), inst.extensions[0].1);
    let ker = counit_kernel(&base.coring);
    assert_eq!(j_of(base, &inst.extensions[5].1).unwrap(), ker);
    assert_eq!(r_of(base, &ker).unwrap().dim(), inst.sigma.end_alg.dim);
}

#[test]
fn j_is_inclusion_preserving() {
    let inst = n2();
    let k = inst.sigma.field();
    let chains = [(0, 1), (1, 3), (2, 3), (3, 5), (4, 5), (0, 4)];
    for (a, b) in chains {
        let (ca, cb) = (&inst.extensions[a].1, &inst.extensions[b].1);
        assert!(ca.is_subalgebra_of(cb));
        assert!(j_of(&inst.base, ca).unwrap().is_subspace_of(k, &j_of(&inst.base, cb).unwrap()));
    }
}

#[test]
fn not_intermediate_is_rejected() {
    let inst = n2();
    let (cm, _) = base_setting(&inst.sigma, &inst.extensions[1].1).unwrap();
    assert!(matches!(j_of(&cm, &inst.extensions[2].1), Err(Error::NotIntermediate(_))));
}

#[test]
fn proposition_items_on_the_lattice() {
    let inst = n2();
    for (_, c) in &inst.extensions {
        for (_, d) in &inst.extensions {
            let j = j_of(&inst.base, d).unwrap();
            assert!(proposition_properties(&inst.base, c, &j).unwrap().all());
        }
    }
}

#[test]
fn trig_is_simple_cosemisimple() {
    let t = trig().unwrap();
    let s = is_simple_cosemisimple(&t.comodule).unwrap();
    assert!(s.value());
    assert_eq!(s.end_division, crate::algebra::DivisionStatus::Certified);
}

#[test]
fn rank_one_sweedler_coideals() {
    let s = sweedler().unwrap();
    let cm = &s.comatrix;
    let lattice = enumerate_coideals(&cm.coring).unwrap();
    assert!(lattice.coideals.len() >= 2);
    for j in &lattice.coideals {
        let (_, m) = quotient_comodule(cm, j).unwrap();
        assert!(is_simple_cosemisimple(&m).unwrap().value());
        let r = r_of(cm, j).unwrap();
        assert_eq!(j_of(cm, &r).unwrap(), *j);
        assert_eq!(pjb_closure(cm, j).unwrap(), r);
    }
}

#[test]
fn enumeration_refuses_large_carriers() {
    let t = trig().unwrap();
    let (cm, _) = base_setting(&t.sigma, &crate::algebra::Subalgebra::scalars(&t.sigma.end_alg)).unwrap();
    assert!(matches!(enumerate_coideals(&cm.coring), Err(Error::CarrierTooLarge(_))));
}

#[test]
fn identity_conjugacy() {
    let t = trig().unwrap();
    let cert = conjugacy(
        &t.sigma,
        &t.quaternions,
        &t.quaternions,
        &[(t.i_bar.clone(), t.i_bar.clone()), (t.j_bar.clone(), t.j_bar.clone())],
    )
    .unwrap();
    assert_eq!(cert.verdict, Verdict::Conjugate);
    assert!(cert.witness_verified);
}

#[test]
fn mismatched_identification_is_refused() {
    let inst = n2();
    let c = &inst.extensions[1].1;
    let d = &inst.extensions[4].1;
    let r = conjugacy(&inst.sigma, c, d, &[(inst.x_mat.clone(), inst.x0.clone())]);
    assert!(matches!(r, Err(Error::NoIsomorphismSupplied(_))));
}

#[test]
fn diagonal_and_antidiagonal_complex_embeddings() {
    let d = crate::examples::appendix_c_diag(2).unwrap();
    let t = crate::examples::appendix_c_twist(2).unwrap();
    let cert = conjugacy(&d.sigma, &d.b, &t.b, &[(d.generators[0].clone(), t.generators[0].clone())]).unwrap();
    assert_eq!(cert.verdict, Verdict::NotConjugate);
    assert_eq!(cert.witness, None);
}

#[test]
fn triangular_subring_surfaces_in_the_report() {
    let inst = n2();
    let k = inst.sigma.field();
    let s = &inst.sigma.end_alg;
    let d = inst.sigma.d();
    let mut e = vec![k.zero(); s.dim];
    e[0] = k.one();
    let mut u = vec![k.zero(); s.dim];
    u[d] = k.one();
    let t2 = Subalgebra::closure(s, &[e, u], "T2");
    let entry = correspondence_entry(&inst.base, "T2", &t2).unwrap();
    assert!(!entry.simple_artinian);
    assert!(entry.simple_cosemisimple.is_none());
    assert!(!entry.passed());
}
