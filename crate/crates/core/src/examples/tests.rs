use super::*;
use crate::comatrix::{canonical_map, comod_end};
use crate::coring::{check_coideal, grouplike_elements};
use crate::galois::{verify_theorem_galarti, Verdict};

fn q() -> NumberField {
    NumberField::rationals()
}

fn n2() -> AOmega {
    let k = q();
    let m1 = k.from_int(-1);
    aomega(2, &k, &m1, &m1, &m1).unwrap()
}

fn n3() -> AOmega {
    let k = NumberField::preset("Qw3").unwrap();
    let w = k.root_of_unity(3).unwrap();
    aomega(3, &k, &w, &k.from_int(2), &k.from_int(3)).unwrap()
}

#[test]
fn trig_instance() {
    let t = trig().unwrap();
    assert!(t.coring.check_exhaustive());
    assert!(t.comodule.check().passed());
    let h = comod_end(&t.comodule).unwrap();
    assert_eq!(h, t.quaternions);
    assert_eq!(h.dim(), 4);
    let s = &t.sigma.end_alg;
    let minus_one = vector::neg(t.sigma.field(), &s.one());
    assert_eq!(s.mul(&t.i_bar, &t.i_bar), minus_one);
    assert_eq!(s.mul(&t.j_bar, &t.j_bar), minus_one);
    assert_eq!(s.mul(&t.i_bar, &t.j_bar), vector::neg(t.sigma.field(), &s.mul(&t.j_bar, &t.i_bar)));
    assert!(canonical_map(&t.comodule).unwrap().is_bijective());
    assert!(t.witness.check().is_isomorphism());
    let g = grouplike_elements(&t.coring).unwrap();
    assert!(g.points.is_empty() && g.complete);
}

#[test]
fn sweedler_instance() {
    let s = sweedler().unwrap();
    assert!(s.coring.check_exhaustive());
    assert!(s.witness.check().is_isomorphism());
}

#[test]
fn t2_can_is_onto_but_not_injective() {
    let t = t2_counterexample().unwrap();
    assert_eq!(t.ustar.coring.dim(), 3);
    assert!(t.ustar.coring.check_exhaustive());
    assert!(t.comodule.check().passed());
    assert_eq!(t.can.t.dim(), 1);
    assert_eq!(t.can.domain_dim(), 4);
    assert_eq!(t.can.rank, 3);
    assert!(t.can.is_surjective());
    assert!(!t.can.is_bijective());
}

#[test]
fn aomega_relations_and_dimensions() {
    for inst in [n2(), n3()] {
        assert!(inst.eqaction_check());
        let n = inst.n;
        let dims: Vec<usize> = inst.extensions.iter().map(|(_, c)| c.dim()).collect();
        assert_eq!(dims, vec![1, n, n, n * n, n * n, n * n * n]);
        assert!(inst.base.coring.check().passed());
    }
}

#[test]
fn reducible_parameters_are_rejected() {
    let k = q();
    let m1 = k.from_int(-1);
    assert!(matches!(aomega(2, &k, &m1, &k.from_int(4), &m1), Err(Error::HypothesisViolated(_))));
    assert!(matches!(aomega(2, &k, &k.one(), &m1, &m1), Err(Error::HypothesisViolated(_))));
}

#[test]
fn listed_coideals_match_kernels_n2() {
    let inst = n2();
    for name in ["C(alpha)", "C(beta)", "A_omega", "M_n(k)"] {
        let fixture = inst.listed_coideal(name).unwrap();
        assert!(check_coideal(&inst.base.coring, &fixture.span.vectors()).passed(), "{name}");
        assert_eq!(fixture.span, inst.j_of(name).unwrap(), "{name}");
    }
}

#[test]
fn unknown_extension() {
    assert!(matches!(n2().listed_coideal("D"), Err(Error::UnknownExtension(_))));
}

#[test]
fn correspondence_n2() {
    let inst = n2();
    let report = verify_theorem_galarti(&inst.base, &inst.extensions).unwrap();
    for e in &report {
        assert!(e.passed(), "{e:?}");
    }
}

#[test]
fn twisted_and_diagonal_c_alpha_are_not_conjugate() {
    let cert = n2().c_alpha_conjugacy().unwrap();
    assert_eq!(cert.verdict, Verdict::NotConjugate);
    assert_eq!(cert.det_is_zero, Some(true));
}

#[test]
fn grouplike_quotient_n2() {
    let k = q();
    let g = grouplike_quotient(2, &k, &k.from_int(-1)).unwrap();
    assert!(g.coideal_matches_kernel);
    assert!(g.grouplike.iter().all(|&b| b));
    assert!(g.iso.check().is_isomorphism());
}

#[test]
fn appendix_witnesses() {
    for n in 1..=2 {
        for case in [appendix_r(n).unwrap(), appendix_c_diag(n).unwrap(), appendix_c_twist(n).unwrap()] {
            assert!(case.model.check().passed(), "{:?} {n}", case.kind);
            assert!(case.witness_is_isomorphism(), "{:?} {n}", case.kind);
        }
    }
    let h = appendix_h(2).unwrap();
    assert!(h.witness_is_isomorphism());
    assert_eq!(appendix_h(3).unwrap_err(), Error::OddRankForH(3));
}

#[test]
fn classification_counts() {
    for (n, count) in [(1, 2), (2, 4), (3, 3)] {
        let c = classify(n).unwrap();
        assert_eq!(c.classes.len(), count, "n = {n}");
        assert!(c.passed(), "{c:?}");
    }
}

#[test]
fn quaternion_twists_are_conjugate() {
    for (name, cert) in inner_twisted_quaternions().unwrap() {
        assert_eq!(cert.verdict, Verdict::Conjugate, "{name}");
        assert!(cert.witness_verified, "{name}");
    }
}

#[test]
fn listed_coideals_match_kernels_n3() {
    let inst = n3();
    assert!(inst.eqaction_check());
    for name in ["C(alpha)", "C(beta)", "A_omega", "M_n(k)"] {
        let fixture = inst.listed_coideal(name).unwrap();
        assert_eq!(fixture.span, inst.j_of(name).unwrap(), "{name}");
    }
}

#[test]
fn correspondence_n3() {
    let inst = n3();
    let report = verify_theorem_galarti(&inst.base, &inst.extensions).unwrap();
    for e in &report {
        assert!(e.passed(), "{e:?}");
    }
}
