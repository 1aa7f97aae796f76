use proptest::prelude::*;

use coring_lab::algebra::Subalgebra;
use coring_lab::comatrix::{canonical_coaction, comatrix_coring, comod_end, dual_basis_independence_check};
use coring_lab::examples::{self, AOmega};
use coring_lab::exactmath::{NumberField, Scalar, Subspace};
use coring_lab::galois::{j_of, proposition_properties};

fn n2() -> AOmega {
    let k = NumberField::rationals();
    let m1 = k.from_int(-1);
    examples::aomega(2, &k, &m1, &m1, &m1).unwrap()
}

fn to_field(k: &NumberField, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| k.from_int(x)).collect()
}

fn subalgebra(inst: &AOmega, gens: &[Vec<i64>]) -> Subalgebra {
    let k = inst.sigma.field();
    let gens: Vec<Vec<Scalar>> = gens.iter().map(|g| to_field(k, g)).collect();
    Subalgebra::closure(&inst.sigma.end_alg, &gens, "C")
}

fn bar(inst: &AOmega, c: &Subalgebra) -> Subalgebra {
    let cm = comatrix_coring(&inst.sigma, c).unwrap();
    comod_end(&canonical_coaction(&cm)).unwrap()
}

/// Sparse small-integer elements of End(Σ) = M_2(A), dimension 8 over Q.
fn elem() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -2i64..=2], 8)
}

fn vectors(dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, dim), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rref_span_is_canonical(vs in vectors(5), c in -3i64..=3) {
        let k = NumberField::rationals();
        let vs: Vec<Vec<Scalar>> = vs.iter().map(|v| to_field(&k, v)).collect();
        let s = Subspace::span(&k, 5, &vs);
        let mut mixed: Vec<Vec<Scalar>> = vs.iter().rev().cloned().collect();
        let head = mixed[0].clone();
        for v in mixed.iter_mut().skip(1) {
            for (x, h) in v.iter_mut().zip(&head) {
                *x = k.add(x, &k.mul(&k.from_int(c), h));
            }
        }
        prop_assert_eq!(&Subspace::span(&k, 5, &mixed), &s);
        prop_assert_eq!(&Subspace::span(&k, 5, &s.vectors()), &s);
        prop_assert!(s.is_subspace_of(&k, &s));
    }

    #[test]
    fn sum_and_intersection_dimensions(a in vectors(4), b in vectors(4)) {
        let k = NumberField::rationals();
        let sa = Subspace::span(&k, 4, &a.iter().map(|v| to_field(&k, v)).collect::<Vec<_>>());
        let sb = Subspace::span(&k, 4, &b.iter().map(|v| to_field(&k, v)).collect::<Vec<_>>());
        let sum = sa.sum(&k, &sb);
        let cap = sa.intersection(&k, &sb);
        prop_assert_eq!(sum.dim() + cap.dim(), sa.dim() + sb.dim());
        prop_assert!(cap.is_subspace_of(&k, &sa) && sa.is_subspace_of(&k, &sum));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn comultiplication_ignores_dual_basis_choice(g in elem()) {
        let inst = n2();
        let k = inst.sigma.field();
        let g = to_field(k, &g);
        prop_assume!(inst.sigma.end_alg.inverse(&g).is_some());
        prop_assert!(dual_basis_independence_check(&inst.base, &g).unwrap());
    }

    #[test]
    fn closure_of_intermediate_ring_is_stable(gens in prop::collection::vec(elem(), 1..3)) {
        let inst = n2();
        let c = subalgebra(&inst, &gens);
        let cb = bar(&inst, &c);
        prop_assert!(c.is_subalgebra_of(&cb));
        prop_assert_eq!(bar(&inst, &cb), cb);
    }

    #[test]
    fn coideal_of_ring_satisfies_proposition(c in prop::collection::vec(elem(), 1..3), d in prop::collection::vec(elem(), 1..3)) {
        let inst = n2();
        let c = subalgebra(&inst, &c);
        let d = subalgebra(&inst, &d);
        let j = j_of(&inst.base, &d).unwrap();
        let p = proposition_properties(&inst.base, &c, &j).unwrap();
        prop_assert!(p.all(), "{:?}", p);
    }
}
