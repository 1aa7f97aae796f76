use super::*;
use crate::exactmath::vector;

fn qi() -> Arc<FinAlgebra> {
    let k = NumberField::rationals();
    let qi = NumberField::preset("Qi").unwrap();
    let _ = k;
    Arc::new(FinAlgebra::from_number_field(&qi).unwrap())
}

fn elem(sigma: &FreeRightModule, entries: &[(usize, usize, usize, i64)]) -> Vec<Scalar> {
    let k = sigma.field();
    let mut v = vector::zero(k, sigma.end_alg.dim);
    for &(p, q, s, c) in entries {
        v[(p * sigma.rank + q) * sigma.d() + s] = k.from_int(c);
    }
    v
}

fn quaternions(sigma: &Arc<FreeRightModule>) -> Subalgebra {
    let i = elem(sigma, &[(0, 1, 0, -1), (1, 0, 0, 1)]);
    let j = elem(sigma, &[(0, 0, 1, 1), (1, 1, 1, -1)]);
    Subalgebra::closure(&sigma.end_alg, &[i, j], "H")
}

#[test]
fn quaternion_comatrix_is_four_dimensional_and_galois() {
    let sigma = FreeRightModule::new(&qi(), 2);
    let h = quaternions(&sigma);
    assert_eq!(h.dim(), 4);
    let cm = comatrix_coring(&sigma, &h).unwrap();
    assert_eq!(cm.coring.dim(), 4);
    assert!(cm.coring.check_exhaustive());
    let rho = canonical_coaction(&cm);
    assert!(rho.check().passed());
    assert_eq!(comod_end(&rho).unwrap(), h);
    let can = canonical_map(&rho).unwrap();
    assert!(can.well_defined);
    assert!(can.is_bijective());
    assert!(can.morphism_check().is_isomorphism());
}

#[test]
fn morita_collapse() {
    let sigma = FreeRightModule::new(&qi(), 2);
    let s = Subalgebra::whole(&sigma.end_alg);
    let cm = comatrix_coring(&sigma, &s).unwrap();
    assert_eq!(cm.coring.dim(), 2);
    assert!(cm.coring.check().passed());
    assert_eq!(cm.w.dim(), sigma.ambient_dim() - 2);
}

#[test]
fn ground_field_comatrix() {
    let a = Arc::new(FinAlgebra::ground(&NumberField::rationals()));
    let sigma = FreeRightModule::new(&a, 3);
    let cm = comatrix_coring(&sigma, &Subalgebra::scalars(&sigma.end_alg)).unwrap();
    assert_eq!(cm.coring.dim(), 9);
    assert!(cm.coring.check_exhaustive());
    let rho = canonical_coaction(&cm);
    assert!(rho.check().passed());
    assert!(is_galois(&rho).unwrap());
}

#[test]
fn closure_stabilizes() {
    let sigma = FreeRightModule::new(&qi(), 2);
    let i = elem(&sigma, &[(0, 1, 0, -1), (1, 0, 0, 1)]);
    let b = Subalgebra::closure(&sigma.end_alg, &[i], "B");
    let bar = comod_end(&canonical_coaction(&comatrix_coring(&sigma, &b).unwrap())).unwrap();
    assert!(b.is_subalgebra_of(&bar));
    let barbar = comod_end(&canonical_coaction(&comatrix_coring(&sigma, &bar).unwrap())).unwrap();
    assert_eq!(bar, barbar);
}

#[test]
fn delta_ignores_dual_basis() {
    let sigma = FreeRightModule::new(&qi(), 2);
    let cm = comatrix_coring(&sigma, &quaternions(&sigma)).unwrap();
    let g = elem(&sigma, &[(0, 0, 0, 1), (0, 1, 1, 2), (1, 1, 0, 3), (1, 0, 1, -1)]);
    assert!(dual_basis_independence_check(&cm, &g).unwrap());
    assert!(dual_basis_independence_check(&cm, &sigma.end_alg.one()).unwrap());
    let singular = elem(&sigma, &[(0, 0, 0, 1)]);
    assert_eq!(dual_basis_independence_check(&cm, &singular), Err(Error::SingularChangeOfBasis));
}

#[test]
fn subalgebra_outside_end_is_rejected() {
    let sigma = FreeRightModule::new(&qi(), 2);
    let other = Arc::new(FinAlgebra::full_matrix_algebra(&NumberField::rationals(), 2));
    assert!(matches!(
        comatrix_coring(&sigma, &Subalgebra::whole(&other)),
        Err(Error::NotASubalgebraOfEnd(_))
    ));
}
