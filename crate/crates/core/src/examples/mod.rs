//! Concrete instances: the trigonometric coring, Sweedler corings, the
//! A_ω(α, β) family with its coideal fixtures, the triangular counterexample
//! and the C/R classification cases (realized over Q(i)/Q).

mod aomega;
mod appendix;

use std::sync::Arc;

use crate::algebra::{FinAlgebra, Subalgebra};
use crate::comatrix::{canonical_coaction, canonical_map, comatrix_coring, CanonicalMap, ComatrixCoring, Comodule, FreeRightModule};
use crate::coring::{Bimodule, Coring, CoringMorphism};
use crate::duality::{ARing, UStarCoring};
use crate::error::{Error, Result};
use crate::exactmath::{vector, NumberField, SMat, SVec, Scalar};

pub use aomega::{aomega, aomega_relaxed, grouplike_quotient, AOmega, GrouplikeQuotient, ListedCoideal, EXTENSIONS};
pub use appendix::{
    appendix_c_diag, appendix_c_twist, appendix_h, appendix_r, classify, inner_twisted_quaternions, AppendixCase,
    ClassEntry, Classification, EmbeddingKind, CLASSIFY_MAX_N,
};

/// Ids accepted by [`build`] and the command line.
pub const INSTANCE_IDS: &[&str] = &[
    "trig",
    "sweedler",
    "aomega",
    "t2-counterexample",
    "appendix-R",
    "appendix-C-diag",
    "appendix-C-twist",
    "appendix-H",
];

pub(crate) fn gaussian() -> Arc<FinAlgebra> {
    let qi = NumberField::preset("Qi").expect("Q(i) preset");
    Arc::new(FinAlgebra::from_number_field(&qi).expect("Q(i) as an algebra"))
}

/// A bimodule that is free as a right module on generators m_0..m_{r-1},
/// k-basis m_p a_t at index p d + t. `act(s, p)` gives a_s · m_p as a list of
/// (q, c) meaning Σ m_q c.
pub fn free_bimodule(
    alg: &Arc<FinAlgebra>,
    rank: usize,
    act: &dyn Fn(usize, usize) -> Vec<(usize, Vec<Scalar>)>,
    label: &str,
) -> Result<Arc<Bimodule>> {
    let k = &alg.field;
    let d = alg.dim;
    let dim = rank * d;
    let mut left = Vec::with_capacity(d);
    let mut right = Vec::with_capacity(d);
    for s in 0..d {
        let mut lc = Vec::with_capacity(dim);
        let mut rc = Vec::with_capacity(dim);
        for p in 0..rank {
            let terms = act(s, p);
            for t in 0..d {
                let at = alg.basis(t);
                let mut v = SVec::zero(dim);
                for (q, c) in &terms {
                    v.add_scaled_at(k, &SVec::from_dense(k, &alg.mul(c, &at)), &k.one(), q * d);
                }
                lc.push(v);
                let mut w = SVec::zero(dim);
                w.add_scaled_at(k, &SVec::from_dense(k, &alg.mul(&at, &alg.basis(s))), &k.one(), p * d);
                rc.push(w);
            }
        }
        left.push(SMat::from_cols(dim, lc));
        right.push(SMat::from_cols(dim, rc));
    }
    Ok(Arc::new(Bimodule::new(alg, dim, left, right, label)?))
}

/// The generator m_p of a free bimodule built by [`free_bimodule`].
pub fn free_gen(alg: &FinAlgebra, dim: usize, p: usize) -> SVec {
    let k = &alg.field;
    let mut v = SVec::zero(dim);
    v.add_scaled_at(k, &SVec::from_dense(k, &alg.unit), &k.one(), p * alg.dim);
    v
}

/// The map m_p a_t ↦ images[p] · a_t from a free carrier into another coring.
pub fn free_morphism(source: &Arc<Coring>, target: &Arc<Coring>, images: &[SVec]) -> Result<CoringMorphism> {
    let alg = source.alg();
    let d = alg.dim;
    if images.len() * d != source.dim() {
        return Err(Error::DimensionMismatch("one image per free generator".into()));
    }
    let cols = images
        .iter()
        .flat_map(|img| (0..d).map(|t| target.carrier.right_act(img, &alg.basis(t))).collect::<Vec<_>>())
        .collect();
    CoringMorphism::new(source, target, SMat::from_cols(target.dim(), cols))
}

/// A as a coring over itself: Δ(1) = 1 ⊗ 1, ε(1) = 1.
pub fn trivial_coring(alg: &Arc<FinAlgebra>) -> Result<Coring> {
    let carrier = free_bimodule(alg, 1, &|s, _| vec![(0, alg.basis(s))], &alg.label)?;
    let one = free_gen(alg, carrier.dim, 0);
    Coring::from_free_presentation(carrier, vec![one.clone()], &[vec![(one.clone(), one)]], &[alg.unit.clone()], &alg.label)
}

/// The trigonometric coring over Q(i): generators c, s with ic = ci,
/// is = -si, Δc = c⊗c − s⊗s, Δs = c⊗s + s⊗c, ε(c) = 1, ε(s) = 0.
pub fn trig_coring() -> Result<Coring> {
    let a = gaussian();
    let k = a.field.clone();
    let (one, i) = (a.unit.clone(), a.basis(1));
    let neg_i = vector::neg(&k, &i);
    let act = move |s: usize, p: usize| -> Vec<(usize, Vec<Scalar>)> {
        match (s, p) {
            (0, p) => vec![(p, one.clone())],
            (_, 0) => vec![(0, i.clone())],
            _ => vec![(1, neg_i.clone())],
        }
    };
    let carrier = free_bimodule(&a, 2, &act, "trig")?;
    let c = free_gen(&a, 4, 0);
    let s = free_gen(&a, 4, 1);
    let delta = vec![
        vec![(c.clone(), c.clone()), (s.neg(&k), s.clone())],
        vec![(c.clone(), s.clone()), (s.clone(), c.clone())],
    ];
    let counit = vec![a.unit.clone(), a.zero()];
    Coring::from_free_presentation(carrier, vec![c, s], &delta, &counit, "trig")
}

/// The trigonometric coring with Σ = Q(i)² as comodule and the quaternions as
/// its endomorphism ring.
#[derive(Clone, Debug)]
pub struct Trig {
    pub coring: Arc<Coring>,
    pub sigma: Arc<FreeRightModule>,
    pub comodule: Comodule,
    /// ī = [[0, −1], [1, 0]], j̄ = diag(i, −i) in M₂(Q(i))
    pub i_bar: Vec<Scalar>,
    pub j_bar: Vec<Scalar>,
    pub quaternions: Subalgebra,
    pub comatrix: ComatrixCoring,
    /// c a ↦ (v₁*⊗v₁) a, s a ↦ (v₂*⊗v₁) a
    pub witness: CoringMorphism,
}

/// Element of M_n(A) from entries (p, q, basis index of A, integer).
pub fn matrix_elem(sigma: &FreeRightModule, entries: &[(usize, usize, usize, i64)]) -> Vec<Scalar> {
    let k = sigma.field();
    let mut v = vector::zero(k, sigma.end_alg.dim);
    for &(p, q, s, c) in entries {
        let idx = (p * sigma.rank + q) * sigma.d() + s;
        v[idx] = k.add(&v[idx], &k.from_int(c));
    }
    v
}

pub fn trig() -> Result<Trig> {
    let coring = Arc::new(trig_coring()?);
    let a = coring.alg().clone();
    let k = a.field.clone();
    let sigma = FreeRightModule::new(&a, 2);
    let cd = coring.dim();
    let (c, s) = (free_gen(&a, cd, 0), free_gen(&a, cd, 1));
    let mut r1 = SVec::zero(2 * cd);
    r1.add_scaled_at(&k, &c, &k.one(), 0);
    r1.add_scaled_at(&k, &s, &k.one(), cd);
    let mut r2 = SVec::zero(2 * cd);
    r2.add_scaled_at(&k, &s, &k.from_int(-1), 0);
    r2.add_scaled_at(&k, &c, &k.one(), cd);
    let comodule = Comodule::from_basis_images(&sigma, &coring, &[r1, r2])?;
    let i_bar = matrix_elem(&sigma, &[(0, 1, 0, -1), (1, 0, 0, 1)]);
    let j_bar = matrix_elem(&sigma, &[(0, 0, 1, 1), (1, 1, 1, -1)]);
    let quaternions = Subalgebra::closure(&sigma.end_alg, &[i_bar.clone(), j_bar.clone()], "H");
    let comatrix = comatrix_coring(&sigma, &quaternions)?;
    let images = [
        comatrix.class(&sigma.dual_basis_vec(0), &sigma.basis_vec(0)),
        comatrix.class(&sigma.dual_basis_vec(1), &sigma.basis_vec(0)),
    ];
    let witness = free_morphism(&coring, &comatrix.coring, &images)?;
    Ok(Trig { coring, sigma, comodule, i_bar, j_bar, quaternions, comatrix, witness })
}

/// The Sweedler coring A ⊗_k A of a k-algebra A: basis a_s ⊗ a_t at index
/// s d + t, Δ(a ⊗ b) = (a ⊗ 1) ⊗ (1 ⊗ b), ε(a ⊗ b) = ab.
pub fn sweedler_coring(alg: &Arc<FinAlgebra>) -> Result<Coring> {
    let k = &alg.field;
    let d = alg.dim;
    // right generators a_s ⊗ 1; a_u · (a_s ⊗ 1) = (a_u a_s) ⊗ 1
    let act = |u: usize, s: usize| -> Vec<(usize, Vec<Scalar>)> {
        let prod = alg.mul(&alg.basis(u), &alg.basis(s));
        prod.iter()
            .enumerate()
            .filter(|(_, c)| !k.is_zero(c))
            .map(|(q, c)| (q, vector::scale(k, &alg.unit, c)))
            .collect()
    };
    let carrier = free_bimodule(alg, d, &act, &format!("{}⊗{}", alg.label, alg.label))?;
    // with gens a_s ⊗ 1 the k-basis index s d + t is (a_s ⊗ 1) a_t = a_s ⊗ a_t
    let dim = carrier.dim;
    let gens: Vec<SVec> = (0..d).map(|s| free_gen(alg, dim, s)).collect();
    let unit_gen = {
        // 1 ⊗ 1 written in the generators
        let mut v = SVec::zero(dim);
        for (s, c) in alg.unit.iter().enumerate() {
            if !k.is_zero(c) {
                v.add_scaled_at(k, &free_gen(alg, dim, s), c, 0);
            }
        }
        v
    };
    let delta: Vec<Vec<(SVec, SVec)>> = gens.iter().map(|g| vec![(g.clone(), unit_gen.clone())]).collect();
    let counit: Vec<Vec<Scalar>> = (0..d).map(|s| alg.basis(s)).collect();
    Coring::from_free_presentation(carrier, gens, &delta, &counit, &format!("Sweedler({})", alg.label))
}

/// Q(i) ⊗_Q Q(i) both as a Sweedler coring and as the comatrix coring of
/// Σ = Q(i) over the scalars.
#[derive(Clone, Debug)]
pub struct Sweedler {
    pub coring: Arc<Coring>,
    pub sigma: Arc<FreeRightModule>,
    pub comatrix: ComatrixCoring,
    /// a ⊗ b ↦ a (e₁*⊗e₁) b
    pub witness: CoringMorphism,
}

pub fn sweedler() -> Result<Sweedler> {
    let a = gaussian();
    let coring = Arc::new(sweedler_coring(&a)?);
    let sigma = FreeRightModule::new(&a, 1);
    let comatrix = comatrix_coring(&sigma, &Subalgebra::scalars(&sigma.end_alg))?;
    let g = comatrix.class(&sigma.dual_basis_vec(0), &sigma.basis_vec(0));
    let images: Vec<SVec> = (0..a.dim).map(|s| comatrix.coring.carrier.left_act(&a.basis(s), &g)).collect();
    let witness = free_morphism(&coring, &comatrix.coring, &images)?;
    Ok(Sweedler { coring, sigma, comatrix, witness })
}

/// U = T₂(Q) acting on Σ = Q² from the right: U* is a three dimensional
/// coalgebra and can: Σ*⊗_Q Σ -> U* is onto but not injective.
#[derive(Clone, Debug)]
pub struct T2Counterexample {
    pub sigma: Arc<FreeRightModule>,
    pub ring: ARing,
    pub ustar: UStarCoring,
    pub comodule: Comodule,
    pub can: CanonicalMap,
}

pub fn t2_counterexample() -> Result<T2Counterexample> {
    let k = NumberField::rationals();
    let a = Arc::new(FinAlgebra::ground(&k));
    let sigma = FreeRightModule::new(&a, 2);
    let endk = sigma.endk_alg();
    // x u is computed by the stored matrix; U upper triangular on row vectors
    // is stored as lower triangular matrices acting on columns
    let e = |p: usize, q: usize| vector::unit(&k, 4, p * 2 + q);
    let v = Subalgebra::closure(endk, &[e(0, 0), e(1, 0), e(1, 1)], "T2");
    let ring = ARing::new(&sigma, v)?;
    let ustar = UStarCoring::new(&ring)?;
    let comodule = ustar.comodule();
    let can = canonical_map(&comodule)?;
    Ok(T2Counterexample { sigma, ring, ustar, comodule, can })
}

/// The canonical comodule of a comatrix coring, re-exported for instance code.
pub fn coaction(cm: &ComatrixCoring) -> Comodule {
    canonical_coaction(cm)
}

#[cfg(test)]
mod tests;
