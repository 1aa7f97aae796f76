//! Comatrix corings Σ*⊗_B Σ on a free module Σ = A^n, the coaction on Σ,
//! comodule endomorphism rings and the canonical map.

use std::sync::{Arc, OnceLock};

use crate::algebra::{FinAlgebra, Subalgebra};
use crate::coring::{Bimodule, Coring, CoringMorphism, MorphismCheck, QuotientCoring, TensorOverA};
use crate::error::{Error, Result};
use crate::exactmath::{vector, Echelon, Matrix, NumberField, SMat, SVec, Scalar, Subspace};

/// Σ = A^n with basis e_1..e_n; the k-basis e_j a_t sits at index j d + t.
/// Σ* = Hom_A(Σ, A) has k-basis a_s e_l* at index l d + s.
#[derive(Clone, Debug)]
pub struct FreeRightModule {
    pub alg: Arc<FinAlgebra>,
    pub rank: usize,
    /// End(Σ_A) = M_n(A), basis a_s e_pq at index (p n + q) d + s.
    pub end_alg: Arc<FinAlgebra>,
    endk: OnceLock<Arc<FinAlgebra>>,
}

impl FreeRightModule {
    pub fn new(alg: &Arc<FinAlgebra>, rank: usize) -> Arc<Self> {
        let end_alg = Arc::new(FinAlgebra::matrix_algebra(alg, rank));
        Arc::new(FreeRightModule { alg: alg.clone(), rank, end_alg, endk: OnceLock::new() })
    }

    /// End_k(Σ) = M_N(k) acting on k-coordinates, entry (p, q) at index p N + q.
    pub fn endk_alg(&self) -> &Arc<FinAlgebra> {
        self.endk.get_or_init(|| Arc::new(FinAlgebra::full_matrix_algebra(self.field(), self.kdim())))
    }

    pub fn field(&self) -> &NumberField {
        &self.alg.field
    }

    pub fn d(&self) -> usize {
        self.alg.dim
    }

    /// k-dimension of Σ (and of Σ*).
    pub fn kdim(&self) -> usize {
        self.rank * self.alg.dim
    }

    /// k-dimension of Σ* ⊗_k Σ.
    pub fn ambient_dim(&self) -> usize {
        self.kdim() * self.kdim()
    }

    pub fn basis_vec(&self, j: usize) -> SVec {
        SVec::unit(self.field(), self.kdim(), j * self.d())
    }

    pub fn dual_basis_vec(&self, l: usize) -> SVec {
        SVec::unit(self.field(), self.kdim(), l * self.d())
    }

    /// Coordinate i of x, an element of A.
    pub fn coord(&self, x: &SVec, i: usize) -> Vec<Scalar> {
        x.block(self.field(), i * self.d(), self.d())
    }

    /// x · a
    pub fn right_act(&self, x: &SVec, a: &[Scalar]) -> SVec {
        let k = self.field();
        let d = self.d();
        let mut out = SVec::zero(self.kdim());
        for j in x.nonzero_blocks(d) {
            let c = self.alg.mul(&x.block(k, j * d, d), a);
            out.add_scaled_at(k, &SVec::from_dense(k, &c), &k.one(), j * d);
        }
        out
    }

    /// a · φ for φ in Σ*.
    pub fn dual_left_act(&self, a: &[Scalar], phi: &SVec) -> SVec {
        let k = self.field();
        let d = self.d();
        let mut out = SVec::zero(self.kdim());
        for l in phi.nonzero_blocks(d) {
            let c = self.alg.mul(a, &phi.block(k, l * d, d));
            out.add_scaled_at(k, &SVec::from_dense(k, &c), &k.one(), l * d);
        }
        out
    }

    /// Entry (p, q) of an element of M_n(A), as an element of A.
    pub fn entry(&self, f: &[Scalar], p: usize, q: usize) -> Vec<Scalar> {
        let d = self.d();
        let i = (p * self.rank + q) * d;
        f[i..i + d].to_vec()
    }

    /// f(x) for f in End(Σ_A).
    pub fn end_act(&self, f: &[Scalar], x: &SVec) -> SVec {
        let k = self.field();
        let d = self.d();
        let mut out = SVec::zero(self.kdim());
        for q in x.nonzero_blocks(d) {
            let xq = x.block(k, q * d, d);
            for p in 0..self.rank {
                let c = self.alg.mul(&self.entry(f, p, q), &xq);
                out.add_scaled_at(k, &SVec::from_dense(k, &c), &k.one(), p * d);
            }
        }
        out
    }

    /// φ ∘ f for φ in Σ*.
    pub fn dual_end_act(&self, phi: &SVec, f: &[Scalar]) -> SVec {
        let k = self.field();
        let d = self.d();
        let mut out = SVec::zero(self.kdim());
        for l in phi.nonzero_blocks(d) {
            let pl = phi.block(k, l * d, d);
            for q in 0..self.rank {
                let c = self.alg.mul(&pl, &self.entry(f, l, q));
                out.add_scaled_at(k, &SVec::from_dense(k, &c), &k.one(), q * d);
            }
        }
        out
    }

    /// φ(x) = Σ_l φ_l x_l.
    pub fn evaluate(&self, phi: &SVec, x: &SVec) -> Vec<Scalar> {
        let k = self.field();
        let d = self.d();
        let mut out = vector::zero(k, d);
        for l in phi.nonzero_blocks(d) {
            let p = self.alg.mul(&phi.block(k, l * d, d), &x.block(k, l * d, d));
            out = vector::add(k, &out, &p);
        }
        out
    }

    /// φ ⊗ x in Σ* ⊗_k Σ.
    pub fn tensor_k(&self, phi: &SVec, x: &SVec) -> SVec {
        let k = self.field();
        let nn = self.kdim();
        let mut out = SVec::zero(self.ambient_dim());
        for (&i, a) in &phi.entries {
            out.add_scaled_at(k, x, a, i * nn);
        }
        out
    }

    /// The k-matrix of f acting on Σ.
    pub fn k_matrix(&self, f: &[Scalar]) -> Matrix {
        let k = self.field();
        let cols: Vec<Vec<Scalar>> =
            (0..self.kdim()).map(|j| self.end_act(f, &SVec::unit(k, self.kdim(), j)).to_dense(k)).collect();
        Matrix::from_cols(k, self.kdim(), &cols)
    }

    /// Σ*⊗_k Σ as an A-bimodule: A acts on Σ* from the left and on Σ from the right.
    pub fn ambient_bimodule(&self) -> Bimodule {
        let k = self.field();
        let nn = self.kdim();
        let dim = self.ambient_dim();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for s in 0..self.d() {
            let a = self.alg.basis(s);
            let mut lc = Vec::with_capacity(dim);
            let mut rc = Vec::with_capacity(dim);
            for i in 0..nn {
                let phi = SVec::unit(k, nn, i);
                let aphi = self.dual_left_act(&a, &phi);
                for j in 0..nn {
                    let x = SVec::unit(k, nn, j);
                    lc.push(self.tensor_k(&aphi, &x));
                    rc.push(self.tensor_k(&phi, &self.right_act(&x, &a)));
                }
            }
            left.push(SMat::from_cols(dim, lc));
            right.push(SMat::from_cols(dim, rc));
        }
        Bimodule::new_unchecked(&self.alg, dim, left, right, "Σ*⊗Σ")
    }

    /// span{φ b ⊗ x − φ ⊗ b x : b in gens}.
    pub fn balancing(&self, gens: &[Vec<Scalar>]) -> Subspace {
        let k = self.field();
        let nn = self.kdim();
        let mut ech = Echelon::new(self.ambient_dim());
        for g in gens {
            for i in 0..nn {
                let phi = SVec::unit(k, nn, i);
                let phig = self.dual_end_act(&phi, g);
                for j in 0..nn {
                    let x = SVec::unit(k, nn, j);
                    let v = self.tensor_k(&phig, &x).sub(k, &self.tensor_k(&phi, &self.end_act(g, &x)));
                    if !v.is_zero() {
                        ech.insert(k, v.to_dense(k));
                    }
                }
            }
        }
        ech.into_subspace(k)
    }

    /// The standard dual basis {(e_i*, e_i)}.
    pub fn standard_dual_basis(&self) -> Vec<(SVec, SVec)> {
        (0..self.rank).map(|i| (self.dual_basis_vec(i), self.basis_vec(i))).collect()
    }

    fn check_subalgebra(&self, b: &Subalgebra) -> Result<()> {
        if !Arc::ptr_eq(&b.ambient, &self.end_alg) && *b.ambient != *self.end_alg {
            return Err(Error::NotASubalgebraOfEnd(b.label.clone()));
        }
        Ok(())
    }
}

/// Σ*⊗_B Σ realized as the quotient of Σ*⊗_k Σ by the balancing span W_B.
#[derive(Clone, Debug)]
pub struct ComatrixCoring {
    pub sigma: Arc<FreeRightModule>,
    pub b: Subalgebra,
    pub w: Subspace,
    /// Σ*⊗_k Σ -> carrier
    pub proj: SMat,
    pub coring: Arc<Coring>,
}

impl ComatrixCoring {
    pub fn field(&self) -> &NumberField {
        self.sigma.field()
    }

    /// Class of φ ⊗ x in the carrier.
    pub fn class(&self, phi: &SVec, x: &SVec) -> SVec {
        self.proj.apply(self.field(), &self.sigma.tensor_k(phi, x))
    }

    /// Δ on the carrier basis computed from an arbitrary dual basis.
    pub fn delta_with(&self, dual_basis: &[(SVec, SVec)]) -> Vec<SVec> {
        let k = self.field();
        let nn = self.sigma.kdim();
        let sq = &self.coring.square;
        self.w
            .non_pivots()
            .into_iter()
            .map(|idx| {
                let (phi, x) = (SVec::unit(k, nn, idx / nn), SVec::unit(k, nn, idx % nn));
                let mut t = SVec::zero(sq.dim);
                for (fi, ei) in dual_basis {
                    t.add_assign(k, &sq.pure(&self.class(&phi, ei), &self.class(fi, &x)));
                }
                t
            })
            .collect()
    }
}

pub fn comatrix_coring(sigma: &Arc<FreeRightModule>, b: &Subalgebra) -> Result<ComatrixCoring> {
    sigma.check_subalgebra(b)?;
    let k = sigma.field();
    let nn = sigma.kdim();
    let w = sigma.balancing(&b.generators());
    let (carrier, proj) = sigma.ambient_bimodule().quotient(&w, &format!("Σ*⊗_{}Σ", b.label))?;
    let carrier = Arc::new(carrier);
    let square = TensorOverA::new(&carrier, &carrier)?;
    let label = format!("Σ*⊗_{{{}}}Σ", b.label);
    let counit: Vec<Vec<Scalar>> = w
        .non_pivots()
        .into_iter()
        .map(|idx| sigma.evaluate(&SVec::unit(k, nn, idx / nn), &SVec::unit(k, nn, idx % nn)))
        .collect();
    let placeholder = Coring::new(carrier.clone(), vec![SVec::zero(square.dim); carrier.dim], counit.clone(), &label)?;
    let mut cm = ComatrixCoring { sigma: sigma.clone(), b: b.clone(), w, proj, coring: Arc::new(placeholder) };
    let delta = cm.delta_with(&sigma.standard_dual_basis());
    let coring = Coring::new(carrier, delta, counit, &label)?;
    cm.coring = Arc::new(coring);
    Ok(cm)
}

/// Compares Δ computed with the dual basis {e_i* ∘ g⁻¹, g(e_i)} against the standard one.
pub fn dual_basis_independence_check(cm: &ComatrixCoring, g: &[Scalar]) -> Result<bool> {
    let sigma = &cm.sigma;
    let ginv = sigma.end_alg.inverse(g).ok_or(Error::SingularChangeOfBasis)?;
    let twisted: Vec<(SVec, SVec)> = (0..sigma.rank)
        .map(|i| (sigma.dual_end_act(&sigma.dual_basis_vec(i), &ginv), sigma.end_act(g, &sigma.basis_vec(i))))
        .collect();
    Ok(cm.delta_with(&twisted) == cm.coring.delta)
}

/// A right comodule structure on Σ over a coring C. `rho` holds ρ of each
/// k-basis vector of Σ in Σ⊗_A C coordinates (i, C), i.e. Σ_i e_i ⊗ c_i.
#[derive(Clone, Debug)]
pub struct Comodule {
    pub sigma: Arc<FreeRightModule>,
    pub coring: Arc<Coring>,
    pub rho: Vec<SVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleCheck {
    pub right_linear: bool,
    pub coassociative: bool,
    pub counital: bool,
}

impl ComoduleCheck {
    pub fn passed(&self) -> bool {
        self.right_linear && self.coassociative && self.counital
    }
}

impl Comodule {
    /// Extends ρ(e_j) given for the A-basis by ρ(e_j a) = ρ(e_j) a.
    pub fn from_basis_images(sigma: &Arc<FreeRightModule>, coring: &Arc<Coring>, images: &[SVec]) -> Result<Self> {
        if images.len() != sigma.rank {
            return Err(Error::DimensionMismatch("one coaction image per basis vector".into()));
        }
        let mut m = Comodule { sigma: sigma.clone(), coring: coring.clone(), rho: Vec::new() };
        let rho = images
            .iter()
            .flat_map(|img| (0..sigma.d()).map(|t| m.right_act_sc(img, &sigma.alg.basis(t))).collect::<Vec<_>>())
            .collect();
        m.rho = rho;
        Ok(m)
    }

    fn field(&self) -> &NumberField {
        self.sigma.field()
    }

    fn cdim(&self) -> usize {
        self.coring.dim()
    }

    pub fn block(&self, t: &SVec, i: usize) -> SVec {
        t.block_sparse(i * self.cdim(), self.cdim())
    }

    /// (Σ_i e_i ⊗ c_i) · a
    pub fn right_act_sc(&self, t: &SVec, a: &[Scalar]) -> SVec {
        let k = self.field();
        let cd = self.cdim();
        let mut out = SVec::zero(self.sigma.rank * cd);
        for i in t.nonzero_blocks(cd) {
            out.add_scaled_at(k, &self.coring.carrier.right_act(&self.block(t, i), a), &k.one(), i * cd);
        }
        out
    }

    /// x ⊗ c in Σ ⊗_A C.
    pub fn pure(&self, x: &SVec, c: &SVec) -> SVec {
        let k = self.field();
        let cd = self.cdim();
        let mut out = SVec::zero(self.sigma.rank * cd);
        for i in x.nonzero_blocks(self.sigma.d()) {
            let xi = self.sigma.coord(x, i);
            out.add_scaled_at(k, &self.coring.carrier.left_act(&xi, c), &k.one(), i * cd);
        }
        out
    }

    pub fn apply(&self, x: &SVec) -> SVec {
        let k = self.field();
        let mut out = SVec::zero(self.sigma.rank * self.cdim());
        for (&j, c) in &x.entries {
            out.add_scaled_at(k, &self.rho[j], c, 0);
        }
        out
    }

    pub fn check(&self) -> ComoduleCheck {
        let k = self.field();
        let c = &self.coring;
        let (n, d, cd) = (self.sigma.rank, self.sigma.d(), self.cdim());
        let r = c.square.rank();
        let mut right_linear = true;
        let mut coassociative = true;
        let mut counital = true;
        for j in 0..self.sigma.kdim() {
            let x = SVec::unit(k, self.sigma.kdim(), j);
            for s in 0..d {
                let a = self.sigma.alg.basis(s);
                right_linear &= self.apply(&self.sigma.right_act(&x, &a)) == self.right_act_sc(&self.rho[j], &a);
            }
            let rx = &self.rho[j];
            let mut lhs = SVec::zero(n * r * cd);
            let mut rhs = SVec::zero(n * r * cd);
            let mut back = SVec::zero(self.sigma.kdim());
            for i in rx.nonzero_blocks(cd) {
                let ci = self.block(rx, i);
                lhs.add_scaled_at(k, &c.apply_delta(&ci), &k.one(), i * r * cd);
                let rei = &self.rho[i * d];
                for jj in rei.nonzero_blocks(cd) {
                    rhs.add_scaled_at(k, &c.square.pure(&self.block(rei, jj), &ci), &k.one(), jj * r * cd);
                }
                back.add_assign(k, &self.sigma.right_act(&self.sigma.basis_vec(i), &c.apply_counit(&ci)));
            }
            coassociative &= lhs == rhs;
            counital &= back == x;
        }
        ComoduleCheck { right_linear, coassociative, counital }
    }

    /// The coaction (id ⊗ π)ρ over a quotient coring.
    pub fn corestrict(&self, q: &QuotientCoring) -> Comodule {
        let k = self.field();
        let (cd, qd) = (self.cdim(), q.coring.dim());
        let rho = self
            .rho
            .iter()
            .map(|t| {
                let mut out = SVec::zero(self.sigma.rank * qd);
                for i in t.nonzero_blocks(cd) {
                    out.add_scaled_at(k, &q.projection.apply(k, &self.block(t, i)), &k.one(), i * qd);
                }
                out
            })
            .collect();
        Comodule { sigma: self.sigma.clone(), coring: q.coring.clone(), rho }
    }
}

/// ρ(x) = Σ_i e_i ⊗ (e_i* ⊗ x).
pub fn canonical_coaction(cm: &ComatrixCoring) -> Comodule {
    let k = cm.field();
    let sigma = &cm.sigma;
    let cd = cm.coring.dim();
    let rho = (0..sigma.kdim())
        .map(|j| {
            let x = SVec::unit(k, sigma.kdim(), j);
            let mut out = SVec::zero(sigma.rank * cd);
            for i in 0..sigma.rank {
                out.add_scaled_at(k, &cm.class(&sigma.dual_basis_vec(i), &x), &k.one(), i * cd);
            }
            out
        })
        .collect();
    Comodule { sigma: sigma.clone(), coring: cm.coring.clone(), rho }
}

/// {f ∈ End(Σ_A) : (f ⊗ id)ρ = ρ f}, as a subalgebra of M_n(A).
pub fn comod_end(m: &Comodule) -> Result<Subalgebra> {
    let k = m.field();
    let sigma = &m.sigma;
    let (n, d, cd) = (sigma.rank, sigma.d(), m.cdim());
    let unknowns = n * n * d;
    let rows = n * n * cd;
    let mut cols = Vec::with_capacity(unknowns);
    for p in 0..n {
        for q in 0..n {
            for s in 0..d {
                let a = sigma.alg.basis(s);
                let mut v = SVec::zero(rows);
                for j in 0..n {
                    let rj = &m.rho[j * d];
                    // (E ⊗ id)ρ(e_j) = e_p ⊗ a_s c_{j,q}
                    let c = m.coring.carrier.left_act(&a, &m.block(rj, q));
                    v.add_scaled_at(k, &c, &k.one(), (j * n + p) * cd);
                    if q == j {
                        // ρ(E e_j) = ρ(e_p a_s)
                        let rp = &m.rho[p * d + s];
                        for i in rp.nonzero_blocks(cd) {
                            v.add_scaled_at(k, &m.block(rp, i), &k.from_int(-1), (j * n + i) * cd);
                        }
                    }
                }
                cols.push(v);
            }
        }
    }
    let mat = crate::coring::dense_cols(k, rows, &cols);
    let space = Subspace::span(k, unknowns, &mat.kernel_vectors(k));
    Subalgebra::from_space(&sigma.end_alg, space, &format!("End^{{{}}}(Σ)", m.coring.label))
}

/// can: Σ*⊗_T Σ -> C with T = comod_end(M), φ ⊗ x ↦ Σ φ(x₀) x₁.
#[derive(Clone, Debug)]
pub struct CanonicalMap {
    pub t: Subalgebra,
    pub source: ComatrixCoring,
    pub morphism: CoringMorphism,
    /// can vanishes on the balancing span of T.
    pub well_defined: bool,
    pub rank: usize,
}

impl CanonicalMap {
    pub fn domain_dim(&self) -> usize {
        self.source.coring.dim()
    }

    pub fn codomain_dim(&self) -> usize {
        self.morphism.target.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank == self.codomain_dim()
    }

    pub fn is_injective(&self) -> bool {
        self.rank == self.domain_dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.well_defined && self.is_surjective() && self.is_injective()
    }

    pub fn morphism_check(&self) -> MorphismCheck {
        self.morphism.check()
    }
}

pub fn canonical_map(m: &Comodule) -> Result<CanonicalMap> {
    let k = m.field().clone();
    let sigma = &m.sigma;
    let t = comod_end(m)?;
    let source = comatrix_coring(sigma, &t)?;
    let (d, nn) = (sigma.d(), sigma.kdim());
    // on the ambient basis a_s e_l* ⊗ e_m a_t: a_s · (l-th component of ρ(e_m a_t))
    let amb = |idx: usize| -> SVec {
        let (i, j) = (idx / nn, idx % nn);
        let (l, s) = (i / d, i % d);
        m.coring.carrier.left_act(&sigma.alg.basis(s), &m.block(&m.rho[j], l))
    };
    let full = SMat::from_cols(m.cdim(), (0..sigma.ambient_dim()).map(amb).collect());
    let well_defined = source.w.vectors().iter().all(|w| full.apply(&k, &SVec::from_dense(&k, w)).is_zero());
    let restricted = SMat::from_cols(m.cdim(), source.w.non_pivots().into_iter().map(|i| full.cols[i].clone()).collect());
    let rank = restricted.rank(&k);
    let morphism = CoringMorphism::new(&source.coring, &m.coring, restricted)?;
    Ok(CanonicalMap { t, source, morphism, well_defined, rank })
}

pub fn is_galois(m: &Comodule) -> Result<bool> {
    Ok(canonical_map(m)?.is_bijective())
}

#[cfg(test)]
mod tests;
