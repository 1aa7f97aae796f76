//! The dual correspondence between A-subrings of End(_B Σ) and coideals of
//! Σ*⊗_B Σ, and the coring U* of an A-ring U.
//!
//! Elements of End_k(Σ) are stored as N×N matrices acting on k-coordinates of
//! Σ, composed as maps. End(_B Σ) is written on the right of Σ, so a subring
//! U ⊆ End(_B Σ) is the opposite of the matrix algebra V that stores it.

use std::sync::Arc;

use crate::algebra::Subalgebra;
use crate::comatrix::{canonical_map, CanonicalMap, ComatrixCoring, Comodule, FreeRightModule};
use crate::coring::{dual_ring, Bimodule, Coring, DualRing, RightBasis, Side, TensorOverA};
use crate::error::{Error, Result};
use crate::exactmath::{vector, Matrix, SMat, SVec, Scalar, Subspace};
use crate::galois::j_of;

fn as_matrix(sigma: &FreeRightModule, v: &[Scalar]) -> Matrix {
    Matrix::from_vec(sigma.kdim(), sigma.kdim(), v.to_vec())
}

/// Right multiplication x ↦ x a as a k-matrix.
pub fn right_mult(sigma: &FreeRightModule, a: &[Scalar]) -> Matrix {
    let k = sigma.field();
    let nn = sigma.kdim();
    let cols: Vec<Vec<Scalar>> = (0..nn).map(|j| sigma.right_act(&SVec::unit(k, nn, j), a).to_dense(k)).collect();
    Matrix::from_cols(k, nn, &cols)
}

/// {u ∈ End_k(Σ) : u m = m u for all m}.
pub fn commutant_k(sigma: &FreeRightModule, mats: &[Matrix], label: &str) -> Result<Subalgebra> {
    let endk = sigma.endk_alg();
    let elems: Vec<Vec<Scalar>> = mats.iter().map(|m| m.data.clone()).collect();
    Subalgebra::from_space(endk, endk.centralizer(&elems), label)
}

/// {f ∈ End(Σ_A) : f m = m f for all m}.
pub fn commutant_in_end(sigma: &FreeRightModule, mats: &[Matrix], label: &str) -> Result<Subalgebra> {
    let k = sigma.field();
    let s = &sigma.end_alg;
    let nn = sigma.kdim();
    let rows = nn * nn * mats.len();
    let cols: Vec<SVec> = (0..s.dim)
        .map(|u| {
            let f = sigma.k_matrix(&s.basis(u));
            let mut v = SVec::zero(rows);
            for (i, m) in mats.iter().enumerate() {
                let c = f.mul(k, m).sub(k, &m.mul(k, &f));
                v.add_scaled_at(k, &SVec::from_dense(k, &c.data), &k.one(), i * nn * nn);
            }
            v
        })
        .collect();
    let sys = crate::coring::dense_cols(k, rows, &cols);
    Subalgebra::from_space(s, Subspace::span(k, s.dim, &sys.kernel_vectors(k)), label)
}

fn k_matrices(sigma: &FreeRightModule, c: &Subalgebra) -> Vec<Matrix> {
    c.generators().iter().map(|g| sigma.k_matrix(g)).collect()
}

/// 𝒥*(C) = End(_C Σ), as a subalgebra of End_k(Σ).
pub fn j_star(sigma: &FreeRightModule, c: &Subalgebra) -> Result<Subalgebra> {
    commutant_k(sigma, &k_matrices(sigma, c), &format!("End({}Σ)", c.label))
}

/// ℛ*(U) = End(Σ_U), as a subalgebra of End(Σ_A).
pub fn r_star(sigma: &FreeRightModule, u: &Subalgebra) -> Result<Subalgebra> {
    let mats: Vec<Matrix> = u.generators().iter().map(|g| as_matrix(sigma, g)).collect();
    commutant_in_end(sigma, &mats, &format!("End(Σ_{})", u.label))
}

/// An A-ring U ⊆ End(_B Σ), stored as the matrix algebra V with U = V^op.
#[derive(Clone, Debug)]
pub struct ARing {
    pub sigma: Arc<FreeRightModule>,
    pub v: Subalgebra,
}

impl ARing {
    /// Checks that V contains the right multiplications by A.
    pub fn new(sigma: &Arc<FreeRightModule>, v: Subalgebra) -> Result<Self> {
        if !Arc::ptr_eq(&v.ambient, sigma.endk_alg()) && *v.ambient != **sigma.endk_alg() {
            return Err(Error::DimensionMismatch("A-ring must live in End_k(Σ)".into()));
        }
        for s in 0..sigma.d() {
            if !v.contains(&right_mult(sigma, &sigma.alg.basis(s)).data) {
                return Err(Error::NotAnAlgebra(format!("{} does not contain the image of A", v.label)));
            }
        }
        Ok(ARing { sigma: sigma.clone(), v })
    }

    pub fn dim(&self) -> usize {
        self.v.dim()
    }

    /// u * w in U, i.e. w ∘ u.
    fn mul(&self, u: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        self.v.ambient.mul(w, u)
    }

    fn coords(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.v.space.coords_unchecked(u)
    }

    /// U as an A-bimodule in the RREF basis of V: a·u = ι(a) * u, u·a = u * ι(a).
    pub fn bimodule(&self) -> Bimodule {
        let sigma = &self.sigma;
        let k = sigma.field();
        let basis = self.v.basis();
        let dim = basis.len();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for s in 0..sigma.d() {
            let ia = right_mult(sigma, &sigma.alg.basis(s)).data;
            left.push(SMat::from_cols(dim, basis.iter().map(|u| SVec::from_dense(k, &self.coords(&self.mul(&ia, u)))).collect()));
            right.push(SMat::from_cols(dim, basis.iter().map(|u| SVec::from_dense(k, &self.coords(&self.mul(u, &ia)))).collect()));
        }
        Bimodule::new_unchecked(&sigma.alg, dim, left, right, &self.v.label)
    }
}

/// The coring U* = Hom_A(U_A, A) with Δ(φ) = Σ φ u_α ⊗ u_α*, ε(φ) = φ(1).
/// An element φ is stored by its values φ(u_α) on a right A-basis {u_α}.
#[derive(Clone, Debug)]
pub struct UStarCoring {
    pub ring: ARing,
    pub basis: RightBasis,
    pub coring: Arc<Coring>,
}

impl UStarCoring {
    pub fn new(ring: &ARing) -> Result<Self> {
        let sigma = &ring.sigma;
        let k = sigma.field().clone();
        let alg = sigma.alg.clone();
        let d = alg.dim;
        let ub = ring.bimodule();
        let rb = ub.right_basis()?;
        let m = rb.rank();
        let to_elem = |c: &SVec| ring.v.space.combine(&k, &c.to_dense(&k));
        let gens: Vec<Vec<Scalar>> = rb.gens.iter().map(to_elem).collect();
        // c_γ(u) for an element of U
        let rcoords = |u: &[Scalar]| rb.decompose(&k, &SVec::from_dense(&k, &ring.coords(u)));
        // φ(u) from the values of φ
        let eval = |phi: &SVec, u: &[Scalar]| {
            let c = rcoords(u);
            let mut out = vector::zero(&k, d);
            for g in phi.nonzero_blocks(d) {
                let p = alg.mul(&phi.block(&k, g * d, d), &c.block(&k, g * d, d));
                out = vector::add(&k, &out, &p);
            }
            out
        };
        let values = |f: &dyn Fn(&[Scalar]) -> Vec<Scalar>| {
            let mut v = SVec::zero(m * d);
            for (b, ub) in gens.iter().enumerate() {
                v.add_scaled_at(&k, &SVec::from_dense(&k, &f(ub)), &k.one(), b * d);
            }
            v
        };
        let dim = m * d;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for s in 0..d {
            let a = alg.basis(s);
            let ia = right_mult(sigma, &a).data;
            let mut lc = Vec::with_capacity(dim);
            let mut rc = Vec::with_capacity(dim);
            for j in 0..dim {
                let phi = SVec::unit(&k, dim, j);
                lc.push(values(&|u| alg.mul(&a, &eval(&phi, u))));
                rc.push(values(&|u| eval(&phi, &ring.mul(&ia, u))));
            }
            left.push(SMat::from_cols(dim, lc));
            right.push(SMat::from_cols(dim, rc));
        }
        let carrier = Arc::new(Bimodule::new(&alg, dim, left, right, &format!("{}*", ring.v.label))?);
        let square = TensorOverA::new(&carrier, &carrier)?;
        let unit = SVec::from_dense(&k, &alg.unit);
        let dual_gen = |a: usize| {
            let mut v = SVec::zero(dim);
            v.add_scaled_at(&k, &unit, &k.one(), a * d);
            v
        };
        let one = ring.v.ambient.one();
        let mut delta = Vec::with_capacity(dim);
        let mut counit = Vec::with_capacity(dim);
        for j in 0..dim {
            let phi = SVec::unit(&k, dim, j);
            let mut t = SVec::zero(square.dim);
            for (a, ua) in gens.iter().enumerate() {
                let phiu = values(&|u| eval(&phi, &ring.mul(ua, u)));
                t.add_assign(&k, &square.pure(&phiu, &dual_gen(a)));
            }
            delta.push(t);
            counit.push(eval(&phi, &one));
        }
        let coring = Coring::new(carrier, delta, counit, &format!("{}*", ring.v.label))?;
        Ok(UStarCoring { ring: ring.clone(), basis: rb, coring: Arc::new(coring) })
    }

    /// Σ as a right U*-comodule: ρ(x) = Σ_α x u_α ⊗ u_α*.
    pub fn comodule(&self) -> Comodule {
        let sigma = &self.ring.sigma;
        let k = sigma.field();
        let (n, d, nn) = (sigma.rank, sigma.d(), sigma.kdim());
        let cd = self.coring.dim();
        let gens: Vec<Matrix> = self
            .basis
            .gens
            .iter()
            .map(|c| as_matrix(sigma, &self.ring.v.space.combine(k, &c.to_dense(k))))
            .collect();
        let rho = (0..nn)
            .map(|j| {
                let mut out = SVec::zero(n * cd);
                for (a, u) in gens.iter().enumerate() {
                    let xu = u.col(j);
                    for i in 0..n {
                        let y = &xu[i * d..(i + 1) * d];
                        if vector::is_zero(k, y) {
                            continue;
                        }
                        let v = SVec::from_dense(k, y);
                        out.add_scaled_at(k, &v, &k.one(), i * cd + a * d);
                    }
                }
                out
            })
            .collect();
        Comodule { sigma: sigma.clone(), coring: self.coring.clone(), rho }
    }

    /// can: Σ*⊗_C Σ -> U* with C = End(Σ_U), φ ⊗ x ↦ Σ φ(x u_α) u_α*.
    pub fn canonical_map(&self) -> Result<CanonicalMap> {
        canonical_map(&self.comodule())
    }
}

/// The isomorphism between the left dual of Σ*⊗_B Σ and End(_B Σ),
/// f ↦ u_f with u_f(x) = Σ e_i f(e_i* ⊗ x).
#[derive(Clone, Debug)]
pub struct DualIso {
    pub dual: DualRing,
    pub images: Vec<Matrix>,
    pub end_b: Subalgebra,
    pub dual_dim: usize,
    pub end_dim: usize,
    pub bijective: bool,
    /// u_{f*g} = u_f ∘ u_g on all basis pairs
    pub multiplicative: bool,
    pub unital: bool,
}

impl DualIso {
    pub fn passed(&self) -> bool {
        self.bijective && self.multiplicative && self.unital
    }
}

pub fn dual_iso_end(cm: &ComatrixCoring) -> Result<DualIso> {
    let sigma = &cm.sigma;
    let k = sigma.field();
    let (n, d, nn) = (sigma.rank, sigma.d(), sigma.kdim());
    let dual = dual_ring(&cm.coring, Side::Left)?;
    let apply = |f: &Matrix, c: &SVec| {
        let mut out = vector::zero(k, d);
        for (&j, x) in &c.entries {
            for (r, o) in out.iter_mut().enumerate() {
                k.fma(o, f.get(r, j), x);
            }
        }
        out
    };
    let images: Vec<Matrix> = dual
        .functionals
        .iter()
        .map(|f| {
            let cols: Vec<Vec<Scalar>> = (0..nn)
                .map(|j| {
                    let x = SVec::unit(k, nn, j);
                    let mut col = vector::zero(k, nn);
                    for i in 0..n {
                        let v = apply(f, &cm.class(&sigma.dual_basis_vec(i), &x));
                        col[i * d..(i + 1) * d].clone_from_slice(&v);
                    }
                    col
                })
                .collect();
            Matrix::from_cols(k, nn, &cols)
        })
        .collect();
    let bmats: Vec<Matrix> = cm.b.generators().iter().map(|g| sigma.k_matrix(g)).collect();
    let end_b = commutant_k(sigma, &bmats, &format!("End({}Σ)", cm.b.label))?;
    let flat: Vec<Vec<Scalar>> = images.iter().map(|m| m.data.clone()).collect();
    let span = Subspace::span(k, nn * nn, &flat);
    let bijective = span.dim() == images.len() && span == end_b.space;
    let image_of = |c: &[Scalar]| {
        let mut m = Matrix::zeros(k, nn, nn);
        for (x, im) in c.iter().zip(&images) {
            if !k.is_zero(x) {
                m = m.add(k, &im.scale(k, x));
            }
        }
        m
    };
    let alg = &dual.algebra;
    let mut multiplicative = true;
    for a in 0..alg.dim {
        for b in 0..alg.dim {
            let prod = alg.mul(&alg.basis(a), &alg.basis(b));
            multiplicative &= image_of(&prod) == images[a].mul(k, &images[b]);
        }
    }
    let unital = image_of(&alg.unit) == Matrix::identity(k, nn);
    Ok(DualIso { dual_dim: alg.dim, end_dim: end_b.dim(), dual, images, end_b, bijective, multiplicative, unital })
}

/// f_u(φ ⊗ x) = φ(u(x)) on the carrier basis of Σ*⊗_B Σ.
fn functional_of(cm: &ComatrixCoring, u: &Matrix) -> Vec<Vec<Scalar>> {
    let sigma = &cm.sigma;
    let k = sigma.field();
    let nn = sigma.kdim();
    cm.w
        .non_pivots()
        .into_iter()
        .map(|idx| {
            let (i, j) = (idx / nn, idx % nn);
            let ux = SVec::from_dense(k, &u.col(j));
            sigma.evaluate(&SVec::unit(k, nn, i), &ux)
        })
        .collect()
}

/// ℛ′(J) = {u ∈ End(_B Σ) : f_u(J) = 0}.
pub fn r_prime(cm: &ComatrixCoring, j: &Subspace) -> Result<Subalgebra> {
    let sigma = &cm.sigma;
    let k = sigma.field();
    let d = sigma.d();
    let bmats: Vec<Matrix> = cm.b.generators().iter().map(|g| sigma.k_matrix(g)).collect();
    let end_b = commutant_k(sigma, &bmats, "E")?;
    let basis = end_b.basis();
    let jv = j.vectors();
    let rows = jv.len() * d;
    let cols: Vec<SVec> = basis
        .iter()
        .map(|u| {
            let f = functional_of(cm, &as_matrix(sigma, u));
            let mut v = SVec::zero(rows);
            for (r, w) in jv.iter().enumerate() {
                let mut acc = vector::zero(k, d);
                for (x, fx) in w.iter().zip(&f) {
                    if !k.is_zero(x) {
                        vector::axpy(k, &mut acc, x, fx);
                    }
                }
                v.add_scaled_at(k, &SVec::from_dense(k, &acc), &k.one(), r * d);
            }
            v
        })
        .collect();
    let sys = crate::coring::dense_cols(k, rows, &cols);
    let vecs: Vec<Vec<Scalar>> = sys.kernel_vectors(k).iter().map(|c| end_b.space.combine(k, c)).collect();
    let endk = sigma.endk_alg();
    Subalgebra::from_space(endk, Subspace::span(k, endk.dim, &vecs), "R'(J)")
}

/// 𝒥′(U) = 𝒥(End(Σ_U)).
pub fn j_prime(cm: &ComatrixCoring, u: &Subalgebra) -> Result<Subspace> {
    let c = r_star(&cm.sigma, u)?;
    j_of(cm, &c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RPrimeJPrime {
    pub equals_double_commutant: bool,
    pub contains_u: bool,
}

/// ℛ′𝒥′(U) = End(_{End(Σ_U)} Σ) and U ⊆ ℛ′𝒥′(U).
pub fn r_prime_j_prime_property(cm: &ComatrixCoring, u: &Subalgebra) -> Result<RPrimeJPrime> {
    let rj = r_prime(cm, &j_prime(cm, u)?)?;
    let dc = j_star(&cm.sigma, &r_star(&cm.sigma, u)?)?;
    Ok(RPrimeJPrime { equals_double_commutant: rj == dc, contains_u: u.is_subalgebra_of(&rj) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JbEntry {
    pub name: String,
    pub c_dim: usize,
    pub u_dim: usize,
    pub u_simple_artinian: bool,
    pub r_j_equals_c: bool,
    pub j_r_equals_u: bool,
}

impl JbEntry {
    pub fn passed(&self) -> bool {
        self.u_simple_artinian && self.r_j_equals_c && self.j_r_equals_u
    }
}

/// ℛ*𝒥*(C) = C and 𝒥*ℛ*(U) = U for U = 𝒥*(C).
pub fn verify_theorem_jb(sigma: &Arc<FreeRightModule>, lattice: &[(String, Subalgebra)]) -> Result<Vec<JbEntry>> {
    lattice
        .iter()
        .map(|(name, c)| {
            let u = j_star(sigma, c)?;
            let rc = r_star(sigma, &u)?;
            let ju = j_star(sigma, &rc)?;
            Ok(JbEntry {
                name: name.clone(),
                c_dim: c.dim(),
                u_dim: u.dim(),
                u_simple_artinian: u.is_simple_artinian()?.simple,
                r_j_equals_c: rc == *c,
                j_r_equals_u: ju == u,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests;
