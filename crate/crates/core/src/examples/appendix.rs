use std::sync::Arc;

use super::{free_bimodule, free_gen, free_morphism, gaussian, trig, trig_coring, trivial_coring};
use crate::algebra::Subalgebra;
use crate::comatrix::{canonical_coaction, comatrix_coring, comod_end, ComatrixCoring, FreeRightModule};
use crate::coring::{Coring, CoringMorphism};
use crate::error::{Error, Result};
use crate::exactmath::{vector, SMat, SVec, Scalar};
use crate::galois::{conjugacy, ConjugacyCertificate, Verdict};

/// The division ring D and how it sits in M_n(Q(i)).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddingKind {
    Real,
    ComplexDiagonal,
    ComplexTwisted,
    Quaternion,
}

impl EmbeddingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EmbeddingKind::Real => "Q",
            EmbeddingKind::ComplexDiagonal => "Q(i) diagonal",
            EmbeddingKind::ComplexTwisted => "Q(i) twisted",
            EmbeddingKind::Quaternion => "H",
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            EmbeddingKind::Real => "appendix-R",
            EmbeddingKind::ComplexDiagonal => "appendix-C-diag",
            EmbeddingKind::ComplexTwisted => "appendix-C-twist",
            EmbeddingKind::Quaternion => "appendix-H",
        }
    }
}

/// Σ = Q(i)^n, B = D embedded in M_n(Q(i)), the coring Σ*⊗_B Σ, a model
/// coring and an explicit morphism from the model onto it.
#[derive(Clone, Debug)]
pub struct AppendixCase {
    pub kind: EmbeddingKind,
    pub n: usize,
    pub sigma: Arc<FreeRightModule>,
    /// distinguished generators of B (i for Q(i), ī and j̄ for H)
    pub generators: Vec<Vec<Scalar>>,
    pub b: Subalgebra,
    pub comatrix: ComatrixCoring,
    pub model: Arc<Coring>,
    pub witness: CoringMorphism,
}

fn setting(n: usize) -> Result<Arc<FreeRightModule>> {
    if n == 0 {
        return Err(Error::HypothesisViolated("n must be positive".into()));
    }
    Ok(FreeRightModule::new(&gaussian(), n))
}

/// The k-linear map model index c n² + p n + q ↦ img(c / d, c % d, p, q)·a_t.
fn tensor_witness(
    model: &Arc<Coring>,
    cm: &ComatrixCoring,
    n: usize,
    img: &dyn Fn(usize, usize, usize) -> SVec,
) -> Result<CoringMorphism> {
    let alg = model.alg();
    let d = alg.dim;
    let gens = model.dim() / (n * n * d);
    let mut cols = Vec::with_capacity(model.dim());
    for g in 0..gens {
        for t in 0..d {
            for p in 0..n {
                for q in 0..n {
                    cols.push(cm.coring.carrier.right_act(&img(g, p, q), &alg.basis(t)));
                }
            }
        }
    }
    CoringMorphism::new(model, &cm.coring, SMat::from_cols(cm.coring.dim(), cols))
}

/// D = Q: Σ*⊗_Q Σ ≅ [Z/2]Q(i) ⊗ M^c(n), z⁰_{pq} = v_p*⊗v_q, z¹_{pq} = −i v_p*⊗v_q i.
pub fn appendix_r(n: usize) -> Result<AppendixCase> {
    let sigma = setting(n)?;
    let a = sigma.alg.clone();
    let k = a.field.clone();
    let b = Subalgebra::scalars(&sigma.end_alg).with_label("Q");
    let comatrix = comatrix_coring(&sigma, &b)?;
    // [Z/2]Q(i): right basis [0], [1], i[0] = [1]i, i[1] = [0]i, both group-like
    let i = a.basis(1);
    let one = a.unit.clone();
    let act = |s: usize, p: usize| if s == 0 { vec![(p, one.clone())] } else { vec![(1 - p, i.clone())] };
    let carrier = free_bimodule(&a, 2, &act, "[Z/2]Q(i)")?;
    let g: Vec<SVec> = (0..2).map(|p| free_gen(&a, carrier.dim, p)).collect();
    let delta: Vec<Vec<(SVec, SVec)>> = g.iter().map(|x| vec![(x.clone(), x.clone())]).collect();
    let z2 = Coring::from_free_presentation(carrier, g, &delta, &[one.clone(), one.clone()], "[Z/2]Q(i)")?;
    let model = Arc::new(z2.tensor_comatrix_coalgebra(n)?);
    let minus_i = vector::neg(&k, &i);
    let img = |g: usize, p: usize, q: usize| {
        let (phi, x) = (sigma.dual_basis_vec(p), sigma.basis_vec(q));
        if g == 0 {
            comatrix.class(&phi, &x)
        } else {
            comatrix.class(&sigma.dual_left_act(&minus_i, &phi), &sigma.right_act(&x, &i))
        }
    };
    let witness = tensor_witness(&model, &comatrix, n, &img)?;
    Ok(AppendixCase { kind: EmbeddingKind::Real, n, sigma: sigma.clone(), generators: Vec::new(), b, comatrix, model, witness })
}

/// D = Q(i) embedded diagonally: Σ*⊗_B Σ = Σ*⊗_A Σ ≅ A ⊗ M^c(n).
pub fn appendix_c_diag(n: usize) -> Result<AppendixCase> {
    let sigma = setting(n)?;
    let a = sigma.alg.clone();
    let k = a.field.clone();
    let mut gen = vector::zero(&k, sigma.end_alg.dim);
    for l in 0..n {
        gen[(l * n + l) * a.dim + 1] = k.one();
    }
    let b = Subalgebra::closure(&sigma.end_alg, &[gen.clone()], "Q(i) diagonal");
    let comatrix = comatrix_coring(&sigma, &b)?;
    let model = Arc::new(trivial_coring(&a)?.tensor_comatrix_coalgebra(n)?);
    let img = |_: usize, p: usize, q: usize| comatrix.class(&sigma.dual_basis_vec(p), &sigma.basis_vec(q));
    let witness = tensor_witness(&model, &comatrix, n, &img)?;
    Ok(AppendixCase { kind: EmbeddingKind::ComplexDiagonal, n, sigma: sigma.clone(), generators: vec![gen], b, comatrix, model, witness })
}

/// D = Q(i) through ī = i Σ e_{l, n-l+1}: Σ*⊗_B Σ is the coring on v_pq with
/// i v_pq = v_{n-p+1, n-q+1} i, Δ v_pq = Σ v_pl ⊗ v_lq, ε(v_pq) = δ_pq.
pub fn appendix_c_twist(n: usize) -> Result<AppendixCase> {
    let sigma = setting(n)?;
    let a = sigma.alg.clone();
    let k = a.field.clone();
    let mut gen = vector::zero(&k, sigma.end_alg.dim);
    for l in 0..n {
        gen[(l * n + (n - 1 - l)) * a.dim + 1] = k.one();
    }
    let b = Subalgebra::closure(&sigma.end_alg, &[gen.clone()], "Q(i) twisted");
    let comatrix = comatrix_coring(&sigma, &b)?;
    let i = a.basis(1);
    let one = a.unit.clone();
    let act = |s: usize, pq: usize| {
        if s == 0 {
            vec![(pq, one.clone())]
        } else {
            let (p, q) = (pq / n, pq % n);
            vec![((n - 1 - p) * n + (n - 1 - q), i.clone())]
        }
    };
    let carrier = free_bimodule(&a, n * n, &act, "twisted M^c")?;
    let dim = carrier.dim;
    let v = |p: usize, q: usize| free_gen(&a, dim, p * n + q);
    let gens: Vec<SVec> = (0..n * n).map(|pq| v(pq / n, pq % n)).collect();
    let delta: Vec<Vec<(SVec, SVec)>> =
        (0..n * n).map(|pq| (0..n).map(|l| (v(pq / n, l), v(l, pq % n))).collect()).collect();
    let counit: Vec<Vec<Scalar>> = (0..n * n).map(|pq| if pq / n == pq % n { one.clone() } else { a.zero() }).collect();
    let model = Arc::new(Coring::from_free_presentation(carrier, gens, &delta, &counit, "twisted M^c")?);
    let images: Vec<SVec> =
        (0..n * n).map(|pq| comatrix.class(&sigma.dual_basis_vec(pq / n), &sigma.basis_vec(pq % n))).collect();
    let witness = free_morphism(&model, &comatrix.coring, &images)?;
    Ok(AppendixCase { kind: EmbeddingKind::ComplexTwisted, n, sigma: sigma.clone(), generators: vec![gen], b, comatrix, model, witness })
}

/// D = H for even n = 2m: ī = Σ (e_{2l-1,2l} − e_{2l,2l-1}), j̄ = i·diag(1, −1, ...),
/// and trig ⊗ M^c(m) ≅ Σ*⊗_H Σ by c⊗x_pq ↦ v_{2p}*⊗v_{2q}, s⊗x_pq ↦ v_{2p}*⊗v_{2q-1}.
pub fn appendix_h(n: usize) -> Result<AppendixCase> {
    if n % 2 == 1 {
        return Err(Error::OddRankForH(n));
    }
    let sigma = setting(n)?;
    let a = sigma.alg.clone();
    let k = a.field.clone();
    let d = a.dim;
    let mut ib = vector::zero(&k, sigma.end_alg.dim);
    let mut jb = vector::zero(&k, sigma.end_alg.dim);
    for l in 0..n / 2 {
        ib[(2 * l * n + 2 * l + 1) * d] = k.one();
        ib[((2 * l + 1) * n + 2 * l) * d] = k.from_int(-1);
    }
    for p in 0..n {
        jb[(p * n + p) * d + 1] = k.from_int(if p % 2 == 0 { 1 } else { -1 });
    }
    let b = Subalgebra::closure(&sigma.end_alg, &[ib.clone(), jb.clone()], "H");
    let comatrix = comatrix_coring(&sigma, &b)?;
    let m = n / 2;
    let model = Arc::new(trig_coring()?.tensor_comatrix_coalgebra(m)?);
    let img = |g: usize, p: usize, q: usize| {
        let x = if g == 0 { 2 * q + 1 } else { 2 * q };
        comatrix.class(&sigma.dual_basis_vec(2 * p + 1), &sigma.basis_vec(x))
    };
    let witness = tensor_witness(&model, &comatrix, m, &img)?;
    Ok(AppendixCase { kind: EmbeddingKind::Quaternion, n, sigma: sigma.clone(), generators: vec![ib, jb], b, comatrix, model, witness })
}

impl AppendixCase {
    pub fn build(kind: EmbeddingKind, n: usize) -> Result<Self> {
        match kind {
            EmbeddingKind::Real => appendix_r(n),
            EmbeddingKind::ComplexDiagonal => appendix_c_diag(n),
            EmbeddingKind::ComplexTwisted => appendix_c_twist(n),
            EmbeddingKind::Quaternion => appendix_h(n),
        }
    }

    pub fn witness_is_isomorphism(&self) -> bool {
        self.witness.check().is_isomorphism()
    }

    /// End(Σ) over the comatrix coring, which recovers B.
    pub fn end_dim(&self) -> Result<usize> {
        Ok(comod_end(&canonical_coaction(&self.comatrix))?.dim())
    }
}

/// One conjugacy class of embeddings and its representative coring.
#[derive(Clone, Debug)]
pub struct ClassEntry {
    pub kind: EmbeddingKind,
    /// embeddings found conjugate to the representative
    pub members: Vec<EmbeddingKind>,
    pub b_dim: usize,
    pub coring_dim: usize,
    pub coring_ok: bool,
    pub end_dim: usize,
    pub witness_rank: usize,
    pub witness_iso: bool,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub n: usize,
    pub classes: Vec<ClassEntry>,
    pub rejected: Vec<(EmbeddingKind, String)>,
    pub conjugacy: Vec<(EmbeddingKind, EmbeddingKind, ConjugacyCertificate)>,
}

impl Classification {
    pub fn passed(&self) -> bool {
        self.classes.iter().all(|c| c.coring_ok && c.witness_iso && c.end_dim == c.b_dim)
    }
}

pub const CLASSIFY_MAX_N: usize = 3;

/// Simple cosemisimple Q(i)/Q-corings with Σ of rank n, one per conjugacy
/// class of division subrings D ⊆ M_n(Q(i)).
pub fn classify(n: usize) -> Result<Classification> {
    if n == 0 || n > CLASSIFY_MAX_N {
        return Err(Error::Unsupported(format!("classification is implemented for 1 <= n <= {CLASSIFY_MAX_N}")));
    }
    let mut cases = vec![appendix_r(n)?, appendix_c_diag(n)?, appendix_c_twist(n)?];
    let mut rejected = Vec::new();
    match appendix_h(n) {
        Ok(h) => cases.push(h),
        Err(e @ Error::OddRankForH(_)) => rejected.push((EmbeddingKind::Quaternion, e.to_string())),
        Err(e) => return Err(e),
    }
    let (diag, twist) = (&cases[1], &cases[2]);
    let cert = conjugacy(&diag.sigma, &diag.b, &twist.b, &[(diag.generators[0].clone(), twist.generators[0].clone())])?;
    let merge = cert.verdict == Verdict::Conjugate && cert.witness_verified;
    let conj = vec![(EmbeddingKind::ComplexDiagonal, EmbeddingKind::ComplexTwisted, cert)];
    let mut classes: Vec<ClassEntry> = Vec::new();
    for case in &cases {
        if merge && case.kind == EmbeddingKind::ComplexTwisted {
            if let Some(c) = classes.iter_mut().find(|c| c.kind == EmbeddingKind::ComplexDiagonal) {
                c.members.push(case.kind);
            }
            continue;
        }
        let check = case.witness.check();
        classes.push(ClassEntry {
            kind: case.kind,
            members: vec![case.kind],
            b_dim: case.b.dim(),
            coring_dim: case.comatrix.coring.dim(),
            coring_ok: case.comatrix.coring.check().passed() && case.model.check().passed(),
            end_dim: case.end_dim()?,
            witness_rank: check.rank,
            witness_iso: check.is_isomorphism(),
        });
    }
    Ok(Classification { n, classes, rejected, conjugacy: conj })
}

/// Two conjugacy problems for quaternion subrings of M₂(Q(i)): the subring of
/// the trigonometric coring against its conjugate by [[1, 1], [0, 1]], and
/// the same subring under the automorphism ī ↦ −ī, j̄ ↦ j̄.
pub fn inner_twisted_quaternions() -> Result<Vec<(String, ConjugacyCertificate)>> {
    let t = trig()?;
    let s = &t.sigma.end_alg;
    let k = t.sigma.field().clone();
    let mut g0 = s.one();
    g0[t.sigma.d()] = k.one();
    let g0i = s.inverse(&g0).expect("unipotent");
    let conj = |x: &[Scalar]| s.mul(&s.mul(&g0, x), &g0i);
    let (ci, cj) = (conj(&t.i_bar), conj(&t.j_bar));
    let h2 = Subalgebra::closure(s, &[ci.clone(), cj.clone()], "H'");
    let first = conjugacy(&t.sigma, &t.quaternions, &h2, &[(t.i_bar.clone(), ci), (t.j_bar.clone(), cj)])?;
    let minus_i = vector::neg(&k, &t.i_bar);
    let second =
        conjugacy(&t.sigma, &t.quaternions, &t.quaternions, &[(t.i_bar.clone(), minus_i), (t.j_bar.clone(), t.j_bar.clone())])?;
    Ok(vec![("H vs g H g^-1".into(), first), ("H under i -> -i".into(), second)])
}
