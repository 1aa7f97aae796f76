use std::sync::Arc;

use crate::algebra::{FinAlgebra, Subalgebra};
use crate::comatrix::FreeRightModule;
use crate::error::{Error, Result};
use crate::exactmath::{vector, MPoly, PolyMatrix, SVec, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Conjugate,
    NotConjugate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Conjugate => "conjugate",
            Verdict::NotConjugate => "not-conjugate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyCertificate {
    pub verdict: Verdict,
    /// dim of {g : g c = ι(c) g}
    pub intertwiner_dim: usize,
    /// Some(true) when the generic intertwiner has identically zero determinant.
    /// None when a witness was found without expanding the determinant.
    pub det_is_zero: Option<bool>,
    pub witness: Option<Vec<Scalar>>,
    pub witness_verified: bool,
    pub obstruction: Option<String>,
}

/// Checks that c_i ↦ c'_i extends to an algebra isomorphism C -> C′: the
/// generators must generate C and C′, and the pairs (c_i, c'_i) must generate a
/// subalgebra of M_{2n}(A) of the same dimension.
fn validate_iota(sigma: &FreeRightModule, c: &Subalgebra, c2: &Subalgebra, iota: &[(Vec<Scalar>, Vec<Scalar>)]) -> Result<()> {
    let src: Vec<Vec<Scalar>> = iota.iter().map(|p| p.0.clone()).collect();
    let dst: Vec<Vec<Scalar>> = iota.iter().map(|p| p.1.clone()).collect();
    if Subalgebra::closure(&sigma.end_alg, &src, "") != *c || Subalgebra::closure(&sigma.end_alg, &dst, "") != *c2 {
        return Err(Error::NoIsomorphismSupplied("generators do not generate the subrings".into()));
    }
    let k = sigma.field();
    let (n, d) = (sigma.rank, sigma.d());
    let big = Arc::new(FinAlgebra::matrix_algebra(&sigma.alg, 2 * n));
    let pairs: Vec<Vec<Scalar>> = iota
        .iter()
        .map(|(x, y)| {
            let mut v = vector::zero(k, big.dim);
            for p in 0..n {
                for q in 0..n {
                    for s in 0..d {
                        v[(p * 2 * n + q) * d + s] = x[(p * n + q) * d + s].clone();
                        v[((n + p) * 2 * n + n + q) * d + s] = y[(p * n + q) * d + s].clone();
                    }
                }
            }
            v
        })
        .collect();
    let graph = Subalgebra::closure(&big, &pairs, "graph");
    if graph.dim() != c.dim() || c.dim() != c2.dim() {
        return Err(Error::NoIsomorphismSupplied(format!(
            "the assignment does not extend to an isomorphism ({} vs {} vs {})",
            c.dim(),
            c2.dim(),
            graph.dim()
        )));
    }
    Ok(())
}

/// Deterministic sample points tried before expanding the determinant.
fn sample_points(k: &crate::exactmath::NumberField, m: usize) -> Vec<Vec<Scalar>> {
    let mut pts = vec![vec![k.one(); m], (0..m).map(|i| k.from_int(i as i64 + 1)).collect()];
    for seed in 1..=8i64 {
        pts.push((0..m).map(|i| k.from_int(((i as i64 + 1) * (seed * 7 + 3)) % 11 - 5)).collect());
    }
    pts
}

/// A point where a nonzero polynomial does not vanish, chosen variable by
/// variable from 0, 1, 2, ...
fn nonvanishing_point(k: &crate::exactmath::NumberField, p: &MPoly, m: usize) -> Vec<Scalar> {
    let mut cur = p.clone();
    let mut point = Vec::with_capacity(m);
    for var in 0..m {
        let mut v = 0i64;
        loop {
            let s = cur.substitute(k, var, &k.from_int(v));
            if !s.is_zero() {
                cur = s;
                point.push(k.from_int(v));
                break;
            }
            v += 1;
        }
    }
    point
}

/// Decides whether C′ = g C g⁻¹ for some unit g of End(Σ_A) realizing the
/// identification ι given on generators.
pub fn conjugacy(
    sigma: &FreeRightModule,
    c: &Subalgebra,
    c2: &Subalgebra,
    iota: &[(Vec<Scalar>, Vec<Scalar>)],
) -> Result<ConjugacyCertificate> {
    validate_iota(sigma, c, c2, iota)?;
    let k = sigma.field();
    let s = &sigma.end_alg;
    let dim = s.dim;
    let mut cols = Vec::with_capacity(dim);
    for u in 0..dim {
        let e = s.basis(u);
        let mut v = SVec::zero(dim * iota.len());
        for (idx, (x, y)) in iota.iter().enumerate() {
            let diff = vector::sub(k, &s.mul(&e, x), &s.mul(y, &e));
            v.add_scaled_at(k, &SVec::from_dense(k, &diff), &k.one(), idx * dim);
        }
        cols.push(v);
    }
    let sys = crate::coring::dense_cols(k, dim * iota.len(), &cols);
    let basis = sys.kernel_vectors(k);
    let m = basis.len();
    if m == 0 {
        return Ok(ConjugacyCertificate {
            verdict: Verdict::NotConjugate,
            intertwiner_dim: 0,
            det_is_zero: Some(true),
            witness: None,
            witness_verified: false,
            obstruction: Some("no nonzero intertwiner".into()),
        });
    }
    let mats: Vec<_> = basis.iter().map(|g| sigma.k_matrix(g)).collect();
    let combine = |t: &[Scalar]| {
        let mut g = vector::zero(k, dim);
        for (ti, b) in t.iter().zip(&basis) {
            vector::axpy(k, &mut g, ti, b);
        }
        g
    };
    let mut det_is_zero = None;
    let mut point = sample_points(k, m).into_iter().find(|t| s.inverse(&combine(t)).is_some());
    if point.is_none() {
        let nn = sigma.kdim();
        let mut pm = PolyMatrix::zeros(nn, nn, m);
        for r in 0..nn {
            for col in 0..nn {
                let mut e = MPoly::zero(m);
                for (i, mat) in mats.iter().enumerate() {
                    let x = mat.get(r, col);
                    if !k.is_zero(x) {
                        e = e.add(k, &MPoly::var(k, i, m).scale(k, x));
                    }
                }
                pm.set(r, col, e);
            }
        }
        let det = pm.det(k);
        det_is_zero = Some(det.is_zero());
        if !det.is_zero() {
            point = Some(nonvanishing_point(k, &det, m));
        }
    }
    let Some(t) = point else {
        return Ok(ConjugacyCertificate {
            verdict: Verdict::NotConjugate,
            intertwiner_dim: m,
            det_is_zero,
            witness: None,
            witness_verified: false,
            obstruction: Some(format!("the generic intertwiner in {m} parameters has zero determinant")),
        });
    };
    let g = combine(&t);
    let witness_verified = verify_witness(sigma, c, c2, iota, &g);
    Ok(ConjugacyCertificate {
        verdict: Verdict::Conjugate,
        intertwiner_dim: m,
        det_is_zero,
        witness: Some(g),
        witness_verified,
        obstruction: None,
    })
}

/// g c g⁻¹ = ι(c) on generators and g C g⁻¹ = C′ as subspaces.
pub fn verify_witness(
    sigma: &FreeRightModule,
    c: &Subalgebra,
    c2: &Subalgebra,
    iota: &[(Vec<Scalar>, Vec<Scalar>)],
    g: &[Scalar],
) -> bool {
    let s = &sigma.end_alg;
    let k = sigma.field();
    let Some(gi) = s.inverse(g) else { return false };
    let conj = |x: &[Scalar]| s.mul(&s.mul(g, x), &gi);
    if !iota.iter().all(|(x, y)| conj(x) == *y) {
        return false;
    }
    let image: Vec<Vec<Scalar>> = c.basis().iter().map(|x| conj(x)).collect();
    Subspace::span(k, s.dim, &image) == c2.space
}
