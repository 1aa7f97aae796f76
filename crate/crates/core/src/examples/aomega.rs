use std::sync::Arc;

use super::{free_morphism, sweedler_coring};
use crate::algebra::{FinAlgebra, Subalgebra};
use crate::comatrix::{comatrix_coring, ComatrixCoring, FreeRightModule};
use crate::coring::{counit_kernel, is_grouplike, quotient_coring, Coring, CoringMorphism, QuotientCoring};
use crate::error::{Error, Result};
use crate::exactmath::{vector, Echelon, NumberField, SVec, Scalar, Subspace};
use crate::galois::{conjugacy, j_of, ConjugacyCertificate};

/// Intermediate rings k ⊆ C ⊆ M_n(C(α)), in lattice order.
pub const EXTENSIONS: &[&str] = &["k", "C(alpha)", "C(beta)", "A_omega", "M_n(k)", "S"];

/// Σ = A^n over A = k[x]/(xⁿ − α), with X = Σ ω^{l-1} x e_ll and
/// Y = Σ e_{l,l+1} + β e_{n,1} in End(Σ_A) = M_n(A), and B = k.
#[derive(Clone, Debug)]
pub struct AOmega {
    pub n: usize,
    pub field: NumberField,
    pub omega: Scalar,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub alg: Arc<FinAlgebra>,
    pub sigma: Arc<FreeRightModule>,
    pub base: ComatrixCoring,
    pub x_mat: Vec<Scalar>,
    pub y_mat: Vec<Scalar>,
    /// X and Y with x and β replaced by 1; they generate M_n(k).
    pub x0: Vec<Scalar>,
    pub y0: Vec<Scalar>,
    pub extensions: Vec<(String, Subalgebra)>,
}

/// Generators of a coideal as listed for an extension, and their right span.
#[derive(Clone, Debug)]
pub struct ListedCoideal {
    pub name: String,
    pub generators: Vec<SVec>,
    pub span: Subspace,
    pub note: Option<&'static str>,
}

fn is_primitive_root(k: &NumberField, w: &Scalar, n: usize) -> bool {
    k.pow(w, n as u64) == k.one() && (1..n).all(|j| k.pow(w, j as u64) != k.one())
}

fn check_irreducible(k: &NumberField, n: usize, c: &Scalar, name: &str) -> Result<()> {
    let mut p = vec![k.neg(c)];
    p.extend((1..n).map(|_| k.zero()));
    p.push(k.one());
    match NumberField::extend(k, p, name) {
        Ok(_) => Ok(()),
        Err(Error::ReduciblePolynomial(_)) => Err(Error::HypothesisViolated(format!(
            "{name}: t^{n} - {} is reducible over {}",
            k.display(c),
            k.label()
        ))),
        Err(e) => Err(e),
    }
}

/// Builds the instance after checking that ω is a primitive n-th root of
/// unity and that xⁿ − α and yⁿ − β are irreducible over k.
pub fn aomega(n: usize, k: &NumberField, omega: &Scalar, alpha: &Scalar, beta: &Scalar) -> Result<AOmega> {
    if n < 2 {
        return Err(Error::HypothesisViolated("n must be at least 2".into()));
    }
    check_irreducible(k, n, alpha, "C(alpha)")?;
    check_irreducible(k, n, beta, "C(beta)")?;
    aomega_relaxed(n, k, omega, alpha, beta)
}

/// As [`aomega`] without the irreducibility hypotheses, so that A may be a
/// product of fields (α = 1).
pub fn aomega_relaxed(n: usize, k: &NumberField, omega: &Scalar, alpha: &Scalar, beta: &Scalar) -> Result<AOmega> {
    if n < 2 {
        return Err(Error::HypothesisViolated("n must be at least 2".into()));
    }
    if !is_primitive_root(k, omega, n) {
        return Err(Error::HypothesisViolated(format!("{} is not a primitive {n}-th root of unity", k.display(omega))));
    }
    if k.is_zero(alpha) || k.is_zero(beta) {
        return Err(Error::HypothesisViolated("α and β must be nonzero".into()));
    }
    let mut p = vec![k.neg(alpha)];
    p.extend((1..n).map(|_| k.zero()));
    p.push(k.one());
    let alg = Arc::new(FinAlgebra::poly_quotient(k, &p, "C(alpha)")?);
    let sigma = FreeRightModule::new(&alg, n);
    let d = alg.dim;
    let dim = sigma.end_alg.dim;
    let idx = |p: usize, q: usize, s: usize| (p * n + q) * d + s;
    let mut x_mat = vector::zero(k, dim);
    let mut x0 = vector::zero(k, dim);
    let mut y_mat = vector::zero(k, dim);
    let mut y0 = vector::zero(k, dim);
    for l in 0..n {
        let w = k.pow(omega, l as u64);
        x_mat[idx(l, l, 1)] = w.clone();
        x0[idx(l, l, 0)] = w;
        if l + 1 < n {
            y_mat[idx(l, l + 1, 0)] = k.one();
            y0[idx(l, l + 1, 0)] = k.one();
        }
    }
    y_mat[idx(n - 1, 0, 0)] = beta.clone();
    y0[idx(n - 1, 0, 0)] = k.one();
    let s = &sigma.end_alg;
    let extensions = vec![
        ("k".to_string(), Subalgebra::scalars(s).with_label("k")),
        ("C(alpha)".to_string(), Subalgebra::closure(s, &[x_mat.clone()], "C(alpha)")),
        ("C(beta)".to_string(), Subalgebra::closure(s, &[y_mat.clone()], "C(beta)")),
        ("A_omega".to_string(), Subalgebra::closure(s, &[x_mat.clone(), y_mat.clone()], "A_omega")),
        ("M_n(k)".to_string(), Subalgebra::closure(s, &[x0.clone(), y0.clone()], "M_n(k)")),
        ("S".to_string(), Subalgebra::whole(s).with_label("S")),
    ];
    let base = comatrix_coring(&sigma, &extensions[0].1)?;
    Ok(AOmega {
        n,
        field: k.clone(),
        omega: omega.clone(),
        alpha: alpha.clone(),
        beta: beta.clone(),
        alg,
        sigma,
        base,
        x_mat,
        y_mat,
        x0,
        y0,
        extensions,
    })
}

impl AOmega {
    pub fn label(&self) -> String {
        let k = &self.field;
        format!(
            "aomega(n={}, k={}, omega={}, alpha={}, beta={})",
            self.n,
            k.label(),
            k.display(&self.omega),
            k.display(&self.alpha),
            k.display(&self.beta)
        )
    }

    pub fn extension(&self, name: &str) -> Result<&Subalgebra> {
        self.extensions
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c)
            .ok_or_else(|| Error::UnknownExtension(name.to_string()))
    }

    fn x_pow(&self, e: usize) -> Vec<Scalar> {
        self.alg.pow(&self.alg.basis(1), e)
    }

    /// z^i_{l,m} = α⁻¹ x^{n-i} e_l* ⊗ e_m x^i for 1 ≤ l, m ≤ n and 0 ≤ i ≤ n,
    /// with z^0 = z^n, in carrier coordinates.
    pub fn z(&self, i: usize, l: usize, m: usize) -> SVec {
        let k = &self.field;
        let i = if i == 0 { self.n } else { i };
        let sigma = &self.sigma;
        let phi = sigma.dual_left_act(&self.x_pow(self.n - i), &sigma.dual_basis_vec(l - 1));
        let x = sigma.right_act(&sigma.basis_vec(m - 1), &self.x_pow(i));
        let inv = k.inv(&self.alpha).expect("α is nonzero");
        self.base.class(&phi, &x).scale(k, &inv)
    }

    fn omega_pow(&self, e: i64) -> Scalar {
        let n = self.n as i64;
        self.field.pow(&self.omega, e.rem_euclid(n) as u64)
    }

    fn c_alpha_gens(&self, upto: usize) -> Vec<SVec> {
        let k = &self.field;
        let n = self.n;
        let mut out = Vec::new();
        for i in 1..=upto {
            for l in 1..=n {
                for m in 1..=n {
                    let w = self.omega_pow(i as i64 * (m as i64 - l as i64));
                    out.push(self.z(n, l, m).sub(k, &self.z(i, l, m).scale(k, &w)));
                }
            }
        }
        out
    }

    fn c_beta_gens(&self) -> Vec<SVec> {
        let k = &self.field;
        let n = self.n;
        let binv = k.inv(&self.beta).expect("β is nonzero");
        let mut out = Vec::new();
        for i in 1..=n {
            for l in 1..=n {
                for m in 1..=n {
                    let g = if l < m {
                        self.z(i, l, m).sub(k, &self.z(i, n - (m - l) + 1, 1).scale(k, &binv))
                    } else {
                        self.z(i, l, m).sub(k, &self.z(i, l - m + 1, 1))
                    };
                    out.push(g);
                }
            }
        }
        out
    }

    fn mnk_gens(&self) -> Vec<SVec> {
        let k = &self.field;
        let n = self.n;
        let mut out = Vec::new();
        for i in 1..=n {
            for l in 1..=n {
                for m in 1..=n {
                    if l != m {
                        out.push(self.z(i, l, m));
                    }
                }
                out.push(self.z(i, 1, 1).sub(k, &self.z(i, l, l)));
            }
        }
        out
    }

    /// The coideal attached to an extension by its published generator list.
    pub fn listed_coideal(&self, name: &str) -> Result<ListedCoideal> {
        let c = &self.base.coring;
        let k = &self.field;
        let (generators, note) = match name {
            "k" => (Vec::new(), None),
            "C(alpha)" => (self.c_alpha_gens(self.n - 1), Some("i = 1, ..., n-1; the i = n generator vanishes")),
            "C(beta)" => (self.c_beta_gens(), None),
            "A_omega" => {
                let mut g = self.c_alpha_gens(self.n);
                g.extend(self.c_beta_gens());
                (g, None)
            }
            "M_n(k)" => (self.mnk_gens(), None),
            "S" => {
                let span = counit_kernel(c);
                let generators = span.vectors().iter().map(|v| SVec::from_dense(k, v)).collect();
                return Ok(ListedCoideal { name: name.into(), generators, span, note: Some("Ker(ε)") });
            }
            other => return Err(Error::UnknownExtension(other.to_string())),
        };
        let mut ech = Echelon::new(c.dim());
        for g in &generators {
            for s in 0..self.alg.dim {
                ech.insert(k, c.carrier.right_act(g, &self.alg.basis(s)).to_dense(k));
            }
        }
        Ok(ListedCoideal { name: name.into(), generators, span: ech.into_subspace(k), note })
    }

    /// X v_j = ω^{j-1} v_j x, v_j* X = ω^{j-1} x v_j*, Y v_1 = β v_n,
    /// Y v_j = v_{j-1} and v_j* Y = v_{j+1}*, v_n* Y = β v_1*.
    pub fn eqaction_check(&self) -> bool {
        let s = &self.sigma;
        let k = &self.field;
        let n = self.n;
        let x = self.alg.basis(1);
        let mut ok = true;
        for j in 0..n {
            let w = k.pow(&self.omega, j as u64);
            let wx = vector::scale(k, &x, &w);
            ok &= s.end_act(&self.x_mat, &s.basis_vec(j)) == s.right_act(&s.basis_vec(j), &wx);
            ok &= s.dual_end_act(&s.dual_basis_vec(j), &self.x_mat) == s.dual_left_act(&wx, &s.dual_basis_vec(j));
            let yv = s.end_act(&self.y_mat, &s.basis_vec(j));
            let expected = if j == 0 { s.basis_vec(n - 1).scale(k, &self.beta) } else { s.basis_vec(j - 1) };
            ok &= yv == expected;
            let vy = s.dual_end_act(&s.dual_basis_vec(j), &self.y_mat);
            let expected = if j + 1 < n { s.dual_basis_vec(j + 1) } else { s.dual_basis_vec(0).scale(k, &self.beta) };
            ok &= vy == expected;
        }
        ok
    }

    /// x · Id, generating the diagonal copy of C(α).
    pub fn x_identity(&self) -> Vec<Scalar> {
        let k = &self.field;
        let d = self.alg.dim;
        let mut v = vector::zero(k, self.sigma.end_alg.dim);
        for l in 0..self.n {
            v[(l * self.n + l) * d + 1] = k.one();
        }
        v
    }

    /// The twisted embedding x ↦ X against the diagonal one x ↦ x·Id.
    pub fn c_alpha_conjugacy(&self) -> Result<ConjugacyCertificate> {
        let diag = Subalgebra::closure(&self.sigma.end_alg, &[self.x_identity()], "C(alpha) diagonal");
        let twisted = self.extension("C(alpha)")?;
        conjugacy(&self.sigma, twisted, &diag, &[(self.x_mat.clone(), self.x_identity())])
    }

    /// 𝒥(C) for a named extension.
    pub fn j_of(&self, name: &str) -> Result<Subspace> {
        j_of(&self.base, self.extension(name)?)
    }
}

/// The quotient of Σ*⊗_k Σ by the M_n(k) coideal at α = 1, with its
/// group-like classes c_i of x^{n-i} e_1* ⊗ e_1 x^i and the isomorphism from
/// the Sweedler coring of k ⊂ C(1).
#[derive(Clone, Debug)]
pub struct GrouplikeQuotient {
    pub instance: AOmega,
    pub coideal: Subspace,
    pub coideal_matches_kernel: bool,
    pub quotient: QuotientCoring,
    pub c: Vec<SVec>,
    pub grouplike: Vec<bool>,
    pub sweedler: Arc<Coring>,
    /// a ⊗ b ↦ a c_n b
    pub iso: CoringMorphism,
}

pub fn grouplike_quotient(n: usize, k: &NumberField, omega: &Scalar) -> Result<GrouplikeQuotient> {
    let instance = aomega_relaxed(n, k, omega, &k.one(), &k.one())?;
    let coideal = instance.listed_coideal("M_n(k)")?.span;
    let coideal_matches_kernel = instance.j_of("M_n(k)")? == coideal;
    let quotient = quotient_coring(&instance.base.coring, &coideal, "(Σ*⊗Σ)/J_{M_n(k)}")?;
    let c: Vec<SVec> = (1..=n).map(|i| quotient.projection.apply(k, &instance.z(i, 1, 1))).collect();
    let grouplike = c.iter().map(|ci| is_grouplike(&quotient.coring, ci)).collect();
    let sweedler = Arc::new(sweedler_coring(&instance.alg)?);
    let g = &c[n - 1];
    let alg = &instance.alg;
    let images: Vec<SVec> = (0..alg.dim).map(|s| quotient.coring.carrier.left_act(&alg.basis(s), g)).collect();
    let iso = free_morphism(&sweedler, &quotient.coring, &images)?;
    Ok(GrouplikeQuotient { instance, coideal, coideal_matches_kernel, quotient, c, grouplike, sweedler, iso })
}
