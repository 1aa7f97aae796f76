//! The correspondence between intermediate subrings B ⊆ C ⊆ End(Σ_A) and
//! coideals of Σ*⊗_B Σ.

mod conjugacy;

use std::sync::Arc;

use crate::algebra::{DivisionStatus, Subalgebra};
use crate::comatrix::{canonical_coaction, canonical_map, comatrix_coring, comod_end, ComatrixCoring, Comodule};
use crate::coring::{check_coideal, quotient_coring, Coring, QuotientCoring};
use crate::error::{Error, Result};
use crate::exactmath::{Echelon, SVec, Scalar, Subspace};

pub use conjugacy::{conjugacy, ConjugacyCertificate, Verdict};

/// 𝒥(C): the kernel of Σ*⊗_B Σ -> Σ*⊗_C Σ, in carrier coordinates.
pub fn j_of(base: &ComatrixCoring, c: &Subalgebra) -> Result<Subspace> {
    let sigma = &base.sigma;
    if *c.ambient != *sigma.end_alg {
        return Err(Error::NotASubalgebraOfEnd(c.label.clone()));
    }
    if !base.b.is_subalgebra_of(c) {
        return Err(Error::NotIntermediate(format!("{} is not contained in {}", base.b.label, c.label)));
    }
    let k = sigma.field();
    let w = sigma.balancing(&c.generators());
    let mut ech = Echelon::new(base.coring.dim());
    for v in w.vectors() {
        let p = base.proj.apply(k, &SVec::from_dense(k, &v));
        if !p.is_zero() {
            ech.insert(k, p.to_dense(k));
        }
    }
    Ok(ech.into_subspace(k))
}

/// Σ as a comodule over the quotient coring C/J.
pub fn quotient_comodule(base: &ComatrixCoring, j: &Subspace) -> Result<(QuotientCoring, Comodule)> {
    let q = quotient_coring(&base.coring, j, &format!("{}/J", base.coring.label))?;
    let m = canonical_coaction(base).corestrict(&q);
    Ok((q, m))
}

/// ℛ(J) = End(Σ_{C/J}).
pub fn r_of(base: &ComatrixCoring, j: &Subspace) -> Result<Subalgebra> {
    let (_, m) = quotient_comodule(base, j)?;
    comod_end(&m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCosemisimple {
    pub end_dim: usize,
    pub end_simple_artinian: bool,
    pub end_division: DivisionStatus,
    pub can_rank: usize,
    pub can_domain_dim: usize,
    pub can_codomain_dim: usize,
    pub can_bijective: bool,
}

impl SimpleCosemisimple {
    pub fn value(&self) -> bool {
        self.end_simple_artinian && self.can_bijective
    }
}

/// The coring is simple cosemisimple iff T = End(Σ_C) is simple artinian
/// and can: Σ*⊗_T Σ -> C is bijective.
pub fn is_simple_cosemisimple(m: &Comodule) -> Result<SimpleCosemisimple> {
    let can = canonical_map(m)?;
    let cert = can.t.is_simple_artinian()?;
    Ok(SimpleCosemisimple {
        end_dim: can.t.dim(),
        end_simple_artinian: cert.simple,
        end_division: cert.division,
        can_rank: can.rank,
        can_domain_dim: can.domain_dim(),
        can_codomain_dim: can.codomain_dim(),
        can_bijective: can.is_bijective(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropositionFlags {
    /// ℛ𝒥(C) ⊇ C
    pub rj_contains: bool,
    /// 𝒥ℛ(J) ⊆ J
    pub jr_contained: bool,
    /// ℛ𝒥(C) = C exactly when End over Σ*⊗_C Σ is C
    pub closed_iff_end: bool,
    /// 𝒥ℛ(J) = J exactly when C/J is Galois
    pub closed_iff_galois: bool,
}

impl PropositionFlags {
    pub fn all(&self) -> bool {
        self.rj_contains && self.jr_contained && self.closed_iff_end && self.closed_iff_galois
    }
}

pub fn proposition_properties(base: &ComatrixCoring, c: &Subalgebra, j: &Subspace) -> Result<PropositionFlags> {
    let jc = j_of(base, c)?;
    let rjc = r_of(base, &jc)?;
    let end_c = comod_end(&canonical_coaction(&comatrix_coring(&base.sigma, c)?))?;
    let rj = r_of(base, j)?;
    let jrj = j_of(base, &rj)?;
    let (_, m) = quotient_comodule(base, j)?;
    let galois = canonical_map(&m)?.is_bijective();
    let k = base.field();
    Ok(PropositionFlags {
        rj_contains: c.is_subalgebra_of(&rjc),
        jr_contained: jrj.is_subspace_of(k, j),
        closed_iff_end: (rjc == *c) == (end_c == *c),
        closed_iff_galois: (jrj == *j) == galois,
    })
}

/// One line of the correspondence check for an intermediate subring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceEntry {
    pub name: String,
    pub c_dim: usize,
    pub simple_artinian: bool,
    pub j_dim: usize,
    pub quotient_dim: usize,
    pub rj_equals_c: bool,
    pub jr_equals_j: bool,
    pub galois: bool,
    pub simple_cosemisimple: Option<SimpleCosemisimple>,
    /// ker(can) for the quotient C/𝒥(C), nonzero when the quotient is not Galois.
    pub can_kernel_dim: usize,
}

impl CorrespondenceEntry {
    pub fn passed(&self) -> bool {
        self.simple_artinian
            && self.rj_equals_c
            && self.jr_equals_j
            && self.galois
            && self.simple_cosemisimple.as_ref().is_some_and(|s| s.value())
    }
}

pub fn correspondence_entry(base: &ComatrixCoring, name: &str, c: &Subalgebra) -> Result<CorrespondenceEntry> {
    let simple_artinian = c.is_simple_artinian()?.simple;
    let j = j_of(base, c)?;
    let (q, m) = quotient_comodule(base, &j)?;
    let can = canonical_map(&m)?;
    let r = can.t.clone();
    let jr = j_of(base, &r)?;
    let scs = if simple_artinian { Some(is_simple_cosemisimple(&m)?) } else { None };
    Ok(CorrespondenceEntry {
        name: name.to_string(),
        c_dim: c.dim(),
        simple_artinian,
        j_dim: j.dim(),
        quotient_dim: q.coring.dim(),
        rj_equals_c: r == *c,
        jr_equals_j: jr == j,
        galois: can.is_bijective(),
        simple_cosemisimple: scs,
        can_kernel_dim: can.domain_dim() - can.rank,
    })
}

/// Runs both roundtrips on every listed intermediate subring.
pub fn verify_theorem_galarti(base: &ComatrixCoring, extensions: &[(String, Subalgebra)]) -> Result<Vec<CorrespondenceEntry>> {
    extensions.iter().map(|(name, c)| correspondence_entry(base, name, c)).collect()
}

/// For Σ = A of rank one: {e ∈ A : e·π(g) = π(g)·e} with g the class of e₁*⊗e₁.
pub fn pjb_closure(base: &ComatrixCoring, j: &Subspace) -> Result<Subalgebra> {
    let sigma = &base.sigma;
    if sigma.rank != 1 {
        return Err(Error::Unsupported("the group-like closure formula needs Σ of rank one".into()));
    }
    let k = sigma.field();
    let (q, _) = quotient_comodule(base, j)?;
    let g = q.projection.apply(k, &base.class(&sigma.dual_basis_vec(0), &sigma.basis_vec(0)));
    let carrier = &q.coring.carrier;
    let d = sigma.d();
    let cols: Vec<SVec> = (0..d)
        .map(|s| {
            let a = sigma.alg.basis(s);
            carrier.left_act(&a, &g).sub(k, &carrier.right_act(&g, &a))
        })
        .collect();
    let m = crate::coring::dense_cols(k, carrier.dim, &cols);
    let space = Subspace::span(k, d, &m.kernel_vectors(k));
    Subalgebra::from_space(&sigma.end_alg, space, "PJB")
}

pub const COIDEAL_ENUMERATION_MAX_DIM: usize = 4;

#[derive(Clone, Debug)]
pub struct CoidealLattice {
    pub coideals: Vec<Subspace>,
    pub sub_bimodules: usize,
}

/// The sub-bimodule generated by a set of vectors.
pub fn bimodule_closure(c: &Coring, gens: &[Vec<Scalar>]) -> Subspace {
    let k = c.field();
    let d = c.alg().dim;
    let mut ech = Echelon::new(c.dim());
    let mut work: Vec<Vec<Scalar>> = Vec::new();
    for g in gens {
        if ech.insert(k, g.clone()) {
            work.push(g.clone());
        }
    }
    while let Some(v) = work.pop() {
        let sv = SVec::from_dense(k, &v);
        for s in 0..d {
            let a = c.alg().basis(s);
            for w in [c.carrier.left_act(&a, &sv), c.carrier.right_act(&sv, &a)] {
                let w = w.to_dense(k);
                if ech.insert(k, w.clone()) {
                    work.push(w);
                }
            }
        }
    }
    ech.into_subspace(k)
}

/// Coideals of a small coring: sub-bimodules generated by vectors with
/// coordinates in {-1, 0, 1}, closed under sums, filtered by the coideal
/// conditions.
pub fn enumerate_coideals(c: &Coring) -> Result<CoidealLattice> {
    let n = c.dim();
    if n > COIDEAL_ENUMERATION_MAX_DIM {
        return Err(Error::CarrierTooLarge(n));
    }
    let k = c.field();
    let mut subs: Vec<Subspace> = vec![Subspace::zero(k, n)];
    let total = 3usize.pow(n as u32);
    for code in 1..total {
        let mut v = Vec::with_capacity(n);
        let mut x = code;
        for _ in 0..n {
            v.push(k.from_int((x % 3) as i64 - 1));
            x /= 3;
        }
        let s = bimodule_closure(c, &[v]);
        if !subs.contains(&s) {
            subs.push(s);
        }
    }
    loop {
        let mut added = false;
        let snapshot = subs.clone();
        for a in &snapshot {
            for b in &snapshot {
                let s = a.sum(k, b);
                if !subs.contains(&s) {
                    subs.push(s);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    subs.sort_by_key(|s| s.dim());
    let sub_bimodules = subs.len();
    let coideals = subs.into_iter().filter(|s| check_coideal(c, &s.vectors()).passed()).collect();
    Ok(CoidealLattice { coideals, sub_bimodules })
}

/// Convenience: the comatrix coring together with its canonical comodule.
pub fn base_setting(sigma: &Arc<crate::comatrix::FreeRightModule>, b: &Subalgebra) -> Result<(ComatrixCoring, Comodule)> {
    let cm = comatrix_coring(sigma, b)?;
    let m = canonical_coaction(&cm);
    Ok((cm, m))
}

#[cfg(test)]
mod tests;
