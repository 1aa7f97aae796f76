//! Corings over a finite-dimensional algebra A: bimodules, ⊗_A, axioms,
//! coideals and quotients, group-likes and convolution duals.

use std::sync::Arc;

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::exactmath::{vector, NumberField, SMat, SVec, Scalar, Subspace};

mod bimodule;
mod dual;
mod grouplike;

pub use bimodule::{balancing_span, Bimodule, RightBasis, TensorOverA};
pub(crate) use bimodule::dense_cols;
pub use dual::{dual_functionals, dual_ring, DualRing, Side};
pub use grouplike::{grouplike_elements, is_grouplike, GrouplikeSet};

#[derive(Clone, Debug)]
pub struct Coring {
    pub carrier: Arc<Bimodule>,
    /// C ⊗_A C
    pub square: TensorOverA,
    /// Δ of each carrier basis vector, in `square` coordinates.
    pub delta: Vec<SVec>,
    /// ε of each carrier basis vector, as coordinates in A.
    pub counit: Vec<Vec<Scalar>>,
    pub label: String,
}

/// Outcome of the axiom checks, in the order they are run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoringCheck {
    pub checks: Vec<(&'static str, bool)>,
}

impl CoringCheck {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks.iter().find(|(_, ok)| !ok).map(|(n, _)| *n)
    }
}

impl Coring {
    pub fn new(carrier: Arc<Bimodule>, delta: Vec<SVec>, counit: Vec<Vec<Scalar>>, label: &str) -> Result<Self> {
        let square = TensorOverA::new(&carrier, &carrier)?;
        Self::with_square(square, delta, counit, label)
    }

    pub(crate) fn with_square(square: TensorOverA, delta: Vec<SVec>, counit: Vec<Vec<Scalar>>, label: &str) -> Result<Self> {
        let carrier = square.left.clone();
        let n = carrier.dim;
        if delta.len() != n || delta.iter().any(|v| v.dim != square.dim) {
            return Err(Error::DimensionMismatch(format!("{label}: comultiplication has the wrong shape")));
        }
        if counit.len() != n || counit.iter().any(|v| v.len() != carrier.alg.dim) {
            return Err(Error::DimensionMismatch(format!("{label}: counit has the wrong shape")));
        }
        Ok(Coring { carrier, square, delta, counit, label: label.to_string() })
    }

    /// Builds Δ and ε from their values on a right A-basis {m_p}, extended by
    /// Δ(m_p a) = Δ(m_p) a and ε(m_p a) = ε(m_p) a. Each Δ(m_p) is a list of
    /// pure tensors u ⊗ v.
    pub fn from_free_presentation(
        carrier: Arc<Bimodule>,
        gens: Vec<SVec>,
        delta_gens: &[Vec<(SVec, SVec)>],
        counit_gens: &[Vec<Scalar>],
        label: &str,
    ) -> Result<Self> {
        let k = carrier.field().clone();
        let alg = carrier.alg.clone();
        let d = alg.dim;
        let rb = RightBasis::from_gens(&carrier, gens)?;
        let square = TensorOverA::new(&carrier, &carrier)?;
        let dg: Vec<SVec> = delta_gens
            .iter()
            .map(|terms| {
                let mut t = SVec::zero(square.dim);
                for (u, v) in terms {
                    t.add_assign(&k, &square.pure(u, v));
                }
                t
            })
            .collect();
        let mut delta = Vec::with_capacity(carrier.dim);
        let mut counit = Vec::with_capacity(carrier.dim);
        for i in 0..carrier.dim {
            let dec = rb.decompose(&k, &carrier.unit_vec(i));
            let mut t = SVec::zero(square.dim);
            let mut e = vector::zero(&k, d);
            for p in dec.nonzero_blocks(d) {
                let a = dec.block(&k, p * d, d);
                t.add_assign(&k, &square.right_act(&dg[p], &a));
                e = vector::add(&k, &e, &alg.mul(&counit_gens[p], &a));
            }
            delta.push(t);
            counit.push(e);
        }
        Self::with_square(square, delta, counit, label)
    }

    pub fn field(&self) -> &NumberField {
        self.carrier.field()
    }

    pub fn alg(&self) -> &Arc<FinAlgebra> {
        &self.carrier.alg
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn apply_delta(&self, v: &SVec) -> SVec {
        let k = self.field();
        let mut out = SVec::zero(self.square.dim);
        for (&i, c) in &v.entries {
            out.add_scaled_at(k, &self.delta[i], c, 0);
        }
        out
    }

    pub fn apply_counit(&self, v: &SVec) -> Vec<Scalar> {
        let k = self.field();
        let mut out = vector::zero(k, self.alg().dim);
        for (&i, c) in &v.entries {
            vector::axpy(k, &mut out, c, &self.counit[i]);
        }
        out
    }

    /// Δ as a matrix from the carrier to `square` coordinates.
    pub fn delta_matrix(&self) -> SMat {
        SMat::from_cols(self.square.dim, self.delta.clone())
    }

    /// (Δ ⊗ id)Δ(c) and (id ⊗ Δ)Δ(c) in C ⊗_A C ⊗_A C, coordinates (p, q, C).
    pub fn coassociativity_sides(&self, c: &SVec) -> (SVec, SVec) {
        let k = self.field();
        let n = self.dim();
        let r = self.square.rank();
        let big = r * r * n;
        let dc = self.apply_delta(c);
        let mut lhs = SVec::zero(big);
        let mut rhs = SVec::zero(big);
        for (p, y) in self.square.blocks(&dc) {
            let dm = &self.delta_of_gen(p);
            for (q, w) in self.square.blocks(dm) {
                let t = self.square.pure(&w, &y);
                lhs.add_scaled_at(k, &t, &k.one(), q * r * n);
            }
            rhs.add_scaled_at(k, &self.apply_delta(&y), &k.one(), p * r * n);
        }
        (lhs, rhs)
    }

    fn delta_of_gen(&self, p: usize) -> SVec {
        self.apply_delta(&self.square.basis.gens[p])
    }

    pub fn left_counit_side(&self, c: &SVec) -> SVec {
        let k = self.field();
        let mut out = SVec::zero(self.dim());
        for (p, y) in self.square.blocks(&self.apply_delta(c)) {
            let e = self.apply_counit(&self.square.basis.gens[p]);
            out.add_assign(k, &self.carrier.left_act(&e, &y));
        }
        out
    }

    pub fn right_counit_side(&self, c: &SVec) -> SVec {
        let k = self.field();
        let mut out = SVec::zero(self.dim());
        for (p, y) in self.square.blocks(&self.apply_delta(c)) {
            let e = self.apply_counit(&y);
            out.add_assign(k, &self.carrier.right_act(&self.square.basis.gens[p], &e));
        }
        out
    }

    /// Runs every coring axiom as an exact identity. Bimodule linearity is
    /// checked on the whole basis, the remaining identities on bimodule generators.
    pub fn check(&self) -> CoringCheck {
        let k = self.field();
        let alg = self.alg();
        let d = alg.dim;
        let n = self.dim();
        let mut checks = Vec::new();
        checks.push(("bimodule", self.carrier.verify().is_ok()));
        let mut dl = true;
        let mut dr = true;
        let mut el = true;
        let mut er = true;
        for i in 0..n {
            let b = self.carrier.unit_vec(i);
            for s in 0..d {
                let a = alg.basis(s);
                let ab = self.carrier.left[s].apply(k, &b);
                let ba = self.carrier.right[s].apply(k, &b);
                dl &= self.apply_delta(&ab) == self.square.left_act(&a, &self.delta[i]);
                dr &= self.apply_delta(&ba) == self.square.right_act(&self.delta[i], &a);
                el &= self.apply_counit(&ab) == alg.mul(&a, &self.counit[i]);
                er &= self.apply_counit(&ba) == alg.mul(&self.counit[i], &a);
            }
        }
        checks.push(("delta-left-linear", dl));
        checks.push(("delta-right-linear", dr));
        checks.push(("counit-left-linear", el));
        checks.push(("counit-right-linear", er));
        let gens = self.carrier.bimodule_generators();
        let mut co = true;
        let mut lc = true;
        let mut rc = true;
        for &g in &gens {
            let c = self.carrier.unit_vec(g);
            let (l, r) = self.coassociativity_sides(&c);
            co &= l == r;
            lc &= self.left_counit_side(&c) == c;
            rc &= self.right_counit_side(&c) == c;
        }
        checks.push(("coassociativity", co));
        checks.push(("left-counit", lc));
        checks.push(("right-counit", rc));
        CoringCheck { checks }
    }

    /// Coassociativity and counit laws on every basis vector, not just on
    /// bimodule generators.
    pub fn check_exhaustive(&self) -> bool {
        (0..self.dim()).all(|i| {
            let c = self.carrier.unit_vec(i);
            let (l, r) = self.coassociativity_sides(&c);
            l == r && self.left_counit_side(&c) == c && self.right_counit_side(&c) == c
        })
    }

    /// C ⊗_k M^c(k, n): the tensor product with the comatrix coalgebra, basis
    /// c ⊗ x_{pq} at index c n² + p n + q, Δ(c ⊗ x_pq) = Σ_r (c₁ ⊗ x_pr) ⊗ (c₂ ⊗ x_rq).
    pub fn tensor_comatrix_coalgebra(&self, n: usize) -> Result<Coring> {
        let k = self.field().clone();
        let n2 = n * n;
        let dim = self.dim() * n2;
        let lift = |m: &SMat| {
            let mut cols = Vec::with_capacity(dim);
            for c in 0..self.dim() {
                for pq in 0..n2 {
                    let mut v = SVec::zero(dim);
                    for (&i, x) in &m.cols[c].entries {
                        v.add_at(&k, i * n2 + pq, x);
                    }
                    cols.push(v);
                }
            }
            SMat::from_cols(dim, cols)
        };
        let left = self.carrier.left.iter().map(lift).collect();
        let right = self.carrier.right.iter().map(lift).collect();
        let label = format!("{} ⊗ M^c({}, {n})", self.label, k.label());
        let carrier = Arc::new(Bimodule::new_unchecked(self.alg(), dim, left, right, &label));
        let square = TensorOverA::new(&carrier, &carrier)?;
        let embed = |v: &SVec, pq: usize| {
            let mut out = SVec::zero(dim);
            for (&i, x) in &v.entries {
                out.add_at(&k, i * n2 + pq, x);
            }
            out
        };
        let mut delta = Vec::with_capacity(dim);
        let mut counit = Vec::with_capacity(dim);
        for c in 0..self.dim() {
            let dc = &self.delta[c];
            for p in 0..n {
                for q in 0..n {
                    let mut t = SVec::zero(square.dim);
                    for (pp, y) in self.square.blocks(dc) {
                        let m = &self.square.basis.gens[pp];
                        for r in 0..n {
                            t.add_assign(&k, &square.pure(&embed(m, p * n + r), &embed(&y, r * n + q)));
                        }
                    }
                    delta.push(t);
                    counit.push(if p == q { self.counit[c].clone() } else { vector::zero(&k, self.alg().dim) });
                }
            }
        }
        Coring::with_square(square, delta, counit, &label)
    }
}

/// Result of testing a family of generators of a candidate coideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealCheck {
    pub sub_bimodule: bool,
    pub counit_vanishes: bool,
    pub delta_condition: bool,
    /// First offending generator and the condition it breaks.
    pub offending: Option<(usize, &'static str)>,
}

impl CoidealCheck {
    pub fn passed(&self) -> bool {
        self.sub_bimodule && self.counit_vanishes && self.delta_condition
    }

    pub fn into_result(self) -> Result<()> {
        match self.offending {
            None => Ok(()),
            Some((index, condition)) => Err(Error::NotACoideal { index, condition: condition.to_string() }),
        }
    }
}

/// Checks the coideal conditions on the span of `gens`. The comultiplication
/// condition Δ(J) ⊆ J ⊗ C + C ⊗ J is tested as (π ⊗ π)Δ(J) = 0 in C/J ⊗_A C/J.
pub fn check_coideal(c: &Coring, gens: &[Vec<Scalar>]) -> CoidealCheck {
    let k = c.field();
    let j = Subspace::span(k, c.dim(), gens);
    let mut out = CoidealCheck { sub_bimodule: true, counit_vanishes: true, delta_condition: true, offending: None };
    if let Some(i) = c.carrier.first_escape(gens, &j) {
        out.sub_bimodule = false;
        out.offending = Some((i, "sub-bimodule"));
        out.delta_condition = false;
        return out;
    }
    if let Some(i) = gens.iter().position(|g| !vector::is_zero(k, &c.apply_counit(&SVec::from_dense(k, g)))) {
        out.counit_vanishes = false;
        out.offending = Some((i, "counit"));
    }
    let quotient = match c.carrier.quotient(&j, "C/J").and_then(|(q, proj)| {
        let q = Arc::new(q);
        TensorOverA::new(&q, &q).map(|sq| (sq, proj))
    }) {
        Ok(x) => x,
        Err(_) => {
            out.delta_condition = false;
            out.offending.get_or_insert((0, "quotient-not-free"));
            return out;
        }
    };
    let (sq, proj) = quotient;
    if let Some(i) = gens.iter().position(|g| !project_square(c, &sq, &proj, &c.apply_delta(&SVec::from_dense(k, g))).is_zero()) {
        out.delta_condition = false;
        out.offending.get_or_insert((i, "comultiplication"));
    }
    out
}

/// (π ⊗ π) applied to an element of C ⊗_A C.
fn project_square(c: &Coring, target: &TensorOverA, proj: &SMat, t: &SVec) -> SVec {
    map_square(c, target, proj, proj, t)
}

/// (f ⊗ g) applied to an element of C ⊗_A C, landing in `target`.
pub(crate) fn map_square(c: &Coring, target: &TensorOverA, f: &SMat, g: &SMat, t: &SVec) -> SVec {
    let k = c.field();
    let mut out = SVec::zero(target.dim);
    for (p, y) in c.square.blocks(t) {
        let u = f.apply(k, &c.square.basis.gens[p]);
        out.add_assign(k, &target.pure(&u, &g.apply(k, &y)));
    }
    out
}

/// A quotient coring C/J with its projection.
#[derive(Clone, Debug)]
pub struct QuotientCoring {
    pub coring: Arc<Coring>,
    pub coideal: Subspace,
    pub projection: SMat,
}

pub fn quotient_coring(c: &Coring, j: &Subspace, label: &str) -> Result<QuotientCoring> {
    let k = c.field();
    check_coideal(c, &j.vectors()).into_result()?;
    let (q, proj) = c.carrier.quotient(j, label)?;
    let q = Arc::new(q);
    let square = TensorOverA::new(&q, &q)?;
    let np = j.non_pivots();
    let delta = np.iter().map(|&i| project_square(c, &square, &proj, &c.delta[i])).collect();
    let counit = np.iter().map(|&i| c.counit[i].clone()).collect();
    let coring = Coring::with_square(square, delta, counit, label)?;
    let _ = k;
    Ok(QuotientCoring { coring: Arc::new(coring), coideal: j.clone(), projection: proj })
}

/// The kernel of the counit, always a coideal.
pub fn counit_kernel(c: &Coring) -> Subspace {
    let k = c.field();
    let m = dense_cols(k, c.alg().dim, &c.counit.iter().map(|e| SVec::from_dense(k, e)).collect::<Vec<_>>());
    Subspace::span(k, c.dim(), &m.kernel_vectors(k))
}

/// A k-linear map between carriers, to be checked as a morphism of corings.
#[derive(Clone, Debug)]
pub struct CoringMorphism {
    pub source: Arc<Coring>,
    pub target: Arc<Coring>,
    pub map: SMat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismCheck {
    pub bimodule_map: bool,
    pub counit: bool,
    pub comultiplication: bool,
    pub rank: usize,
    pub bijective: bool,
}

impl MorphismCheck {
    pub fn is_morphism(&self) -> bool {
        self.bimodule_map && self.counit && self.comultiplication
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_morphism() && self.bijective
    }
}

impl CoringMorphism {
    pub fn new(source: &Arc<Coring>, target: &Arc<Coring>, map: SMat) -> Result<Self> {
        if map.rows != target.dim() || map.ncols() != source.dim() {
            return Err(Error::DimensionMismatch("morphism matrix does not fit the carriers".into()));
        }
        if source.alg() != target.alg() && **source.alg() != **target.alg() {
            return Err(Error::BaseMismatch(format!("{} and {}", source.label, target.label)));
        }
        Ok(CoringMorphism { source: source.clone(), target: target.clone(), map })
    }

    pub fn check(&self) -> MorphismCheck {
        let (s, t) = (&self.source, &self.target);
        let k = s.field();
        let d = s.alg().dim;
        let mut bimodule_map = true;
        let mut counit = true;
        let mut comultiplication = true;
        for i in 0..s.dim() {
            let b = s.carrier.unit_vec(i);
            let fb = self.map.apply(k, &b);
            for a in 0..d {
                bimodule_map &= self.map.apply(k, &s.carrier.left[a].apply(k, &b)) == t.carrier.left[a].apply(k, &fb);
                bimodule_map &= self.map.apply(k, &s.carrier.right[a].apply(k, &b)) == t.carrier.right[a].apply(k, &fb);
            }
            counit &= t.apply_counit(&fb) == s.counit[i];
            comultiplication &= t.apply_delta(&fb) == map_square(s, &t.square, &self.map, &self.map, &s.delta[i]);
        }
        let rank = self.map.rank(k);
        let bijective = rank == s.dim() && rank == t.dim();
        MorphismCheck { bimodule_map, counit, comultiplication, rank, bijective }
    }
}
