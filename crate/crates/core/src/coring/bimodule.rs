use std::sync::Arc;

use crate::algebra::FinAlgebra;
use crate::error::{Error, Result};
use crate::exactmath::{vector, Echelon, Matrix, NumberField, SMat, SVec, Scalar, Subspace};

/// An A-bimodule given by the action matrices of the basis of A.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub alg: Arc<FinAlgebra>,
    pub dim: usize,
    /// x ↦ a_s x
    pub left: Vec<SMat>,
    /// x ↦ x a_s
    pub right: Vec<SMat>,
    pub label: String,
}

impl Bimodule {
    pub fn new(alg: &Arc<FinAlgebra>, dim: usize, left: Vec<SMat>, right: Vec<SMat>, label: &str) -> Result<Self> {
        let m = Bimodule { alg: alg.clone(), dim, left, right, label: label.to_string() };
        m.verify()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(alg: &Arc<FinAlgebra>, dim: usize, left: Vec<SMat>, right: Vec<SMat>, label: &str) -> Self {
        Bimodule { alg: alg.clone(), dim, left, right, label: label.to_string() }
    }

    /// A as a bimodule over itself.
    pub fn regular(alg: &Arc<FinAlgebra>) -> Self {
        let k = &alg.field;
        let d = alg.dim;
        let left = (0..d).map(|s| SMat::from_dense(k, &alg.left_matrix(&alg.basis(s)))).collect();
        let right = (0..d).map(|s| SMat::from_dense(k, &alg.right_matrix(&alg.basis(s)))).collect();
        Bimodule::new_unchecked(alg, d, left, right, &alg.label)
    }

    pub fn field(&self) -> &NumberField {
        &self.alg.field
    }

    pub fn verify(&self) -> Result<()> {
        let k = self.field();
        let a = &self.alg;
        let d = a.dim;
        let bad = |why: String| Err(Error::NotABimodule(format!("{}: {why}", self.label)));
        if self.left.len() != d || self.right.len() != d {
            return bad("one action matrix per basis element of A is required".into());
        }
        if self.left.iter().chain(&self.right).any(|m| m.rows != self.dim || m.ncols() != self.dim) {
            return bad("action matrices have the wrong size".into());
        }
        let id = SMat::identity(k, self.dim);
        if self.combine(&self.left, &a.unit) != id || self.combine(&self.right, &a.unit) != id {
            return bad("the unit does not act as the identity".into());
        }
        for s in 0..d {
            for t in 0..d {
                let prod = a.basis_mul(s, t).to_dense(k);
                if self.left[s].compose(k, &self.left[t]) != self.combine(&self.left, &prod) {
                    return bad(format!("left action not associative on ({s}, {t})"));
                }
                if self.right[t].compose(k, &self.right[s]) != self.combine(&self.right, &prod) {
                    return bad(format!("right action not associative on ({s}, {t})"));
                }
                if self.left[s].compose(k, &self.right[t]) != self.right[t].compose(k, &self.left[s]) {
                    return bad(format!("actions of a_{s} and a_{t} do not commute"));
                }
            }
        }
        Ok(())
    }

    fn combine(&self, mats: &[SMat], a: &[Scalar]) -> SMat {
        let k = self.field();
        let mut cols = vec![SVec::zero(self.dim); self.dim];
        for (s, c) in a.iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            for (j, col) in mats[s].cols.iter().enumerate() {
                cols[j].add_scaled_at(k, col, c, 0);
            }
        }
        SMat::from_cols(self.dim, cols)
    }

    pub fn left_act(&self, a: &[Scalar], v: &SVec) -> SVec {
        let k = self.field();
        let mut out = SVec::zero(self.dim);
        for (s, c) in a.iter().enumerate() {
            if !k.is_zero(c) {
                out.add_scaled_at(k, &self.left[s].apply(k, v), c, 0);
            }
        }
        out
    }

    pub fn right_act(&self, v: &SVec, a: &[Scalar]) -> SVec {
        let k = self.field();
        let mut out = SVec::zero(self.dim);
        for (s, c) in a.iter().enumerate() {
            if !k.is_zero(c) {
                out.add_scaled_at(k, &self.right[s].apply(k, v), c, 0);
            }
        }
        out
    }

    pub fn unit_vec(&self, i: usize) -> SVec {
        SVec::unit(self.field(), self.dim, i)
    }

    pub fn is_sub_bimodule(&self, s: &Subspace) -> bool {
        self.first_escape(&s.vectors(), s).is_none()
    }

    /// Index of the first vector whose translate by a basis element of A leaves `s`.
    pub(crate) fn first_escape(&self, vs: &[Vec<Scalar>], s: &Subspace) -> Option<usize> {
        let k = self.field();
        vs.iter().position(|v| {
            let sv = SVec::from_dense(k, v);
            (0..self.alg.dim).any(|t| {
                !s.contains(k, &self.left[t].apply(k, &sv).to_dense(k))
                    || !s.contains(k, &self.right[t].apply(k, &sv).to_dense(k))
            })
        })
    }

    /// Quotient by a sub-bimodule, with the projection onto the non-pivot coordinates.
    pub fn quotient(&self, s: &Subspace, label: &str) -> Result<(Bimodule, SMat)> {
        if !self.is_sub_bimodule(s) {
            return Err(Error::NotABimodule(format!("{label}: subspace is not a sub-bimodule")));
        }
        let k = self.field();
        let proj = s.quotient_smat(k);
        let np = s.non_pivots();
        let act = |m: &SMat| {
            let cols = np.iter().map(|&c| proj.apply(k, &m.cols[c])).collect();
            SMat::from_cols(np.len(), cols)
        };
        let left = self.left.iter().map(act).collect();
        let right = self.right.iter().map(act).collect();
        Ok((Bimodule::new_unchecked(&self.alg, np.len(), left, right, label), proj))
    }

    /// Greedy right A-basis among standard vectors and sums of two of them.
    pub fn right_basis(&self) -> Result<RightBasis> {
        let k = self.field();
        let d = self.alg.dim;
        if self.dim % d != 0 {
            return Err(Error::NotFree);
        }
        let mut ech = Echelon::new(self.dim);
        let mut gens = Vec::new();
        let try_add = |v: SVec, ech: &mut Echelon, gens: &mut Vec<SVec>| {
            let mut trial = ech.clone();
            let ok = (0..d).all(|s| trial.insert(k, self.right[s].apply(k, &v).to_dense(k)));
            if ok {
                *ech = trial;
                gens.push(v);
            }
        };
        for i in 0..self.dim {
            if ech.dim() == self.dim {
                break;
            }
            try_add(self.unit_vec(i), &mut ech, &mut gens);
        }
        'pairs: for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if ech.dim() == self.dim {
                    break 'pairs;
                }
                let mut v = self.unit_vec(i);
                v.add_at(k, j, &k.one());
                try_add(v, &mut ech, &mut gens);
            }
        }
        if ech.dim() != self.dim {
            return Err(Error::NotFree);
        }
        RightBasis::from_gens(self, gens)
    }

    /// Bimodule generators found greedily among standard vectors.
    pub fn bimodule_generators(&self) -> Vec<usize> {
        let k = self.field();
        let d = self.alg.dim;
        let mut ech = Echelon::new(self.dim);
        let mut out = Vec::new();
        for i in 0..self.dim {
            if ech.dim() == self.dim {
                break;
            }
            let e = self.unit_vec(i);
            if ech.contains(k, &e.to_dense(k)) {
                continue;
            }
            out.push(i);
            for s in 0..d {
                let l = self.left[s].apply(k, &e);
                for t in 0..d {
                    ech.insert(k, self.right[t].apply(k, &l).to_dense(k));
                }
            }
        }
        out
    }
}

/// A basis of a module that is free as a right A-module.
#[derive(Clone, Debug)]
pub struct RightBasis {
    pub gens: Vec<SVec>,
    pub d: usize,
    /// module coordinates -> coefficient of m_p a_s at index p d + s
    inv: SMat,
}

impl RightBasis {
    pub fn from_gens(m: &Bimodule, gens: Vec<SVec>) -> Result<Self> {
        let k = m.field();
        let d = m.alg.dim;
        if gens.len() * d != m.dim {
            return Err(Error::NotFree);
        }
        let mut cols = Vec::with_capacity(m.dim);
        for g in &gens {
            for s in 0..d {
                cols.push(m.right[s].apply(k, g));
            }
        }
        let inv = sparse_inverse(k, &SMat::from_cols(m.dim, cols)).ok_or(Error::NotFree)?;
        Ok(RightBasis { gens, d, inv })
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// Coefficients (p, s) with v = Σ m_p a_s c_{p,s}.
    pub fn decompose(&self, k: &NumberField, v: &SVec) -> SVec {
        self.inv.apply(k, v)
    }
}

/// Inverse of a square sparse matrix; monomial matrices are inverted directly.
pub(crate) fn sparse_inverse(k: &NumberField, m: &SMat) -> Option<SMat> {
    let n = m.rows;
    if m.ncols() != n {
        return None;
    }
    if m.cols.iter().all(|c| c.entries.len() == 1) {
        let mut cols = vec![SVec::zero(n); n];
        let mut seen = vec![false; n];
        for (j, c) in m.cols.iter().enumerate() {
            let (&i, x) = c.entries.iter().next().unwrap();
            if seen[i] {
                return None;
            }
            seen[i] = true;
            let mut v = SVec::zero(n);
            v.add_at(k, j, &k.inv(x).ok()?);
            cols[i] = v;
        }
        return Some(SMat::from_cols(n, cols));
    }
    let inv = m.to_dense(k).inverse(k).ok()?;
    Some(SMat::from_dense(k, &inv))
}

/// M ⊗_A N realized through a right A-basis {m_p} of M: coordinates are
/// (p, N-coordinates), since M ⊗_A N = ⊕_p m_p ⊗ N.
#[derive(Clone, Debug)]
pub struct TensorOverA {
    pub left: Arc<Bimodule>,
    pub right: Arc<Bimodule>,
    pub basis: Arc<RightBasis>,
    pub dim: usize,
}

impl TensorOverA {
    pub fn new(left: &Arc<Bimodule>, right: &Arc<Bimodule>) -> Result<Self> {
        let basis = Arc::new(left.right_basis()?);
        Self::with_basis(left, right, basis)
    }

    pub fn with_basis(left: &Arc<Bimodule>, right: &Arc<Bimodule>, basis: Arc<RightBasis>) -> Result<Self> {
        if !Arc::ptr_eq(&left.alg, &right.alg) && *left.alg != *right.alg {
            return Err(Error::BaseMismatch(format!("{} and {}", left.label, right.label)));
        }
        let dim = basis.rank() * right.dim;
        Ok(TensorOverA { left: left.clone(), right: right.clone(), basis, dim })
    }

    pub fn field(&self) -> &NumberField {
        self.left.field()
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    /// u ⊗ v = Σ_p m_p ⊗ α_p v where u = Σ_p m_p α_p.
    pub fn pure(&self, u: &SVec, v: &SVec) -> SVec {
        let k = self.field();
        let d = self.basis.d;
        let dec = self.basis.decompose(k, u);
        let mut out = SVec::zero(self.dim);
        let nd = self.right.dim;
        for p in dec.nonzero_blocks(d) {
            let alpha = dec.block(k, p * d, d);
            let w = self.right.left_act(&alpha, v);
            out.add_scaled_at(k, &w, &k.one(), p * nd);
        }
        out
    }

    pub fn block(&self, t: &SVec, p: usize) -> SVec {
        t.block_sparse(p * self.right.dim, self.right.dim)
    }

    pub fn blocks(&self, t: &SVec) -> Vec<(usize, SVec)> {
        t.nonzero_blocks(self.right.dim).into_iter().map(|p| (p, self.block(t, p))).collect()
    }

    pub fn left_act(&self, a: &[Scalar], t: &SVec) -> SVec {
        let k = self.field();
        let mut out = SVec::zero(self.dim);
        for (p, y) in self.blocks(t) {
            let am = self.left.left_act(a, &self.basis.gens[p]);
            out.add_assign(k, &self.pure(&am, &y));
        }
        out
    }

    pub fn right_act(&self, t: &SVec, a: &[Scalar]) -> SVec {
        let k = self.field();
        let mut out = SVec::zero(self.dim);
        for (p, y) in self.blocks(t) {
            out.add_scaled_at(k, &self.right.right_act(&y, a), &k.one(), p * self.right.dim);
        }
        out
    }

    /// Matrix of M ⊗_k N -> M ⊗_A N on the basis e_i ⊗ f_j (index i · dim N + j).
    pub fn projector(&self) -> SMat {
        let mut cols = Vec::with_capacity(self.left.dim * self.right.dim);
        for i in 0..self.left.dim {
            let u = self.left.unit_vec(i);
            for j in 0..self.right.dim {
                cols.push(self.pure(&u, &self.right.unit_vec(j)));
            }
        }
        SMat::from_cols(self.dim, cols)
    }
}

/// Span of the balancing relations m a ⊗ n − m ⊗ a n inside M ⊗_k N.
pub fn balancing_span(left: &Bimodule, right: &Bimodule) -> Subspace {
    let k = left.field();
    let (dm, dn) = (left.dim, right.dim);
    let mut ech = Echelon::new(dm * dn);
    for s in 0..left.alg.dim {
        for i in 0..dm {
            let ma = left.right[s].apply(k, &left.unit_vec(i));
            for j in 0..dn {
                let an = right.left[s].apply(k, &right.unit_vec(j));
                let mut v = vector::zero(k, dm * dn);
                for (&x, c) in &ma.entries {
                    k.add_assign(&mut v[x * dn + j], c);
                }
                for (&y, c) in &an.entries {
                    let t = k.sub(&v[i * dn + y], c);
                    v[i * dn + y] = t;
                }
                ech.insert(k, v);
            }
        }
    }
    ech.into_subspace(k)
}

/// Matrix whose columns are the given sparse vectors, densified.
pub(crate) fn dense_cols(k: &NumberField, rows: usize, cols: &[SVec]) -> Matrix {
    let c: Vec<Vec<Scalar>> = cols.iter().map(|v| v.to_dense(k)).collect();
    Matrix::from_cols(k, rows, &c)
}
