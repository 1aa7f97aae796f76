//! Finite-dimensional unital associative algebras given by structure
//! constants, their subalgebras, radicals and simplicity tests.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::{roots, upoly, vector, Echelon, Matrix, NumberField, SVec, Scalar, Subspace};

mod simple;

pub use simple::{DivisionStatus, SimplicityCertificate};

/// How the product of an endomorphism algebra relates to composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Not an endomorphism algebra.
    Native,
    /// a·b = a ∘ b
    Composition,
    /// a·b = b ∘ a
    Opposite,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Native => Orientation::Native,
            Orientation::Composition => Orientation::Opposite,
            Orientation::Opposite => Orientation::Composition,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Native => "native",
            Orientation::Composition => "composition",
            Orientation::Opposite => "opposite",
        }
    }
}

#[derive(Clone, Debug)]
pub struct FinAlgebra {
    pub field: NumberField,
    pub dim: usize,
    /// `mult[i * dim + j]` holds b_i b_j in the basis.
    mult: Vec<SVec>,
    pub unit: Vec<Scalar>,
    pub label: String,
    pub orientation: Orientation,
}

impl PartialEq for FinAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.mult == other.mult && self.unit == other.unit
    }
}

impl FinAlgebra {
    /// Builds and verifies associativity and the unit on basis elements.
    pub fn new(
        field: NumberField,
        dim: usize,
        mult: Vec<SVec>,
        unit: Vec<Scalar>,
        label: &str,
        orientation: Orientation,
    ) -> Result<Self> {
        let a = Self::new_unchecked(field, dim, mult, unit, label, orientation);
        a.verify()?;
        Ok(a)
    }

    pub(crate) fn new_unchecked(
        field: NumberField,
        dim: usize,
        mult: Vec<SVec>,
        unit: Vec<Scalar>,
        label: &str,
        orientation: Orientation,
    ) -> Self {
        assert_eq!(mult.len(), dim * dim);
        FinAlgebra { field, dim, mult, unit, label: label.to_string(), orientation }
    }

    pub fn verify(&self) -> Result<()> {
        let k = &self.field;
        if self.unit.len() != self.dim || self.mult.iter().any(|v| v.dim != self.dim) {
            return Err(Error::NotAnAlgebra("structure constants have the wrong shape".into()));
        }
        for i in 0..self.dim {
            let e = vector::unit(k, self.dim, i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::NotAnAlgebra(format!("unit fails on basis element {i}")));
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let bij = &self.mult[i * self.dim + j];
                for l in 0..self.dim {
                    // (b_i b_j) b_l versus b_i (b_j b_l)
                    let mut lhs = SVec::zero(self.dim);
                    for (&t, c) in &bij.entries {
                        lhs.add_scaled_at(k, &self.mult[t * self.dim + l], c, 0);
                    }
                    let mut rhs = SVec::zero(self.dim);
                    for (&t, c) in &self.mult[j * self.dim + l].entries {
                        rhs.add_scaled_at(k, &self.mult[i * self.dim + t], c, 0);
                    }
                    if lhs != rhs {
                        return Err(Error::NotAnAlgebra(format!("associativity fails on ({i}, {j}, {l})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(k: &NumberField) -> Self {
        let mult = vec![SVec::from_dense(k, &[k.one()])];
        Self::new_unchecked(k.clone(), 1, mult, vec![k.one()], k.label(), Orientation::Native)
    }

    /// F[x]/(p) for monic p, in the basis 1, x, ..., x^{d-1}. Need not be a field.
    pub fn poly_quotient(k: &NumberField, p: &[Scalar], label: &str) -> Result<Self> {
        let d = p.len() - 1;
        if d == 0 || !k.is_one(&p[d]) {
            return Err(Error::InvalidPolynomial("expected a monic polynomial of positive degree".into()));
        }
        // x^m reduced, for m < 2d - 1
        let mut powers: Vec<Vec<Scalar>> = Vec::new();
        let mut cur = vector::unit(k, d, 0);
        for _ in 0..(2 * d - 1) {
            powers.push(cur.clone());
            // multiply by x
            let top = cur[d - 1].clone();
            let mut next = vec![k.zero(); d];
            for t in 1..d {
                next[t] = cur[t - 1].clone();
            }
            for t in 0..d {
                let s = k.mul(&top, &p[t]);
                next[t] = k.sub(&next[t], &s);
            }
            cur = next;
        }
        let mut mult = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                mult.push(SVec::from_dense(k, &powers[i + j]));
            }
        }
        Self::new(k.clone(), d, mult, vector::unit(k, d, 0), label, Orientation::Native)
    }

    /// A number field as an algebra over its immediate base.
    pub fn from_number_field(ext: &NumberField) -> Result<Self> {
        let base = ext.base().ok_or_else(|| Error::Unsupported("Q is not an extension".into()))?;
        Self::poly_quotient(base, ext.min_poly().unwrap(), ext.label())
    }

    /// M_n(coeff) with basis e_{pq} a_s at index (p n + q) d + s.
    pub fn matrix_algebra(coeff: &FinAlgebra, n: usize) -> Self {
        let k = &coeff.field;
        let d = coeff.dim;
        let dim = n * n * d;
        let idx = |p: usize, q: usize, s: usize| (p * n + q) * d + s;
        let mut mult = vec![SVec::zero(dim); dim * dim];
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    for s in 0..d {
                        for t in 0..d {
                            let prod = coeff.basis_mul(s, t);
                            let mut v = SVec::zero(dim);
                            for (&u, c) in &prod.entries {
                                v.add_at(k, idx(p, r, u), c);
                            }
                            mult[idx(p, q, s) * dim + idx(q, r, t)] = v;
                        }
                    }
                }
            }
        }
        let mut unit = vec![k.zero(); dim];
        for p in 0..n {
            for s in 0..d {
                unit[idx(p, p, s)] = coeff.unit[s].clone();
            }
        }
        let label = if n == 1 { coeff.label.clone() } else { format!("M_{n}({})", coeff.label) };
        Self::new_unchecked(k.clone(), dim, mult, unit, &label, Orientation::Composition)
    }

    pub fn full_matrix_algebra(k: &NumberField, n: usize) -> Self {
        Self::matrix_algebra(&Self::ground(k), n)
    }

    /// The quaternion algebra (a, b) with basis 1, i, j, ij, i² = a, j² = b, ij = -ji.
    pub fn quaternion(k: &NumberField, a: &Scalar, b: &Scalar, label: &str) -> Result<Self> {
        let ab = k.mul(a, b);
        let one = k.one();
        let m1 = k.from_int(-1);
        // (result index, coefficient) for each product of basis elements
        let table: [[(usize, Scalar); 4]; 4] = [
            [(0, one.clone()), (1, one.clone()), (2, one.clone()), (3, one.clone())],
            [(1, one.clone()), (0, a.clone()), (3, one.clone()), (2, a.clone())],
            [(2, one.clone()), (3, m1.clone()), (0, b.clone()), (1, k.neg(b))],
            [(3, one.clone()), (2, k.neg(a)), (1, b.clone()), (0, k.neg(&ab))],
        ];
        let mut mult = Vec::with_capacity(16);
        for row in &table {
            for (t, c) in row {
                let mut v = SVec::zero(4);
                v.add_at(k, *t, c);
                mult.push(v);
            }
        }
        Self::new(k.clone(), 4, mult, vector::unit(k, 4, 0), label, Orientation::Native)
    }

    pub fn basis_mul(&self, i: usize, j: usize) -> &SVec {
        &self.mult[i * self.dim + j]
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vector::zero(&self.field, self.dim)
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.clone()
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        vector::unit(&self.field, self.dim, i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let k = &self.field;
        let mut acc = SVec::zero(self.dim);
        for (i, x) in a.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if k.is_zero(y) {
                    continue;
                }
                acc.add_scaled_at(k, &self.mult[i * self.dim + j], &k.mul(x, y), 0);
            }
        }
        acc.to_dense(k)
    }

    pub fn pow(&self, a: &[Scalar], e: usize) -> Vec<Scalar> {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }

    /// Matrix of x ↦ a x.
    pub fn left_matrix(&self, a: &[Scalar]) -> Matrix {
        let k = &self.field;
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_cols(k, self.dim, &cols)
    }

    /// Matrix of x ↦ x a.
    pub fn right_matrix(&self, a: &[Scalar]) -> Matrix {
        let k = &self.field;
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_cols(k, self.dim, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_mul(i, j) == self.basis_mul(j, i)))
    }

    pub fn opposite(&self) -> Self {
        let mut mult = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                mult.push(self.basis_mul(j, i).clone());
            }
        }
        Self::new_unchecked(
            self.field.clone(),
            self.dim,
            mult,
            self.unit.clone(),
            &format!("{}^op", self.label),
            self.orientation.flipped(),
        )
    }

    pub fn inverse(&self, a: &[Scalar]) -> Option<Vec<Scalar>> {
        let x = self.left_matrix(a).solve(&self.field, &self.unit)?;
        (self.mul(&x, a) == self.unit).then_some(x)
    }

    /// Minimal polynomial of `a` over the ground field (monic, low first).
    pub fn min_poly(&self, a: &[Scalar]) -> Vec<Scalar> {
        let k = &self.field;
        let mut powers = vec![self.one()];
        loop {
            let next = self.mul(powers.last().unwrap(), a);
            let m = Matrix::from_cols(k, self.dim, &powers);
            if let Some(c) = m.solve(k, &next) {
                let mut p: Vec<Scalar> = c.iter().map(|x| k.neg(x)).collect();
                p.push(k.one());
                return p;
            }
            powers.push(next);
        }
    }

    /// Evaluate a polynomial at an algebra element.
    pub fn eval_poly(&self, p: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let k = &self.field;
        let mut acc = self.zero();
        for c in p.iter().rev() {
            acc = self.mul(&acc, a);
            vector::axpy(k, &mut acc, c, &self.unit);
        }
        acc
    }

    /// tr(L_{b_l}) for each basis element.
    fn left_traces(&self) -> Vec<Scalar> {
        let k = &self.field;
        (0..self.dim)
            .map(|l| {
                let mut t = k.zero();
                for j in 0..self.dim {
                    k.add_assign(&mut t, &self.basis_mul(l, j).get(k, j));
                }
                t
            })
            .collect()
    }

    /// Gram matrix of the trace form (a, b) ↦ tr(L_{ab}).
    pub fn trace_form(&self) -> Matrix {
        let k = &self.field;
        let tau = self.left_traces();
        let mut g = Matrix::zeros(k, self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut s = k.zero();
                for (&l, c) in &self.basis_mul(i, j).entries {
                    k.fma(&mut s, c, &tau[l]);
                }
                g.set(i, j, s);
            }
        }
        g
    }

    /// Radical of the trace form; equals the Jacobson radical in characteristic 0.
    pub fn jacobson_radical(&self) -> Subspace {
        let k = &self.field;
        let vs = self.trace_form().kernel_vectors(k);
        Subspace::span(k, self.dim, &vs)
    }

    pub fn center(&self) -> Subspace {
        let k = &self.field;
        // rows indexed by (a, coordinate), unknowns z_i
        let n = self.dim;
        let mut m = Matrix::zeros(k, n * n, n);
        for a in 0..n {
            for i in 0..n {
                let d = self.basis_mul(i, a).sub(k, self.basis_mul(a, i));
                for (&t, c) in &d.entries {
                    m.set(a * n + t, i, c.clone());
                }
            }
        }
        let vs = m.kernel_vectors(k);
        Subspace::span(k, n, &vs)
    }

    /// { x : x a = a x for all a in s }.
    pub fn centralizer(&self, s: &[Vec<Scalar>]) -> Subspace {
        let k = &self.field;
        let n = self.dim;
        let mut rows = Vec::new();
        for a in s {
            let diff = self.right_matrix(a).sub(k, &self.left_matrix(a));
            rows.push(diff);
        }
        if rows.is_empty() {
            return Subspace::full(k, n);
        }
        let mut m = rows[0].clone();
        for r in &rows[1..] {
            m = m.vstack(r);
        }
        Subspace::span(k, n, &m.kernel_vectors(k))
    }

    pub fn is_simple_artinian(&self) -> Result<SimplicityCertificate> {
        simple::certify(self)
    }
}

/// A subalgebra of an ambient algebra stored by its RREF basis.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub ambient: Arc<FinAlgebra>,
    pub space: Subspace,
    pub label: String,
    generators: Vec<Vec<Scalar>>,
}

impl PartialEq for Subalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space
    }
}

impl Subalgebra {
    /// Smallest unital subalgebra containing `gens`.
    pub fn closure(ambient: &Arc<FinAlgebra>, gens: &[Vec<Scalar>], label: &str) -> Self {
        let space = closure_space(ambient, gens);
        Subalgebra { ambient: ambient.clone(), space, label: label.to_string(), generators: gens.to_vec() }
    }

    /// Wraps a subspace after checking it is a unital subalgebra.
    pub fn from_space(ambient: &Arc<FinAlgebra>, space: Subspace, label: &str) -> Result<Self> {
        let k = &ambient.field;
        if !space.contains(k, &ambient.unit) {
            return Err(Error::NotAnAlgebra(format!("{label} does not contain 1")));
        }
        let vs = space.vectors();
        for a in &vs {
            for b in &vs {
                if !space.contains(k, &ambient.mul(a, b)) {
                    return Err(Error::NotAnAlgebra(format!("{label} is not closed under multiplication")));
                }
            }
        }
        Ok(Subalgebra { ambient: ambient.clone(), space, label: label.to_string(), generators: Vec::new() })
    }

    pub fn whole(ambient: &Arc<FinAlgebra>) -> Self {
        let k = &ambient.field;
        Subalgebra {
            ambient: ambient.clone(),
            space: Subspace::full(k, ambient.dim),
            label: ambient.label.clone(),
            generators: Vec::new(),
        }
    }

    pub fn scalars(ambient: &Arc<FinAlgebra>) -> Self {
        Self::closure(ambient, &[], &ambient.field.label().to_string())
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.space.vectors()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.space.contains(&self.ambient.field, v)
    }

    pub fn is_subalgebra_of(&self, other: &Subalgebra) -> bool {
        self.space.is_subspace_of(&self.ambient.field, &other.space)
    }

    /// Recorded generators, or a small generating set found greedily from the basis.
    pub fn generators(&self) -> Vec<Vec<Scalar>> {
        if !self.generators.is_empty() || self.dim() <= 1 {
            return self.generators.clone();
        }
        let k = &self.ambient.field;
        let mut gens: Vec<Vec<Scalar>> = Vec::new();
        let mut cur = closure_space(&self.ambient, &gens);
        for b in self.basis() {
            if cur.dim() == self.dim() {
                break;
            }
            if !cur.contains(k, &b) {
                gens.push(b);
                cur = closure_space(&self.ambient, &gens);
            }
        }
        gens
    }

    /// The subalgebra as an algebra in its own RREF basis.
    pub fn to_algebra(&self) -> FinAlgebra {
        let k = &self.ambient.field;
        let vs = self.basis();
        let n = vs.len();
        let mut mult = Vec::with_capacity(n * n);
        for a in &vs {
            for b in &vs {
                let p = self.ambient.mul(a, b);
                mult.push(SVec::from_dense(k, &self.space.coords_unchecked(&p)));
            }
        }
        let unit = self.space.coords_unchecked(&self.ambient.unit);
        FinAlgebra::new_unchecked(k.clone(), n, mult, unit, &self.label, self.ambient.orientation)
    }

    pub fn is_simple_artinian(&self) -> Result<SimplicityCertificate> {
        self.to_algebra().is_simple_artinian()
    }
}

fn closure_space(ambient: &FinAlgebra, gens: &[Vec<Scalar>]) -> Subspace {
    let k = &ambient.field;
    let mut e = Echelon::new(ambient.dim);
    let mut work = vec![ambient.unit.clone()];
    e.insert(k, ambient.unit.clone());
    for g in gens {
        if e.insert(k, g.clone()) {
            work.push(g.clone());
        }
    }
    while let Some(w) = work.pop() {
        for g in gens {
            let p = ambient.mul(&w, g);
            if e.insert(k, p.clone()) {
                work.push(p);
            }
        }
    }
    e.into_subspace(k)
}

pub use crate::exactmath::matrix::rational_signature;

pub(crate) fn factor_is_single(k: &NumberField, p: &[Scalar]) -> Result<bool> {
    Ok(roots::factor(k, p)?.len() == 1)
}

pub(crate) fn poly_degree(p: &[Scalar]) -> usize {
    upoly::degree(p).unwrap_or(0)
}

#[cfg(test)]
mod tests;
