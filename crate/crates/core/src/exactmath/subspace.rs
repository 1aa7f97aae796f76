use super::field::{NumberField, Scalar};
use super::matrix::{vector, Matrix};
use super::sparse::{SMat, SVec};

/// Subspace of F^ambient stored by its RREF basis (no zero rows). Two
/// subspaces are equal iff these matrices are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub ambient: usize,
    pub basis: Matrix,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(k: &NumberField, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(k, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(k: &NumberField, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(k, ambient), pivots: (0..ambient).collect() }
    }

    pub fn from_matrix_rows(k: &NumberField, m: &Matrix) -> Self {
        let (r, pivots) = m.rref(k);
        let rank = pivots.len();
        let basis = Matrix::from_vec(rank, m.cols, r.data[..rank * m.cols].to_vec());
        Subspace { ambient: m.cols, basis, pivots }
    }

    pub fn span(k: &NumberField, ambient: usize, vecs: &[Vec<Scalar>]) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vecs {
            e.insert(k, v.clone());
        }
        e.into_subspace(k)
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    /// v minus its components along the pivot columns; zero iff v lies in the subspace.
    pub fn reduce(&self, k: &NumberField, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p].clone();
            if !k.is_zero(&c) {
                vector::axpy(k, &mut r, &k.neg(&c), self.basis.row(i));
            }
        }
        r
    }

    pub fn contains(&self, k: &NumberField, v: &[Scalar]) -> bool {
        vector::is_zero(k, &self.reduce(k, v))
    }

    /// Coordinates in the RREF basis, if v lies in the subspace.
    pub fn coords(&self, k: &NumberField, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(k, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates assuming membership (no check).
    pub fn coords_unchecked(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn combine(&self, k: &NumberField, coords: &[Scalar]) -> Vec<Scalar> {
        let mut v = vector::zero(k, self.ambient);
        for (i, c) in coords.iter().enumerate() {
            vector::axpy(k, &mut v, c, self.basis.row(i));
        }
        v
    }

    pub fn is_subspace_of(&self, k: &NumberField, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(k, self.basis.row(i)))
    }

    pub fn sum(&self, k: &NumberField, other: &Subspace) -> Subspace {
        let mut vs = self.vectors();
        vs.extend(other.vectors());
        Subspace::span(k, self.ambient, &vs)
    }

    pub fn intersection(&self, k: &NumberField, other: &Subspace) -> Subspace {
        // solve sum a_i u_i = sum b_j w_j
        let (m, n) = (self.dim(), other.dim());
        if m == 0 || n == 0 {
            return Subspace::zero(k, self.ambient);
        }
        let mut a = Matrix::zeros(k, self.ambient, m + n);
        for i in 0..m {
            for r in 0..self.ambient {
                a.set(r, i, self.basis.get(i, r).clone());
            }
        }
        for j in 0..n {
            for r in 0..self.ambient {
                a.set(r, m + j, k.neg(other.basis.get(j, r)));
            }
        }
        let vs: Vec<Vec<Scalar>> = a.kernel_vectors(k).iter().map(|c| self.combine(k, &c[..m])).collect();
        Subspace::span(k, self.ambient, &vs)
    }

    /// Standard coordinates not used as pivots; they index a basis of the
    /// quotient ambient / self.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| self.pivots.binary_search(c).is_err()).collect()
    }

    /// Quotient map F^ambient -> F^(ambient - dim): reduce, then read off the
    /// non-pivot coordinates.
    pub fn quotient_coords(&self, k: &NumberField, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.reduce(k, v);
        self.non_pivots().into_iter().map(|c| r[c].clone()).collect()
    }

    /// Matrix of the quotient map.
    pub fn quotient_matrix(&self, k: &NumberField) -> Matrix {
        let np = self.non_pivots();
        let mut q = Matrix::zeros(k, np.len(), self.ambient);
        for j in 0..self.ambient {
            let r = self.reduce(k, &vector::unit(k, self.ambient, j));
            for (i, &c) in np.iter().enumerate() {
                q.set(i, j, r[c].clone());
            }
        }
        q
    }

    /// Sparse matrix of the quotient map, read off the RREF rows directly.
    pub fn quotient_smat(&self, k: &NumberField) -> SMat {
        let np = self.non_pivots();
        let qdim = np.len();
        let mut cols = vec![SVec::zero(qdim); self.ambient];
        for (i, &c) in np.iter().enumerate() {
            cols[c] = SVec::unit(k, qdim, i);
        }
        for (r, &p) in self.pivots.iter().enumerate() {
            let row = self.basis.row(r);
            let mut v = SVec::zero(qdim);
            for (i, &c) in np.iter().enumerate() {
                if !k.is_zero(&row[c]) {
                    v.add_at(k, i, &k.neg(&row[c]));
                }
            }
            cols[p] = v;
        }
        SMat::from_cols(qdim, cols)
    }

    pub fn image(&self, k: &NumberField, m: &Matrix) -> Subspace {
        let vs: Vec<Vec<Scalar>> = self.vectors().iter().map(|v| m.mul_vec(k, v)).collect();
        Subspace::span(k, m.rows, &vs)
    }
}

/// Incrementally maintained RREF basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        Echelon { ambient: s.ambient, rows: s.vectors(), pivots: s.pivots.clone() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, k: &NumberField, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !k.is_zero(&c) {
                vector::axpy(k, &mut r, &k.neg(&c), row);
            }
        }
        r
    }

    pub fn contains(&self, k: &NumberField, v: &[Scalar]) -> bool {
        vector::is_zero(k, &self.reduce(k, v))
    }

    /// Adds v; returns true if the dimension grew.
    pub fn insert(&mut self, k: &NumberField, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut r = self.reduce(k, &v);
        let Some(p) = r.iter().position(|x| !k.is_zero(x)) else { return false };
        let inv = k.inv(&r[p]).unwrap();
        r = vector::scale(k, &r, &inv);
        for row in self.rows.iter_mut() {
            let c = row[p].clone();
            if !k.is_zero(&c) {
                vector::axpy(k, row, &k.neg(&c), &r);
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn into_subspace(self, k: &NumberField) -> Subspace {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        let rows: Vec<Vec<Scalar>> = idx.iter().map(|&i| self.rows[i].clone()).collect();
        let pivots = idx.iter().map(|&i| self.pivots[i]).collect();
        Subspace { ambient: self.ambient, basis: Matrix::from_rows(k, self.ambient, &rows), pivots }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_equals_rref() {
        let k = NumberField::rationals();
        let vs = vec![vector::from_ints(&k, &[1, 2, 3]), vector::from_ints(&k, &[2, 4, 7]), vector::from_ints(&k, &[0, 0, 2])];
        let s = Subspace::span(&k, 3, &vs);
        let m = Matrix::from_rows(&k, 3, &vs);
        assert_eq!(s, Subspace::from_matrix_rows(&k, &m));
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn quotient_kills_subspace() {
        let k = NumberField::rationals();
        let s = Subspace::span(&k, 3, &[vector::from_ints(&k, &[1, 1, 0])]);
        let q = s.quotient_matrix(&k);
        assert_eq!(q.rows, 2);
        assert!(vector::is_zero(&k, &q.mul_vec(&k, &vector::from_ints(&k, &[1, 1, 0]))));
        assert_eq!(q.rank(&k), 2);
    }

    #[test]
    fn intersection_dimension() {
        let k = NumberField::rationals();
        let a = Subspace::span(&k, 3, &[vector::from_ints(&k, &[1, 0, 0]), vector::from_ints(&k, &[0, 1, 0])]);
        let b = Subspace::span(&k, 3, &[vector::from_ints(&k, &[0, 1, 0]), vector::from_ints(&k, &[0, 0, 1])]);
        let c = a.intersection(&k, &b);
        assert_eq!(c, Subspace::span(&k, 3, &[vector::from_ints(&k, &[0, 1, 0])]));
        assert_eq!(a.sum(&k, &b), Subspace::full(&k, 3));
    }
}
