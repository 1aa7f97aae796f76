use std::collections::BTreeMap;

use super::field::{NumberField, Scalar};
use super::matrix::Matrix;

/// Sparse vector with no stored zeros, so derived equality is exact equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SVec {
    pub dim: usize,
    pub entries: BTreeMap<usize, Scalar>,
}

impl SVec {
    pub fn zero(dim: usize) -> Self {
        SVec { dim, entries: BTreeMap::new() }
    }

    pub fn from_dense(k: &NumberField, v: &[Scalar]) -> Self {
        let entries = v.iter().enumerate().filter(|(_, x)| !k.is_zero(x)).map(|(i, x)| (i, x.clone())).collect();
        SVec { dim: v.len(), entries }
    }

    pub fn unit(k: &NumberField, dim: usize, i: usize) -> Self {
        let mut v = SVec::zero(dim);
        v.entries.insert(i, k.one());
        v
    }

    pub fn to_dense(&self, k: &NumberField) -> Vec<Scalar> {
        let mut v = vec![k.zero(); self.dim];
        for (&i, x) in &self.entries {
            v[i] = x.clone();
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, k: &NumberField, i: usize) -> Scalar {
        self.entries.get(&i).cloned().unwrap_or_else(|| k.zero())
    }

    pub fn add_at(&mut self, k: &NumberField, i: usize, c: &Scalar) {
        debug_assert!(i < self.dim);
        if k.is_zero(c) {
            return;
        }
        match self.entries.get_mut(&i) {
            Some(v) => {
                k.add_assign(v, c);
                if k.is_zero(v) {
                    self.entries.remove(&i);
                }
            }
            None => {
                self.entries.insert(i, c.clone());
            }
        }
    }

    /// self += c · other placed at `offset`.
    pub fn add_scaled_at(&mut self, k: &NumberField, other: &SVec, c: &Scalar, offset: usize) {
        if k.is_zero(c) {
            return;
        }
        let one = k.is_one(c);
        for (&i, x) in &other.entries {
            if one {
                self.add_at(k, offset + i, x);
            } else {
                self.add_at(k, offset + i, &k.mul(c, x));
            }
        }
    }

    pub fn add_assign(&mut self, k: &NumberField, other: &SVec) {
        for (&i, x) in &other.entries {
            self.add_at(k, i, x);
        }
    }

    pub fn sub(&self, k: &NumberField, other: &SVec) -> SVec {
        let mut r = self.clone();
        for (&i, x) in &other.entries {
            r.add_at(k, i, &k.neg(x));
        }
        r
    }

    pub fn scale(&self, k: &NumberField, c: &Scalar) -> SVec {
        if k.is_zero(c) {
            return SVec::zero(self.dim);
        }
        SVec { dim: self.dim, entries: self.entries.iter().map(|(&i, x)| (i, k.mul(x, c))).collect() }
    }

    /// Contiguous block [start, start + len) as a dense vector.
    pub fn block(&self, k: &NumberField, start: usize, len: usize) -> Vec<Scalar> {
        let mut v = vec![k.zero(); len];
        for (&i, x) in self.entries.range(start..start + len) {
            v[i - start] = x.clone();
        }
        v
    }

    /// Contiguous block [start, start + len) as a sparse vector.
    pub fn block_sparse(&self, start: usize, len: usize) -> SVec {
        let entries = self.entries.range(start..start + len).map(|(&i, x)| (i - start, x.clone())).collect();
        SVec { dim: len, entries }
    }

    pub fn neg(&self, k: &NumberField) -> SVec {
        SVec { dim: self.dim, entries: self.entries.iter().map(|(&i, x)| (i, k.neg(x))).collect() }
    }

    /// Indices of nonzero blocks of size `len`.
    pub fn nonzero_blocks(&self, len: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.entries.keys().map(|i| i / len).collect();
        out.dedup();
        out
    }
}

/// Sparse matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMat {
    pub rows: usize,
    pub cols: Vec<SVec>,
}

impl SMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SMat { rows, cols: vec![SVec::zero(rows); cols] }
    }

    pub fn identity(k: &NumberField, n: usize) -> Self {
        SMat { rows: n, cols: (0..n).map(|i| SVec::unit(k, n, i)).collect() }
    }

    pub fn from_cols(rows: usize, cols: Vec<SVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.dim == rows));
        SMat { rows, cols }
    }

    pub fn from_dense(k: &NumberField, m: &Matrix) -> Self {
        SMat { rows: m.rows, cols: m.col_vecs().iter().map(|c| SVec::from_dense(k, c)).collect() }
    }

    pub fn to_dense(&self, k: &NumberField) -> Matrix {
        let cols: Vec<Vec<Scalar>> = self.cols.iter().map(|c| c.to_dense(k)).collect();
        Matrix::from_cols(k, self.rows, &cols)
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn apply(&self, k: &NumberField, v: &SVec) -> SVec {
        let mut out = SVec::zero(self.rows);
        for (&j, c) in &v.entries {
            out.add_scaled_at(k, &self.cols[j], c, 0);
        }
        out
    }

    /// self ∘ other
    pub fn compose(&self, k: &NumberField, other: &SMat) -> SMat {
        SMat { rows: self.rows, cols: other.cols.iter().map(|c| self.apply(k, c)).collect() }
    }

    pub fn rank(&self, k: &NumberField) -> usize {
        self.to_dense(k).rank(k)
    }
}
