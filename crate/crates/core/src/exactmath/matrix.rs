use super::field::{NumberField, Rat, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix of field elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(k: &NumberField, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![k.zero(); rows * cols] }
    }

    pub fn identity(k: &NumberField, n: usize) -> Self {
        let mut m = Self::zeros(k, n, n);
        for i in 0..n {
            m.set(i, i, k.one());
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn from_rows(k: &NumberField, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(k, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.data[i * cols..(i + 1) * cols].clone_from_slice(r);
        }
        m
    }

    pub fn from_cols(k: &NumberField, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(k, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_ints(k: &NumberField, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| k.from_int(x))).collect();
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn is_zero(&self, k: &NumberField) -> bool {
        self.data.iter().all(|x| k.is_zero(x))
    }

    pub fn add(&self, k: &NumberField, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| k.add(a, b)).collect() }
    }

    pub fn sub(&self, k: &NumberField, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| k.sub(a, b)).collect() }
    }

    pub fn scale(&self, k: &NumberField, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| k.mul(a, c)).collect() }
    }

    pub fn mul(&self, k: &NumberField, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(k, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if k.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !k.is_zero(b) {
                        k.fma(out.get_mut(i, j), a, b);
                    }
                }
            }
        }
        out
    }

    /// Matrix times column vector; skips zero entries of `v`.
    pub fn mul_vec(&self, k: &NumberField, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = vec![k.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !k.is_zero(a) {
                    k.fma(o, a, x);
                }
            }
        }
        out
    }

    /// Stack vertically.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form (same shape, zero rows last) and pivot columns.
    pub fn rref(&self, k: &NumberField) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !k.is_zero(m.get(i, c))) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = k.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let v = k.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            let pivot_row: Vec<Scalar> = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if k.is_zero(&f) {
                    continue;
                }
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !k.is_zero(pv) {
                        let t = k.mul(&f, pv);
                        let slot = m.get_mut(i, c + off);
                        *slot = k.sub(slot, &t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, k: &NumberField) -> usize {
        self.rref(k).1.len()
    }

    /// Columns form the canonical null-space basis read off the RREF
    /// (one free variable set to 1, the others 0).
    pub fn kernel_basis(&self, k: &NumberField) -> Matrix {
        let (r, pivots) = self.rref(k);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(k, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            out.set(f, j, k.one());
            for (i, &p) in pivots.iter().enumerate() {
                out.set(p, j, k.neg(r.get(i, f)));
            }
        }
        out
    }

    pub fn kernel_vectors(&self, k: &NumberField) -> Vec<Vec<Scalar>> {
        self.kernel_basis(k).col_vecs()
    }

    /// Some solution of self · x = b.
    pub fn solve(&self, k: &NumberField, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(k, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref(k);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![k.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self, k: &NumberField) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(k, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, k.one());
        }
        let (r, pivots) = aug.rref(k);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut out = Matrix::zeros(k, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    pub fn det(&self, k: &NumberField) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = k.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !k.is_zero(m.get(i, c))) else { return k.zero() };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = k.neg(&det);
            }
            let piv = m.get(c, c).clone();
            det = k.mul(&det, &piv);
            let inv = k.inv(&piv).unwrap();
            for i in c + 1..n {
                let f = k.mul(m.get(i, c), &inv);
                if k.is_zero(&f) {
                    continue;
                }
                for j in c..n {
                    let t = k.mul(&f, m.get(c, j));
                    let slot = m.get_mut(i, j);
                    *slot = k.sub(slot, &t);
                }
            }
        }
        det
    }

    pub fn trace(&self, k: &NumberField) -> Scalar {
        let mut t = k.zero();
        for i in 0..self.rows.min(self.cols) {
            k.add_assign(&mut t, self.get(i, i));
        }
        t
    }
}

/// Dense vector helpers.
/// Signature (positive, negative, zero) of a symmetric rational matrix.
pub fn rational_signature(k: &NumberField, g: &Matrix) -> Option<(usize, usize, usize)> {
    use num_traits::{Signed, Zero};
    let n = g.rows;
    let mut m: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(k.as_rational(g.get(i, j))?);
        }
        m.push(row);
    }
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // diagonal pivot, or create one from an off-diagonal entry
        if let Some(&p) = active.iter().find(|&&i| !m[i][i].is_zero()) {
            let d = m[p][p].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            let rest: Vec<usize> = active.iter().copied().filter(|&i| i != p).collect();
            for &i in &rest {
                let f = &m[i][p] / &d;
                for &j in &rest {
                    let t = &f * &m[p][j];
                    m[i][j] -= t;
                }
            }
            active = rest;
        } else if let Some((p, q)) =
            active.iter().flat_map(|&i| active.iter().map(move |&j| (i, j))).find(|&(i, j)| i != j && !m[i][j].is_zero())
        {
            // replace row/col p by p + q, which has diagonal 2 m[p][q] != 0
            for &j in &active {
                let t = m[q][j].clone();
                m[p][j] += t;
            }
            for &i in &active {
                let t = m[i][q].clone();
                m[i][p] += t;
            }
        } else {
            zero += active.len();
            break;
        }
    }
    Some((pos, neg, zero))
}

pub mod vector {
    use super::*;

    pub fn zero(k: &NumberField, n: usize) -> Vec<Scalar> {
        vec![k.zero(); n]
    }

    pub fn unit(k: &NumberField, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zero(k, n);
        v[i] = k.one();
        v
    }

    pub fn add(k: &NumberField, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| k.add(x, y)).collect()
    }

    pub fn sub(k: &NumberField, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| k.sub(x, y)).collect()
    }

    pub fn scale(k: &NumberField, a: &[Scalar], c: &Scalar) -> Vec<Scalar> {
        a.iter().map(|x| k.mul(x, c)).collect()
    }

    pub fn neg(k: &NumberField, a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(|x| k.neg(x)).collect()
    }

    /// a += c·b
    pub fn axpy(k: &NumberField, a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
        if k.is_zero(c) {
            return;
        }
        for (x, y) in a.iter_mut().zip(b) {
            if !k.is_zero(y) {
                k.fma(x, c, y);
            }
        }
    }

    pub fn dot(k: &NumberField, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let mut acc = k.zero();
        for (x, y) in a.iter().zip(b) {
            if !k.is_zero(x) && !k.is_zero(y) {
                k.fma(&mut acc, x, y);
            }
        }
        acc
    }

    pub fn is_zero(k: &NumberField, a: &[Scalar]) -> bool {
        a.iter().all(|x| k.is_zero(x))
    }

    pub fn from_ints(k: &NumberField, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| k.from_int(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> NumberField {
        NumberField::rationals()
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let k = q();
        let id = Matrix::identity(&k, 3);
        assert_eq!(id.rref(&k).0, id);
        assert!(id.kernel_vectors(&k).is_empty());
    }

    #[test]
    fn rank_one_example() {
        let k = q();
        let m = Matrix::from_ints(&k, &[&[1, 1], &[2, 2]]);
        let (r, p) = m.rref(&k);
        assert_eq!(r, Matrix::from_ints(&k, &[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_of_zero_map() {
        let k = q();
        assert_eq!(Matrix::zeros(&k, 2, 4).kernel_vectors(&k).len(), 4);
    }

    #[test]
    fn inverse_and_det() {
        let k = NumberField::preset("Qi").unwrap();
        let i = k.gen();
        let m = Matrix::from_vec(2, 2, vec![k.one(), i.clone(), k.neg(&i), k.from_int(2)]);
        // det = 2 - (i)(-i) = 2 + i^2 = 1
        assert_eq!(m.det(&k), k.one());
        let inv = m.inverse(&k).unwrap();
        assert_eq!(m.mul(&k, &inv), Matrix::identity(&k, 2));
        let sing = Matrix::from_vec(2, 2, vec![k.one(), i.clone(), i.clone(), k.neg(&k.one())]);
        assert!(sing.inverse(&k).is_err());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let k = q();
        let m = Matrix::from_ints(&k, &[&[1, 2], &[2, 4]]);
        let x = m.solve(&k, &vector::from_ints(&k, &[3, 6])).unwrap();
        assert_eq!(m.mul_vec(&k, &x), vector::from_ints(&k, &[3, 6]));
        assert!(m.solve(&k, &vector::from_ints(&k, &[1, 0])).is_none());
    }
}
