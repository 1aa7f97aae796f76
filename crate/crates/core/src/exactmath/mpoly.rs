//! Sparse multivariate polynomials with number-field coefficients and
//! matrices of them.

use std::collections::BTreeMap;

use super::field::{NumberField, Scalar};
use super::upoly::Poly;

/// Exponent vector. The derived order is lexicographic with variable 0 most
/// significant, which is the lex monomial order used by the Gröbner code.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, Scalar>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(k: &NumberField, c: Scalar, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        if !k.is_zero(&c) {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn var(k: &NumberField, i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial(e), k.one());
        p
    }

    pub fn term(k: &NumberField, c: Scalar, m: Monomial) -> Self {
        let mut p = Self::zero(m.0.len());
        if !k.is_zero(&c) {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: &NumberField, m: Monomial, c: &Scalar) {
        if k.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                k.add_assign(v, c);
                if k.is_zero(v) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, k: &NumberField, other: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(k, m.clone(), c);
        }
        r
    }

    pub fn neg(&self, k: &NumberField) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), k.neg(c))).collect() }
    }

    pub fn sub(&self, k: &NumberField, other: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(k, m.clone(), &k.neg(c));
        }
        r
    }

    pub fn mul(&self, k: &NumberField, other: &MPoly) -> MPoly {
        let mut r = MPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.add_term(k, m1.mul(m2), &k.mul(c1, c2));
            }
        }
        r
    }

    pub fn scale(&self, k: &NumberField, c: &Scalar) -> MPoly {
        if k.is_zero(c) {
            return MPoly::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), k.mul(v, c))).collect() }
    }

    pub fn mul_term(&self, k: &NumberField, c: &Scalar, m: &Monomial) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(mm, v)| (mm.mul(m), k.mul(v, c))).collect() }
    }

    /// Leading term in lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn eval(&self, k: &NumberField, point: &[Scalar]) -> Scalar {
        let mut acc = k.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = k.mul(&t, &k.pow(x, e as u64));
                }
            }
            k.add_assign(&mut acc, &t);
        }
        acc
    }

    /// Substitute `value` for variable `var`, keeping the number of variables.
    pub fn substitute(&self, k: &NumberField, var: usize, value: &Scalar) -> MPoly {
        let mut r = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let p = e[var];
            e[var] = 0;
            r.add_term(k, Monomial(e), &k.mul(c, &k.pow(value, p as u64)));
        }
        r
    }

    /// Coefficients as a polynomial in `var`, low degree first.
    pub fn coefficients_in(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![MPoly::zero(self.nvars); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let p = e[var] as usize;
            e[var] = 0;
            out[p].terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// Variables that occur with positive degree.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.degree_in(i) > 0).collect()
    }

    /// Convert to a univariate polynomial in `var`; `None` if other variables occur.
    pub fn to_univariate(&self, k: &NumberField, var: usize) -> Option<Poly> {
        if self.support_vars().iter().any(|&v| v != var) {
            return None;
        }
        if self.is_zero() {
            return Some(Vec::new());
        }
        let mut p: Poly = vec![k.zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            p[m.0[var] as usize] = c.clone();
        }
        Some(p)
    }

    pub fn from_univariate(p: &[Scalar], var: usize, nvars: usize) -> MPoly {
        let mut r = MPoly::zero(nvars);
        for (i, c) in p.iter().enumerate() {
            if !is_zero_like(c) {
                let mut e = vec![0; nvars];
                e[var] = i as u32;
                r.terms.insert(Monomial(e), c.clone());
            }
        }
        r
    }

    pub fn display(&self, k: &NumberField, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mon: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
                .collect();
            let cs = k.display(c);
            parts.push(if mon.is_empty() {
                cs
            } else if k.is_one(c) {
                mon.join("*")
            } else {
                format!("({cs})*{}", mon.join("*"))
            });
        }
        parts.join(" + ")
    }
}

fn is_zero_like(s: &Scalar) -> bool {
    match s {
        Scalar::Rat(r) => num_traits::Zero::is_zero(r),
        Scalar::Ext(v) => v.iter().all(is_zero_like),
    }
}

/// Square or rectangular matrix with polynomial entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub nvars: usize,
    pub entries: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix { rows, cols, nvars, entries: vec![MPoly::zero(nvars); rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> &MPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: MPoly) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn mul(&self, k: &NumberField, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = PolyMatrix::zeros(self.rows, other.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = MPoly::zero(self.nvars);
                for l in 0..self.cols {
                    let a = self.get(i, l);
                    let b = other.get(l, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(k, &a.mul(k, b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn eval(&self, k: &NumberField, point: &[Scalar]) -> super::matrix::Matrix {
        let data = self.entries.iter().map(|p| p.eval(k, point)).collect();
        super::matrix::Matrix::from_vec(self.rows, self.cols, data)
    }

    /// Exact determinant by Laplace expansion memoized over column subsets.
    pub fn det(&self, k: &NumberField) -> MPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return MPoly::constant(k, k.one(), self.nvars);
        }
        assert!(n <= 20, "symbolic determinant limited to 20x20");
        let mut layer: BTreeMap<u32, MPoly> = BTreeMap::new();
        layer.insert(0, MPoly::constant(k, k.one(), self.nvars));
        for r in 0..n {
            let mut next: BTreeMap<u32, MPoly> = BTreeMap::new();
            for (&mask, minor) in &layer {
                for j in 0..n {
                    if mask & (1 << j) != 0 {
                        continue;
                    }
                    let a = self.get(r, j);
                    if a.is_zero() {
                        continue;
                    }
                    let new_mask = mask | (1 << j);
                    // position of j within new_mask gives the cofactor sign
                    let above = (mask >> j).count_ones();
                    let mut t = a.mul(k, minor);
                    if above % 2 == 1 {
                        t = t.neg(k);
                    }
                    let e = next.entry(new_mask).or_insert_with(|| MPoly::zero(self.nvars));
                    *e = e.add(k, &t);
                }
            }
            next.retain(|_, p| !p.is_zero());
            layer = next;
        }
        layer.remove(&((1u32 << n) - 1)).unwrap_or_else(|| MPoly::zero(self.nvars))
    }
}

/// Resultant of two univariate polynomials over `k` in ℚ-variable form:
/// `p`, `q` are polynomials in `var` whose coefficients are polynomials in
/// the remaining variables. Computed as the Sylvester determinant.
pub fn resultant(k: &NumberField, p: &MPoly, q: &MPoly, var: usize) -> MPoly {
    let pc = p.coefficients_in(var);
    let qc = q.coefficients_in(var);
    if pc.is_empty() || qc.is_empty() {
        return MPoly::zero(p.nvars);
    }
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    if m == 0 && n == 0 {
        return MPoly::constant(k, k.one(), p.nvars);
    }
    let size = m + n;
    let mut s = PolyMatrix::zeros(size, size, p.nvars);
    for r in 0..n {
        for (i, c) in pc.iter().rev().enumerate() {
            s.set(r, r + i, c.clone());
        }
    }
    for r in 0..m {
        for (i, c) in qc.iter().rev().enumerate() {
            s.set(n + r, r + i, c.clone());
        }
    }
    s.det(k)
}

pub fn univariate_to_mpoly(p: &[Scalar], nvars: usize, var: usize) -> MPoly {
    MPoly::from_univariate(p, var, nvars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::rat;

    fn q() -> NumberField {
        NumberField::rationals()
    }

    #[test]
    fn diagonal_det() {
        let k = q();
        let mut m = PolyMatrix::zeros(2, 2, 2);
        m.set(0, 0, MPoly::var(&k, 0, 2));
        m.set(1, 1, MPoly::var(&k, 1, 2));
        let d = m.det(&k);
        assert_eq!(d, MPoly::var(&k, 0, 2).mul(&k, &MPoly::var(&k, 1, 2)));
    }

    #[test]
    fn repeated_column_det_is_zero() {
        let k = q();
        let t = MPoly::var(&k, 0, 1);
        let one = MPoly::constant(&k, k.one(), 1);
        let mut m = PolyMatrix::zeros(2, 2, 1);
        m.set(0, 0, t.clone());
        m.set(0, 1, one.clone());
        m.set(1, 0, t);
        m.set(1, 1, one);
        assert!(m.det(&k).is_zero());
    }

    #[test]
    fn det_matches_numeric() {
        let k = q();
        let mut m = PolyMatrix::zeros(3, 3, 1);
        let vals = [[2, 0, 1], [1, 3, 2], [1, 1, 1]];
        for i in 0..3 {
            for j in 0..3 {
                m.set(i, j, MPoly::constant(&k, k.from_int(vals[i][j]), 1));
            }
        }
        // 2(3-2) - 0 + 1(1-3) = 0
        assert!(m.det(&k).is_zero());
        m.set(2, 2, MPoly::constant(&k, k.from_int(2), 1));
        assert_eq!(m.det(&k), MPoly::constant(&k, k.from_int(2 * 4 + (1 - 3)), 1));
    }

    #[test]
    fn resultant_detects_common_root() {
        let k = q();
        // p = x^2 - 1, q = x - y: Res_x = y^2 - 1
        let x = MPoly::var(&k, 0, 2);
        let y = MPoly::var(&k, 1, 2);
        let one = MPoly::constant(&k, k.one(), 2);
        let p = x.mul(&k, &x).sub(&k, &one);
        let qq = x.sub(&k, &y);
        let r = resultant(&k, &p, &qq, 0);
        let expect = y.mul(&k, &y).sub(&k, &one);
        assert!(r == expect || r == expect.neg(&k));
        assert_eq!(r.eval(&k, &[k.zero(), k.from_rat(rat(1))]), k.zero());
    }
}
