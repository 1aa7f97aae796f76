use super::Coring;
use crate::algebra::{FinAlgebra, Orientation};
use crate::error::Result;
use crate::exactmath::{Echelon, Matrix, SVec, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Left A-linear maps with (f*g)(c) = Σ f(c₁ g(c₂)).
    Left,
    /// Right A-linear maps with (f*g)(c) = Σ g(f(c₁) c₂).
    Right,
}

#[derive(Clone, Debug)]
pub struct DualRing {
    pub side: Side,
    pub algebra: FinAlgebra,
    /// Basis functionals as (dim A) × (dim C) matrices.
    pub functionals: Vec<Matrix>,
}

fn apply(f: &Matrix, v: &SVec, d: usize, k: &crate::exactmath::NumberField) -> Vec<Scalar> {
    let mut out = vec![k.zero(); d];
    for (&j, c) in &v.entries {
        for (r, o) in out.iter_mut().enumerate() {
            k.fma(o, f.get(r, j), c);
        }
    }
    out
}

/// A basis of Hom_A(C, A) on the given side.
pub fn dual_functionals(c: &Coring, side: Side) -> Vec<Matrix> {
    let k = c.field();
    let alg = c.alg();
    let (d, n) = (alg.dim, c.dim());
    let mut sys = Matrix::zeros(k, d * n * d, d * n);
    for s in 0..d {
        let a = alg.basis(s);
        let (act, amat) = match side {
            Side::Left => (&c.carrier.left[s], alg.left_matrix(&a)),
            Side::Right => (&c.carrier.right[s], alg.right_matrix(&a)),
        };
        for j in 0..n {
            for r in 0..d {
                let row = (s * n + j) * d + r;
                for (&i, x) in &act.cols[j].entries {
                    let e = sys.get_mut(row, r * n + i);
                    *e = k.add(e, x);
                }
                for rr in 0..d {
                    let e = sys.get_mut(row, rr * n + j);
                    *e = k.sub(e, amat.get(r, rr));
                }
            }
        }
    }
    sys.kernel_vectors(k).into_iter().map(|v| Matrix::from_vec(d, n, v)).collect()
}

pub fn convolve(c: &Coring, side: Side, f: &Matrix, g: &Matrix) -> Matrix {
    let k = c.field();
    let (d, n) = (c.alg().dim, c.dim());
    let mut out = Matrix::zeros(k, d, n);
    for j in 0..n {
        let mut acc = vec![k.zero(); d];
        for (p, y) in c.square.blocks(&c.delta[j]) {
            let m = &c.square.basis.gens[p];
            let v = match side {
                Side::Left => apply(f, &c.carrier.right_act(m, &apply(g, &y, d, k)), d, k),
                Side::Right => apply(g, &c.carrier.left_act(&apply(f, m, d, k), &y), d, k),
            };
            for (a, b) in acc.iter_mut().zip(&v) {
                k.add_assign(a, b);
            }
        }
        for (r, x) in acc.into_iter().enumerate() {
            out.set(r, j, x);
        }
    }
    out
}

pub fn dual_ring(c: &Coring, side: Side) -> Result<DualRing> {
    let k = c.field();
    let (d, n) = (c.alg().dim, c.dim());
    let functionals = dual_functionals(c, side);
    let m = functionals.len();
    let cols: Vec<Vec<Scalar>> = functionals.iter().map(|f| f.data.clone()).collect();
    let basis = Matrix::from_cols(k, d * n, &cols);
    // coordinates are read off m independent rows of the basis matrix
    let mut ech = Echelon::new(m);
    let rows: Vec<usize> = (0..d * n).filter(|&r| ech.insert(k, basis.row(r).to_vec())).collect();
    let square = Matrix::from_rows(k, m, &rows.iter().map(|&r| basis.row(r).to_vec()).collect::<Vec<_>>());
    let left_inv = square.inverse(k)?;
    let coords = |h: &Matrix| left_inv.mul_vec(k, &rows.iter().map(|&r| h.data[r].clone()).collect::<Vec<_>>());
    let mut mult = Vec::with_capacity(m * m);
    for f in &functionals {
        for g in &functionals {
            mult.push(SVec::from_dense(k, &coords(&convolve(c, side, f, g))));
        }
    }
    let mut eps = Matrix::zeros(k, d, n);
    for (j, e) in c.counit.iter().enumerate() {
        for (r, x) in e.iter().enumerate() {
            eps.set(r, j, x.clone());
        }
    }
    let unit = coords(&eps);
    let label = match side {
        Side::Left => format!("*({})", c.label),
        Side::Right => format!("({})*", c.label),
    };
    let algebra = FinAlgebra::new(k.clone(), m, mult, unit, &label, Orientation::Native)?;
    Ok(DualRing { side, algebra, functionals })
}
