use super::{factor_is_single, poly_degree, rational_signature, FinAlgebra, Subalgebra};
use crate::error::Result;
use crate::exactmath::{vector, Scalar};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisionStatus {
    Certified,
    NotDivision,
    Unknown,
}

impl DivisionStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            DivisionStatus::Certified => "division",
            DivisionStatus::NotDivision => "not-division",
            DivisionStatus::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityCertificate {
    pub dim: usize,
    pub radical_dim: usize,
    pub center_dim: usize,
    /// `None` when the test could not be decided.
    pub center_is_field: Option<bool>,
    pub simple: bool,
    pub division: DivisionStatus,
}

/// Integer combinations of `m` basis vectors, unit vectors first, then a
/// fixed walk through small coefficient boxes.
fn candidates(m: usize, cap: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| i64::from(i == j)).collect()).collect();
    'outer: for bound in 1..=3i64 {
        let width = (2 * bound + 1) as usize;
        let total = u32::try_from(m).ok().and_then(|e| width.checked_pow(e)).unwrap_or(usize::MAX);
        for code in 0..total {
            let mut c = Vec::with_capacity(m);
            let mut x = code;
            for _ in 0..m {
                c.push((x % width) as i64 - bound);
                x /= width;
            }
            if c.iter().all(|&v| v.abs() < bound) || c.iter().all(|&v| v == 0) {
                continue;
            }
            out.push(c);
            if out.len() >= cap {
                break 'outer;
            }
        }
    }
    out
}

fn combo(a: &FinAlgebra, basis: &[Vec<Scalar>], c: &[i64]) -> Vec<Scalar> {
    let k = &a.field;
    let mut v = a.zero();
    for (b, &ci) in basis.iter().zip(c) {
        if ci != 0 {
            vector::axpy(k, &mut v, &k.from_int(ci), b);
        }
    }
    v
}

/// Decides whether a commutative semisimple algebra is a field, via an
/// element whose minimal polynomial has full degree.
fn commutative_is_field(z: &FinAlgebra) -> Option<bool> {
    let m = z.dim;
    if m == 1 {
        return Some(true);
    }
    let basis: Vec<Vec<Scalar>> = (0..m).map(|i| z.basis(i)).collect();
    for c in candidates(m, 400) {
        let x = combo(z, &basis, &c);
        let p = z.min_poly(&x);
        let deg = poly_degree(&p);
        if deg < m {
            // a reducible minimal polynomial already exhibits zero divisors
            if let Ok(false) = factor_is_single(&z.field, &p) {
                return Some(false);
            }
            continue;
        }
        return factor_is_single(&z.field, &p).ok();
    }
    None
}

fn find_zero_divisor(a: &FinAlgebra) -> bool {
    let basis: Vec<Vec<Scalar>> = (0..a.dim).map(|i| a.basis(i)).collect();
    candidates(a.dim, 60).into_iter().any(|c| {
        let x = combo(a, &basis, &c);
        let p = a.min_poly(&x);
        matches!(factor_is_single(&a.field, &p), Ok(false))
    })
}

pub(super) fn certify(a: &FinAlgebra) -> Result<SimplicityCertificate> {
    let radical_dim = a.jacobson_radical().dim();
    let amb = Arc::new(a.clone());
    let center = Subalgebra::from_space(&amb, a.center(), "Z")?;
    let center_dim = center.dim();
    let center_is_field = if radical_dim == 0 { commutative_is_field(&center.to_algebra()) } else { None };
    let simple = radical_dim == 0 && center_is_field == Some(true);
    let division = if !simple {
        DivisionStatus::NotDivision
    } else if center_dim == a.dim {
        DivisionStatus::Certified
    } else if find_zero_divisor(a) {
        DivisionStatus::NotDivision
    } else if a.field.is_rationals() && a.dim == 4 && center_dim == 1 {
        // a quaternion algebra over Q ramified at infinity is a division algebra;
        // that is exactly when the trace form has signature (1, 3)
        match rational_signature(&a.field, &a.trace_form()) {
            Some((1, 3, 0)) => DivisionStatus::Certified,
            _ => DivisionStatus::Unknown,
        }
    } else {
        DivisionStatus::Unknown
    };
    Ok(SimplicityCertificate { dim: a.dim, radical_dim, center_dim, center_is_field, simple, division })
}
