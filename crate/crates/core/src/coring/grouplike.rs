use super::Coring;
use crate::error::{Error, Result};
use crate::exactmath::{groebner, MPoly, NumberField, SVec, Scalar};

pub const GROUPLIKE_MAX_DIM: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeSet {
    /// Carrier coordinates of the group-like elements found.
    pub points: Vec<Vec<Scalar>>,
    /// False when the solution set is infinite and `points` are samples from
    /// coordinate slices.
    pub complete: bool,
}

pub fn is_grouplike(c: &Coring, g: &SVec) -> bool {
    c.apply_delta(g) == c.square.pure(g, g) && c.apply_counit(g) == c.alg().unit
}

/// Solves Δ(g) = g ⊗ g, ε(g) = 1 by elimination.
pub fn grouplike_elements(c: &Coring) -> Result<GrouplikeSet> {
    let n = c.dim();
    if n > GROUPLIKE_MAX_DIM {
        return Err(Error::CarrierTooLarge(n));
    }
    let k = c.field();
    let sq = c.square.dim;
    let mut eqs = vec![MPoly::zero(n); sq];
    for t in 0..n {
        let x = MPoly::var(k, t, n);
        for (&i, v) in &c.delta[t].entries {
            eqs[i] = eqs[i].add(k, &x.scale(k, v));
        }
        for u in 0..n {
            let xy = x.mul(k, &MPoly::var(k, u, n));
            let p = c.square.pure(&c.carrier.unit_vec(t), &c.carrier.unit_vec(u));
            for (&i, v) in &p.entries {
                eqs[i] = eqs[i].sub(k, &xy.scale(k, v));
            }
        }
    }
    let d = c.alg().dim;
    for s in 0..d {
        let mut e = MPoly::constant(k, k.neg(&c.alg().unit[s]), n);
        for t in 0..n {
            e = e.add(k, &MPoly::var(k, t, n).scale(k, &c.counit[t][s]));
        }
        eqs.push(e);
    }
    eqs.retain(|p| !p.is_zero());
    let (points, complete) = solve_or_slice(k, &eqs, n, n)?;
    Ok(GrouplikeSet { points, complete })
}

/// Solves a polynomial system; when the solution set is infinite, fixes
/// coordinates to 1 or 0 in a fixed order until a finite slice is found.
fn solve_or_slice(k: &NumberField, eqs: &[MPoly], nvars: usize, depth: usize) -> Result<(Vec<Vec<Scalar>>, bool)> {
    match groebner::solve(k, eqs) {
        Ok(p) => Ok((p, true)),
        Err(Error::Unsupported(_)) if depth > 0 => {
            for v in 0..nvars {
                for val in [1, 0] {
                    let mut e = eqs.to_vec();
                    e.push(MPoly::var(k, v, nvars).sub(k, &MPoly::constant(k, k.from_int(val), nvars)));
                    if let Ok((pts, _)) = solve_or_slice(k, &e, nvars, depth - 1) {
                        if !pts.is_empty() {
                            return Ok((pts, false));
                        }
                    }
                }
            }
            Ok((Vec::new(), false))
        }
        Err(e) => Err(e),
    }
}
