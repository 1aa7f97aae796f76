//! Buchberger's algorithm in lex order and a solver for zero-dimensional
//! systems whose coordinates are all roots in the ground field.

use std::collections::{BTreeSet, VecDeque};

use super::field::{NumberField, Scalar};
use super::matrix::{rational_signature, Matrix};
use super::mpoly::{MPoly, Monomial};
use super::roots;
use crate::error::{Error, Result};

fn monic(k: &NumberField, p: &MPoly) -> MPoly {
    let (_, c) = p.leading().expect("monic of zero polynomial");
    p.scale(k, &k.inv(c).unwrap())
}

/// Full reduction of `f` modulo `g`.
pub fn reduce(k: &NumberField, f: &MPoly, g: &[MPoly]) -> MPoly {
    let mut p = f.clone();
    let mut r = MPoly::zero(f.nvars);
    while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = g.iter().find(|gi| gi.leading().is_some_and(|(lm, _)| lm.divides(&m)));
        match divisor {
            Some(gi) => {
                let (lm, lc) = gi.leading().unwrap();
                let factor = k.div(&c, lc).unwrap();
                p = p.sub(k, &gi.mul_term(k, &factor, &m.div(lm)));
            }
            None => {
                p.terms.remove(&m);
                r.terms.insert(m, c);
            }
        }
    }
    r
}

fn s_poly(k: &NumberField, f: &MPoly, g: &MPoly) -> MPoly {
    let (mf, cf) = f.leading().unwrap();
    let (mg, cg) = g.leading().unwrap();
    let l = mf.lcm(mg);
    let a = f.mul_term(k, &k.inv(cf).unwrap(), &l.div(mf));
    let b = g.mul_term(k, &k.inv(cg).unwrap(), &l.div(mg));
    a.sub(k, &b)
}

/// Reduced lex Gröbner basis, each element monic, sorted by leading monomial.
pub fn groebner(k: &NumberField, polys: &[MPoly]) -> Vec<MPoly> {
    let mut g: Vec<MPoly> = polys.iter().filter(|p| !p.is_zero()).map(|p| monic(k, p)).collect();
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push_back((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop_front() {
        let (mi, _) = g[i].leading().unwrap();
        let (mj, _) = g[j].leading().unwrap();
        if mi.lcm(mj) == mi.mul(mj) {
            continue;
        }
        let r = reduce(k, &s_poly(k, &g[i], &g[j]), &g);
        if !r.is_zero() {
            let r = monic(k, &r);
            let n = g.len();
            g.push(r);
            for t in 0..n {
                pairs.push_back((t, n));
            }
        }
    }
    // minimalize
    let mut keep: Vec<MPoly> = Vec::new();
    for (idx, p) in g.iter().enumerate() {
        let (m, _) = p.leading().unwrap();
        let redundant = g.iter().enumerate().any(|(j, q)| {
            let (mq, _) = q.leading().unwrap();
            j != idx && mq.divides(m) && (mq != m || j < idx)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    // interreduce
    let mut out = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<MPoly> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
        let (m, c) = keep[i].leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut tail = keep[i].clone();
        tail.terms.remove(&m);
        let mut r = reduce(k, &tail, &others);
        r.terms.insert(m, c);
        out.push(monic(k, &r));
    }
    out.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    out
}

/// All points of k^n where the polynomials vanish. Fails if the solution set
/// is infinite or a root search is outside the supported range.
pub fn solve(k: &NumberField, polys: &[MPoly]) -> Result<Vec<Vec<Scalar>>> {
    let nvars = polys.first().map_or(0, |p| p.nvars);
    let mut out = Vec::new();
    let assigned = vec![None; nvars];
    solve_rec(k, polys, assigned, &mut out)?;
    out.sort();
    out.dedup();
    out.retain(|pt| polys.iter().all(|p| k.is_zero(&p.eval(k, pt))));
    Ok(out)
}

fn solve_rec(k: &NumberField, polys: &[MPoly], assigned: Vec<Option<Scalar>>, out: &mut Vec<Vec<Scalar>>) -> Result<()> {
    let free: Vec<usize> = (0..assigned.len()).filter(|&i| assigned[i].is_none()).collect();
    let g = groebner(k, polys);
    if g.iter().any(|p| p.leading().is_some_and(|(m, _)| m.degree() == 0)) {
        return Ok(());
    }
    if free.is_empty() {
        out.push(assigned.into_iter().map(|x| x.unwrap()).collect());
        return Ok(());
    }
    // a univariate generator in some free variable, preferring the last one
    let pick = free.iter().rev().find_map(|&v| {
        g.iter()
            .find(|p| {
                let s = p.support_vars();
                s.len() == 1 && s[0] == v
            })
            .map(|p| (v, p.clone()))
    });
    let Some((v, uni)) = pick else {
        if g.iter().any(|p| has_no_real_zero(k, p)) {
            return Ok(());
        }
        return Err(Error::Unsupported("solution set is not finite".into()));
    };
    let u = uni.to_univariate(k, v).unwrap();
    for r in roots::roots(k, &u)? {
        let sub: Vec<MPoly> = g.iter().map(|p| p.substitute(k, v, &r)).filter(|p| !p.is_zero()).collect();
        let mut a = assigned.clone();
        a[v] = Some(r);
        solve_rec(k, &sub, a, out)?;
    }
    Ok(())
}

/// True when p is a rational polynomial of degree at most 2 that is definite
/// on all of R^n, so it has no real (hence no rational) zero.
fn has_no_real_zero(k: &NumberField, p: &MPoly) -> bool {
    if !k.is_rationals() || p.total_degree() > 2 {
        return false;
    }
    let vars = p.support_vars();
    let m = vars.len();
    let pos = |v: usize| vars.iter().position(|&x| x == v).unwrap();
    let half = k.from_rat(super::field::ratio(1, 2));
    let mut q = Matrix::zeros(k, m + 1, m + 1);
    for (mono, c) in &p.terms {
        let idx: Vec<usize> = mono.0.iter().enumerate().flat_map(|(v, &e)| std::iter::repeat(v).take(e as usize)).collect();
        let (i, j, c) = match idx.as_slice() {
            [] => (m, m, c.clone()),
            [a] => (pos(*a), m, k.mul(c, &half)),
            [a, b] if a == b => (pos(*a), pos(*a), c.clone()),
            [a, b] => (pos(*a), pos(*b), k.mul(c, &half)),
            _ => return false,
        };
        let e = k.add(q.get(i, j), &c);
        q.set(i, j, e.clone());
        if i != j {
            q.set(j, i, e);
        }
    }
    matches!(rational_signature(k, &q), Some((a, 0, 0)) | Some((0, a, 0)) if a == m + 1)
}

/// Distinct leading monomials, for diagnostics.
pub fn leading_monomials(g: &[MPoly]) -> BTreeSet<Monomial> {
    g.iter().filter_map(|p| p.leading().map(|(m, _)| m.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_meets_line() {
        let k = NumberField::rationals();
        let x = MPoly::var(&k, 0, 2);
        let y = MPoly::var(&k, 1, 2);
        let one = MPoly::constant(&k, k.one(), 2);
        // x^2 + y^2 = 1, x = y + 1 -> (1, 0), (0, -1)
        let f = x.mul(&k, &x).add(&k, &y.mul(&k, &y)).sub(&k, &one);
        let g = x.sub(&k, &y).sub(&k, &one);
        let sols = solve(&k, &[f, g]).unwrap();
        assert_eq!(sols, vec![vec![k.zero(), k.from_int(-1)], vec![k.one(), k.zero()]]);
    }

    #[test]
    fn inconsistent_system() {
        let k = NumberField::rationals();
        let x = MPoly::var(&k, 0, 1);
        let one = MPoly::constant(&k, k.one(), 1);
        assert!(solve(&k, &[x.clone(), x.sub(&k, &one)]).unwrap().is_empty());
        assert_eq!(groebner(&k, &[x.clone(), x.sub(&k, &one)]), vec![one]);
    }

    #[test]
    fn sum_of_squares_plus_one_has_no_rational_points() {
        let k = NumberField::rationals();
        let x = MPoly::var(&k, 0, 2);
        let y = MPoly::var(&k, 1, 2);
        let one = MPoly::constant(&k, k.one(), 2);
        let f = x.mul(&k, &x).add(&k, &y.mul(&k, &y)).add(&k, &one);
        assert!(solve(&k, &[f]).unwrap().is_empty());
        // x^2 + y^2 - 1 has infinitely many rational points and is refused
        let g = x.mul(&k, &x).add(&k, &y.mul(&k, &y)).sub(&k, &one);
        assert!(solve(&k, &[g]).is_err());
    }

    #[test]
    fn positive_dimensional_is_refused() {
        let k = NumberField::rationals();
        let x = MPoly::var(&k, 0, 2);
        assert!(solve(&k, &[x]).is_err());
    }
}
