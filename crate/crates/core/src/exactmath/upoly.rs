//! Dense univariate polynomials over a [`NumberField`], low degree first.
//! The zero polynomial is the empty vector.

use super::field::{NumberField, Scalar};
use crate::error::{Error, Result};

pub type Poly = Vec<Scalar>;

pub fn trim(k: &NumberField, p: &mut Poly) {
    while p.last().is_some_and(|c| k.is_zero(c)) {
        p.pop();
    }
}

pub fn degree(p: &[Scalar]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn add(k: &NumberField, a: &[Scalar], b: &[Scalar]) -> Poly {
    let n = a.len().max(b.len());
    let mut r: Poly = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => k.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(k, &mut r);
    r
}

pub fn neg(k: &NumberField, a: &[Scalar]) -> Poly {
    a.iter().map(|c| k.neg(c)).collect()
}

pub fn sub(k: &NumberField, a: &[Scalar], b: &[Scalar]) -> Poly {
    add(k, a, &neg(k, b))
}

pub fn mul(k: &NumberField, a: &[Scalar], b: &[Scalar]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            k.fma(&mut r[i + j], x, y);
        }
    }
    trim(k, &mut r);
    r
}

pub fn scale(k: &NumberField, a: &[Scalar], c: &Scalar) -> Poly {
    let mut r: Poly = a.iter().map(|x| k.mul(x, c)).collect();
    trim(k, &mut r);
    r
}

pub fn monic(k: &NumberField, a: &[Scalar]) -> Result<Poly> {
    let lead = a.last().ok_or(Error::DivisionByZero)?;
    Ok(scale(k, a, &k.inv(lead)?))
}

pub fn divrem(k: &NumberField, a: &[Scalar], b: &[Scalar]) -> Result<(Poly, Poly)> {
    let db = degree(b).ok_or(Error::DivisionByZero)?;
    let lead_inv = k.inv(&b[db])?;
    let mut r: Poly = a.to_vec();
    trim(k, &mut r);
    if r.len() <= db {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![k.zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = k.mul(&r[dr], &lead_inv);
        for (j, bj) in b.iter().enumerate() {
            let t = k.mul(&c, bj);
            r[dr - db + j] = k.sub(&r[dr - db + j], &t);
        }
        q[dr - db] = c;
        r.pop();
        trim(k, &mut r);
    }
    trim(k, &mut q);
    Ok((q, r))
}

/// Returns (g, s, t) with s·a + t·b = g, g = gcd (not normalized).
pub fn ext_gcd(k: &NumberField, a: &[Scalar], b: &[Scalar]) -> Result<(Poly, Poly, Poly)> {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(k, &mut r0);
    trim(k, &mut r1);
    let (mut s0, mut s1) = (vec![k.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![k.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(k, &r0, &r1)?;
        let s2 = sub(k, &s0, &mul(k, &q, &s1));
        let t2 = sub(k, &t0, &mul(k, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    Ok((r0, s0, t0))
}

/// Monic gcd; gcd(0, 0) = 0.
pub fn gcd(k: &NumberField, a: &[Scalar], b: &[Scalar]) -> Result<Poly> {
    let (g, _, _) = ext_gcd(k, a, b)?;
    if g.is_empty() {
        Ok(g)
    } else {
        monic(k, &g)
    }
}

pub fn eval(k: &NumberField, p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = k.zero();
    for c in p.iter().rev() {
        acc = k.add(&k.mul(&acc, x), c);
    }
    acc
}

pub fn derivative(k: &NumberField, p: &[Scalar]) -> Poly {
    let mut r: Poly = p.iter().enumerate().skip(1).map(|(i, c)| k.mul(c, &k.from_int(i as i64))).collect();
    trim(k, &mut r);
    r
}

/// x - r
pub fn linear(k: &NumberField, r: &Scalar) -> Poly {
    vec![k.neg(r), k.one()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zq(v: &[i64]) -> Poly {
        let k = NumberField::rationals();
        let mut p: Poly = v.iter().map(|&x| k.from_int(x)).collect();
        trim(&k, &mut p);
        p
    }

    #[test]
    fn division_identity() {
        let k = NumberField::rationals();
        let a = zq(&[1, 2, 3, 4, 5]);
        let b = zq(&[-1, 0, 2]);
        let (q, r) = divrem(&k, &a, &b).unwrap();
        assert!(r.len() < b.len());
        assert_eq!(add(&k, &mul(&k, &q, &b), &r), a);
    }

    #[test]
    fn bezout_identity() {
        let k = NumberField::rationals();
        let a = mul(&k, &zq(&[1, 1]), &zq(&[2, 0, 1]));
        let b = mul(&k, &zq(&[1, 1]), &zq(&[-3, 1]));
        let (g, s, t) = ext_gcd(&k, &a, &b).unwrap();
        assert_eq!(add(&k, &mul(&k, &s, &a), &mul(&k, &t, &b)), g);
        assert_eq!(gcd(&k, &a, &b).unwrap(), zq(&[1, 1]));
    }
}
