//! Roots and small factorizations: complete over ℚ up to degree 4 and over
//! quadratic fields up to degree 3.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{Irreducibility, NumberField, Rat, Scalar};
use super::mpoly::{resultant, MPoly};
use super::upoly::{self, Poly};
use crate::error::{Error, Result};

const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let v = n
        .to_u64()
        .filter(|&v| v <= DIVISOR_LIMIT)
        .ok_or_else(|| Error::Undecidable(format!("integer {n} too large for divisor enumeration")))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            small.push(BigInt::from(d));
            if d * d != v {
                large.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Integer coefficient vector proportional to `p`.
fn integral(p: &[Rat]) -> Vec<BigInt> {
    let l = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect()
}

fn horner_q(p: &[Rat], x: &Rat) -> Rat {
    p.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
}

/// Distinct rational roots, sorted.
pub fn rational_roots(p: &[Rat]) -> Result<Vec<Rat>> {
    let mut c: Vec<Rat> = p.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.len() <= 1 {
        return Ok(Vec::new());
    }
    let mut roots = Vec::new();
    let lead_zero = c.iter().take_while(|x| x.is_zero()).count();
    if lead_zero > 0 {
        roots.push(Rat::zero());
        c.drain(..lead_zero);
    }
    if c.len() > 1 {
        let z = integral(&c);
        let num = positive_divisors(&z[0])?;
        let den = positive_divisors(z.last().unwrap())?;
        for a in &num {
            for b in &den {
                if !a.gcd(b).is_one() {
                    continue;
                }
                for s in [1, -1] {
                    let r = Rat::new(a * BigInt::from(s), b.clone());
                    if horner_q(&c, &r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Distinct roots of `p` lying in `k`.
pub fn roots(k: &NumberField, p: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut p = p.to_vec();
    upoly::trim(k, &mut p);
    match p.len() {
        0 => return Err(Error::InvalidPolynomial("zero polynomial has every element as root".into())),
        1 => return Ok(Vec::new()),
        2 => return Ok(vec![k.neg(&k.div(&p[0], &p[1])?)]),
        _ => {}
    }
    if k.is_rationals() {
        let q: Vec<Rat> = p.iter().map(|c| k.as_rational(c).unwrap()).collect();
        return Ok(rational_roots(&q)?.into_iter().map(Scalar::Rat).collect());
    }
    let base = k.base().unwrap();
    if base.is_rationals() && k.degree() == 2 {
        return quadratic_field_roots(k, &p);
    }
    Err(Error::Undecidable(format!("root search over {} is not supported", k.label())))
}

/// Roots in ℚ(θ), θ² + m1 θ + m0 = 0: write r = u + vθ, split f(r) = P + Qθ
/// over ℚ[u, v], eliminate v with a resultant and back-substitute.
fn quadratic_field_roots(k: &NumberField, f: &[Scalar]) -> Result<Vec<Scalar>> {
    let q = NumberField::rationals();
    let mp = k.min_poly().unwrap();
    let m0 = q.neg(&mp[0]);
    let m1 = q.neg(&mp[1]);
    let (u, v) = (MPoly::var(&q, 0, 2), MPoly::var(&q, 1, 2));
    let mut a = MPoly::constant(&q, q.one(), 2);
    let mut b = MPoly::zero(2);
    let mut big_p = MPoly::zero(2);
    let mut big_q = MPoly::zero(2);
    for c in f {
        let cs = k.coeffs(c);
        let (c0, c1) = (&cs[0], &cs[1]);
        let bq = b.scale(&q, c1);
        big_p = big_p.add(&q, &a.scale(&q, c0)).add(&q, &bq.scale(&q, &m0));
        big_q = big_q.add(&q, &b.scale(&q, c0)).add(&q, &a.scale(&q, c1)).add(&q, &bq.scale(&q, &m1));
        // (a + bθ)(u + vθ) with θ² = m0 + m1 θ
        let bv = b.mul(&q, &v);
        let na = a.mul(&q, &u).add(&q, &bv.scale(&q, &m0));
        let nb = a.mul(&q, &v).add(&q, &b.mul(&q, &u)).add(&q, &bv.scale(&q, &m1));
        a = na;
        b = nb;
    }
    if big_p.is_zero() || big_q.is_zero() {
        return Err(Error::Undecidable("degenerate real/imaginary split".into()));
    }
    let res = resultant(&q, &big_p, &big_q, 1);
    if res.is_zero() {
        return Err(Error::Undecidable("vanishing resultant".into()));
    }
    let res_u: Vec<Rat> = res.to_univariate(&q, 0).unwrap().iter().map(|c| q.as_rational(c).unwrap()).collect();
    let mut out = Vec::new();
    for u0 in rational_roots(&res_u)? {
        let su = Scalar::Rat(u0.clone());
        let pv = big_p.substitute(&q, 0, &su).to_univariate(&q, 1).unwrap();
        let qv = big_q.substitute(&q, 0, &su).to_univariate(&q, 1).unwrap();
        let g = upoly::gcd(&q, &pv, &qv)?;
        if g.is_empty() {
            return Err(Error::Undecidable("positive-dimensional root set".into()));
        }
        let gq: Vec<Rat> = g.iter().map(|c| q.as_rational(c).unwrap()).collect();
        for v0 in rational_roots(&gq)? {
            let r = k.from_coeffs(vec![Scalar::Rat(u0.clone()), Scalar::Rat(v0)]);
            if k.is_zero(&upoly::eval(k, f, &r)) && !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Monic integer quartic split into two monic integer quadratics, if possible.
fn quartic_quadratic_split(p: &[Rat]) -> Result<Option<(Vec<Rat>, Vec<Rat>)>> {
    // make monic, then rescale x = y / d so the coefficients are integers
    let lead = p[4].clone();
    let monic: Vec<Rat> = p.iter().map(|c| c / &lead).collect();
    let d = monic.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let dr = Rat::from_integer(d.clone());
    let e: Vec<BigInt> = (0..5)
        .map(|i| (&monic[i] * num_traits::pow(dr.clone(), 4 - i)).to_integer())
        .collect();
    let (e0, e1, e2, e3) = (&e[0], &e[1], &e[2], &e[3]);
    if e0.is_zero() {
        return Ok(None);
    }
    let mut candidates = Vec::new();
    for b in positive_divisors(e0)? {
        candidates.push(b.clone());
        candidates.push(-b);
    }
    for b in candidates {
        let dd = e0 / &b;
        let mut pairs = Vec::new();
        if dd != b {
            let num = e1 - &b * e3;
            let den = &dd - &b;
            if (&num % &den).is_zero() {
                let a = num / den;
                let c = e3 - &a;
                pairs.push((a, c));
            }
        } else if &b * e3 == *e1 {
            // a + c = e3, a c = e2 - 2b
            let s = e3.clone();
            let prod = e2 - BigInt::from(2) * &b;
            let disc = &s * &s - BigInt::from(4) * &prod;
            if !disc.is_negative() {
                let r = disc.sqrt();
                if &r * &r == disc && ((&s + &r) % BigInt::from(2)).is_zero() {
                    let a = (&s + &r) / BigInt::from(2);
                    let c = &s - &a;
                    pairs.push((a, c));
                }
            }
        }
        for (a, c) in pairs {
            if &b + &dd + &a * &c == *e2 && &a * &dd + &b * &c == *e1 {
                // undo the scaling: y^2 + a y + b with y = d x, divided by d^2
                let back = |lin: &BigInt, cst: &BigInt| {
                    vec![Rat::new(cst.clone(), &d * &d), Rat::new(lin.clone(), d.clone()), Rat::one()]
                };
                return Ok(Some((back(&a, &b), back(&c, &dd))));
            }
        }
    }
    Ok(None)
}

pub fn irreducibility(base: &NumberField, poly: &[Scalar]) -> Result<Irreducibility> {
    let mut p = poly.to_vec();
    upoly::trim(base, &mut p);
    let deg = p.len().saturating_sub(1);
    if deg <= 1 {
        return Ok(Irreducibility::Certified);
    }
    if !roots(base, &p)?.is_empty() {
        return Err(Error::ReduciblePolynomial(base.label().to_string()));
    }
    if deg <= 3 {
        return Ok(Irreducibility::Certified);
    }
    if deg == 4 && base.is_rationals() {
        let q: Vec<Rat> = p.iter().map(|c| base.as_rational(c).unwrap()).collect();
        return match quartic_quadratic_split(&q)? {
            Some(_) => Err(Error::ReduciblePolynomial(base.label().to_string())),
            None => Ok(Irreducibility::Certified),
        };
    }
    Err(Error::Undecidable(format!("irreducibility of degree {deg} over {}", base.label())))
}

/// Monic irreducible factors with multiplicity (repeated entries).
pub fn factor(k: &NumberField, p: &[Scalar]) -> Result<Vec<Poly>> {
    let mut rest = upoly::monic(k, p)?;
    let mut out = Vec::new();
    for r in roots(k, &rest)? {
        let lin = upoly::linear(k, &r);
        loop {
            let (quo, rem) = upoly::divrem(k, &rest, &lin)?;
            if !rem.is_empty() {
                break;
            }
            out.push(lin.clone());
            rest = quo;
        }
    }
    match rest.len().saturating_sub(1) {
        0 => {}
        2 | 3 => out.push(rest),
        4 if k.is_rationals() => {
            let q: Vec<Rat> = rest.iter().map(|c| k.as_rational(c).unwrap()).collect();
            match quartic_quadratic_split(&q)? {
                Some((f, g)) => {
                    out.push(f.into_iter().map(Scalar::Rat).collect());
                    out.push(g.into_iter().map(Scalar::Rat).collect());
                }
                None => out.push(rest),
            }
        }
        d => return Err(Error::Undecidable(format!("factorization of degree {d} over {}", k.label()))),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{rat, ratio};

    fn qp(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::Rat(rat(x))).collect()
    }

    #[test]
    fn rational_roots_of_cubic() {
        // (2x - 1)(x + 3)(x - 2) = 2x^3 + x^2 - 13x + 6
        let r = rational_roots(&[rat(6), rat(-13), rat(1), rat(2)]).unwrap();
        assert_eq!(r, vec![rat(-3), ratio(1, 2), rat(2)]);
    }

    #[test]
    fn quartic_splits_into_quadratics() {
        let q = NumberField::rationals();
        // (x^2 + 1)(x^2 + 2)
        assert!(irreducibility(&q, &qp(&[2, 0, 3, 0, 1])).is_err());
        // x^4 + 1 is irreducible over Q
        assert_eq!(irreducibility(&q, &qp(&[1, 0, 0, 0, 1])).unwrap(), Irreducibility::Certified);
        assert_eq!(factor(&q, &qp(&[2, 0, 3, 0, 1])).unwrap().len(), 2);
    }

    #[test]
    fn roots_in_gaussian_field() {
        let k = NumberField::preset("Qi").unwrap();
        let p: Vec<Scalar> = qp(&[1, 0, 1]).iter().map(|c| k.embed(c)).collect();
        let r = roots(&k, &p).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.contains(&k.gen()));
        // x^2 - 2 has no root in Q(i)
        let p2: Vec<Scalar> = qp(&[-2, 0, 1]).iter().map(|c| k.embed(c)).collect();
        assert!(roots(&k, &p2).unwrap().is_empty());
    }

    #[test]
    fn cube_roots_over_eisenstein_field() {
        let k = NumberField::preset("Qw3").unwrap();
        let emb = |v: &[i64]| qp(v).iter().map(|c| k.embed(c)).collect::<Vec<_>>();
        assert!(roots(&k, &emb(&[-2, 0, 0, 1])).unwrap().is_empty());
        // x^3 - 1 splits completely over Q(w3)
        assert_eq!(roots(&k, &emb(&[-1, 0, 0, 1])).unwrap().len(), 3);
        assert_eq!(irreducibility(&k, &emb(&[-3, 0, 0, 1])).unwrap(), Irreducibility::Certified);
    }
}
