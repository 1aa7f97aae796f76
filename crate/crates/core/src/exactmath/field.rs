use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::upoly;
use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Element of a field tower. `Ext` holds power-basis coordinates over the
/// next field down, always of full length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rat(Rat),
    Ext(Vec<Scalar>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Certified,
    Asserted,
}

enum Kind {
    Rationals,
    Extension {
        base: NumberField,
        /// monic, low to high, length degree + 1
        min_poly: Vec<Scalar>,
        irreducibility: Irreducibility,
    },
}

struct Node {
    label: String,
    kind: Kind,
}

/// ℚ or a simple extension of another `NumberField`. All arithmetic on
/// [`Scalar`] goes through the field that owns it.
#[derive(Clone)]
pub struct NumberField(Arc<Node>);

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.0.label)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&self.0.kind, &other.0.kind) {
            (Kind::Rationals, Kind::Rationals) => true,
            (
                Kind::Extension { base: b1, min_poly: m1, .. },
                Kind::Extension { base: b2, min_poly: m2, .. },
            ) => b1 == b2 && m1 == m2,
            _ => false,
        }
    }
}

impl Eq for NumberField {}

impl NumberField {
    pub fn rationals() -> Self {
        NumberField(Arc::new(Node { label: "Q".into(), kind: Kind::Rationals }))
    }

    /// Adjoin a root of `min_poly` (monic, coefficients low to high in `base`).
    /// Degree one returns `base` itself. An explicit root in `base` is an
    /// error; when irreducibility cannot be decided the flag is `Asserted`.
    pub fn extend(base: &NumberField, min_poly: Vec<Scalar>, label: &str) -> Result<Self> {
        let flag = match super::roots::irreducibility(base, &min_poly) {
            Ok(f) => f,
            Err(Error::Undecidable(_)) => Irreducibility::Asserted,
            Err(e) => return Err(e),
        };
        Self::build(base, min_poly, label, flag)
    }

    /// Skips the irreducibility check entirely. Used for split algebras such
    /// as F[x]/(x^n - 1), which are not fields but still valid algebras.
    pub fn extend_unchecked(base: &NumberField, min_poly: Vec<Scalar>, label: &str) -> Result<Self> {
        Self::build(base, min_poly, label, Irreducibility::Asserted)
    }

    fn build(base: &NumberField, mut min_poly: Vec<Scalar>, label: &str, flag: Irreducibility) -> Result<Self> {
        upoly::trim(base, &mut min_poly);
        if min_poly.len() < 2 {
            return Err(Error::InvalidPolynomial("degree must be at least 1".into()));
        }
        if !base.is_one(min_poly.last().unwrap()) {
            return Err(Error::InvalidPolynomial("polynomial must be monic".into()));
        }
        if min_poly.len() == 2 {
            return Ok(base.clone());
        }
        Ok(NumberField(Arc::new(Node {
            label: label.to_string(),
            kind: Kind::Extension { base: base.clone(), min_poly, irreducibility: flag },
        })))
    }

    pub fn preset(name: &str) -> Result<Self> {
        let q = Self::rationals();
        let c = |v: &[i64]| v.iter().map(|&x| Scalar::Rat(rat(x))).collect::<Vec<_>>();
        match name {
            "Q" => Ok(q),
            "Qi" => Self::extend(&q, c(&[1, 0, 1]), "Q(i)"),
            "Qw3" => Self::extend(&q, c(&[1, 1, 1]), "Q(w3)"),
            "Qw4" => Self::extend(&q, c(&[1, 0, 1]), "Q(w4)"),
            p if p.starts_with("GF") || p.starts_with("F_") => {
                let digits: String = p.chars().filter(|c| c.is_ascii_digit()).collect();
                Err(Error::UnsupportedCharacteristic(digits.parse().unwrap_or(0)))
            }
            other => Err(Error::Schema {
                pointer: "/field".into(),
                message: format!("unknown field preset {other:?} (expected Q, Qi, Qw3, Qw4)"),
            }),
        }
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.0.kind, Kind::Rationals)
    }

    pub fn base(&self) -> Option<&NumberField> {
        match &self.0.kind {
            Kind::Rationals => None,
            Kind::Extension { base, .. } => Some(base),
        }
    }

    pub fn min_poly(&self) -> Option<&[Scalar]> {
        match &self.0.kind {
            Kind::Rationals => None,
            Kind::Extension { min_poly, .. } => Some(min_poly),
        }
    }

    pub fn irreducibility(&self) -> Irreducibility {
        match &self.0.kind {
            Kind::Rationals => Irreducibility::Certified,
            Kind::Extension { base, irreducibility, .. } => {
                if *irreducibility == Irreducibility::Asserted {
                    Irreducibility::Asserted
                } else {
                    base.irreducibility()
                }
            }
        }
    }

    /// Degree over the immediate base.
    pub fn degree(&self) -> usize {
        match &self.0.kind {
            Kind::Rationals => 1,
            Kind::Extension { min_poly, .. } => min_poly.len() - 1,
        }
    }

    pub fn absolute_degree(&self) -> usize {
        match &self.0.kind {
            Kind::Rationals => 1,
            Kind::Extension { base, .. } => self.degree() * base.absolute_degree(),
        }
    }

    pub fn zero(&self) -> Scalar {
        match &self.0.kind {
            Kind::Rationals => Scalar::Rat(Rat::zero()),
            Kind::Extension { base, .. } => Scalar::Ext(vec![base.zero(); self.degree()]),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_rat(Rat::one())
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rat(rat(n))
    }

    pub fn from_rat(&self, r: Rat) -> Scalar {
        match &self.0.kind {
            Kind::Rationals => Scalar::Rat(r),
            Kind::Extension { base, .. } => {
                let mut v = vec![base.zero(); self.degree()];
                v[0] = base.from_rat(r);
                Scalar::Ext(v)
            }
        }
    }

    /// The adjoined root θ.
    pub fn gen(&self) -> Scalar {
        match &self.0.kind {
            Kind::Rationals => Scalar::Rat(Rat::one()),
            Kind::Extension { base, .. } => {
                let mut v = vec![base.zero(); self.degree()];
                v[1] = base.one();
                Scalar::Ext(v)
            }
        }
    }

    /// Embed an element of the immediate base.
    pub fn embed(&self, b: &Scalar) -> Scalar {
        match &self.0.kind {
            Kind::Rationals => b.clone(),
            Kind::Extension { base, .. } => {
                let mut v = vec![base.zero(); self.degree()];
                v[0] = b.clone();
                Scalar::Ext(v)
            }
        }
    }

    /// Element with power-basis coordinates `coeffs` over the immediate base.
    pub fn from_coeffs(&self, coeffs: Vec<Scalar>) -> Scalar {
        match &self.0.kind {
            Kind::Rationals => coeffs.into_iter().next().unwrap_or(Scalar::Rat(Rat::zero())),
            Kind::Extension { base, .. } => {
                let mut v = coeffs;
                v.resize(self.degree(), base.zero());
                Scalar::Ext(v)
            }
        }
    }

    pub fn coeffs<'a>(&self, a: &'a Scalar) -> &'a [Scalar] {
        match a {
            Scalar::Ext(v) => v,
            Scalar::Rat(_) => std::slice::from_ref(a),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Ext(v) => {
                let base = self.base().expect("extension element in Q");
                v.iter().all(|c| base.is_zero(c))
            }
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Ext(x), Scalar::Ext(y)) => {
                let base = self.base().unwrap();
                Scalar::Ext(x.iter().zip(y).map(|(p, q)| base.add(p, q)).collect())
            }
            _ => panic!("scalar from a different field"),
        }
    }

    pub fn add_assign(&self, a: &mut Scalar, b: &Scalar) {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => *x += y,
            (Scalar::Ext(x), Scalar::Ext(y)) => {
                let base = self.base().unwrap();
                for (p, q) in x.iter_mut().zip(y) {
                    base.add_assign(p, q);
                }
            }
            _ => panic!("scalar from a different field"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rat(x) => Scalar::Rat(-x),
            Scalar::Ext(x) => {
                let base = self.base().unwrap();
                Scalar::Ext(x.iter().map(|p| base.neg(p)).collect())
            }
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            _ => self.add(a, &self.neg(b)),
        }
    }

    /// a += b * c
    pub fn fma(&self, a: &mut Scalar, b: &Scalar, c: &Scalar) {
        match (&mut *a, b, c) {
            (Scalar::Rat(x), Scalar::Rat(y), Scalar::Rat(z)) => *x += y * z,
            _ => {
                let p = self.mul(b, c);
                self.add_assign(a, &p);
            }
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&self.0.kind, a, b) {
            (Kind::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Kind::Extension { base, min_poly, .. }, Scalar::Ext(x), Scalar::Ext(y)) => {
                let d = x.len();
                let mut prod = vec![base.zero(); 2 * d - 1];
                for (i, xi) in x.iter().enumerate() {
                    if base.is_zero(xi) {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        if !base.is_zero(yj) {
                            base.fma(&mut prod[i + j], xi, yj);
                        }
                    }
                }
                for k in (d..2 * d - 1).rev() {
                    if base.is_zero(&prod[k]) {
                        continue;
                    }
                    let c = std::mem::replace(&mut prod[k], base.zero());
                    for (j, m) in min_poly[..d].iter().enumerate() {
                        if !base.is_zero(m) {
                            let t = base.mul(&c, m);
                            let slot = &mut prod[k - d + j];
                            *slot = base.sub(slot, &t);
                        }
                    }
                }
                prod.truncate(d);
                Scalar::Ext(prod)
            }
            _ => panic!("scalar from a different field"),
        }
    }

    pub fn mul_rat(&self, a: &Scalar, r: &Rat) -> Scalar {
        match a {
            Scalar::Rat(x) => Scalar::Rat(x * r),
            Scalar::Ext(v) => {
                let base = self.base().unwrap();
                Scalar::Ext(v.iter().map(|c| base.mul_rat(c, r)).collect())
            }
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (&self.0.kind, a) {
            (Kind::Rationals, Scalar::Rat(x)) => Ok(Scalar::Rat(x.recip())),
            (Kind::Extension { base, min_poly, .. }, Scalar::Ext(x)) => {
                let mut p = x.clone();
                upoly::trim(base, &mut p);
                let (g, s, _) = upoly::ext_gcd(base, &p, min_poly)?;
                if g.len() != 1 {
                    return Err(Error::ReduciblePolynomial(base.label().to_string()));
                }
                let gi = base.inv(&g[0])?;
                let s = upoly::scale(base, &s, &gi);
                Ok(self.from_coeffs(s))
            }
            _ => panic!("scalar from a different field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut acc = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Integer power allowing negative exponents.
    pub fn powi(&self, a: &Scalar, e: i64) -> Result<Scalar> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(&self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// Coordinates over ℚ (restriction of scalars through the whole tower).
    pub fn to_rationals(&self, a: &Scalar) -> Vec<Rat> {
        match a {
            Scalar::Rat(r) => vec![r.clone()],
            Scalar::Ext(v) => {
                let base = self.base().unwrap();
                v.iter().flat_map(|c| base.to_rationals(c)).collect()
            }
        }
    }

    pub fn from_rationals(&self, q: &[Rat]) -> Scalar {
        match &self.0.kind {
            Kind::Rationals => Scalar::Rat(q[0].clone()),
            Kind::Extension { base, .. } => {
                let bd = base.absolute_degree();
                Scalar::Ext(q.chunks(bd).map(|c| base.from_rationals(c)).collect())
            }
        }
    }

    /// Returns the element as a rational if it lies in ℚ.
    pub fn as_rational(&self, a: &Scalar) -> Option<Rat> {
        let q = self.to_rationals(a);
        if q[1..].iter().all(|c| c.is_zero()) {
            Some(q[0].clone())
        } else {
            None
        }
    }

    /// Root of unity of exact order `n` among ±θ^k, if the field has one.
    pub fn root_of_unity(&self, n: usize) -> Option<Scalar> {
        let one = self.one();
        let mut cands = vec![one.clone(), self.neg(&one)];
        if !self.is_rationals() {
            let t = self.gen();
            for k in 1..=2 * self.absolute_degree() + 2 {
                let p = self.pow(&t, k as u64);
                cands.push(p.clone());
                cands.push(self.neg(&p));
            }
        }
        cands.into_iter().find(|w| {
            self.pow(w, n as u64) == one && (1..n).all(|k| self.pow(w, k as u64) != one)
        })
    }

    pub fn display(&self, a: &Scalar) -> String {
        match (&self.0.kind, a) {
            (Kind::Rationals, Scalar::Rat(r)) => fmt_rat(r),
            (Kind::Extension { base, .. }, Scalar::Ext(v)) => {
                let sym = symbol(self.label());
                let mut parts = Vec::new();
                for (k, c) in v.iter().enumerate() {
                    if base.is_zero(c) {
                        continue;
                    }
                    let cs = base.display(c);
                    let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
                    parts.push(match k {
                        0 => cs,
                        1 if base.is_one(c) => sym.clone(),
                        1 => format!("{cs}*{sym}"),
                        _ if base.is_one(c) => format!("{sym}^{k}"),
                        _ => format!("{cs}*{sym}^{k}"),
                    });
                }
                if parts.is_empty() {
                    "0".into()
                } else {
                    parts.join(" + ")
                }
            }
            _ => format!("{a:?}"),
        }
    }
}

fn symbol(label: &str) -> String {
    match label {
        "Q(i)" => "i".into(),
        "Q(w3)" | "Q(w4)" => "w".into(),
        l => l
            .rfind('(')
            .map(|p| l[p + 1..].trim_end_matches(')').to_string())
            .unwrap_or_else(|| "t".into()),
    }
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        Some(Rat::from_integer(s.parse().ok()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> NumberField {
        NumberField::rationals()
    }

    #[test]
    fn presets_have_expected_degrees() {
        assert_eq!(NumberField::preset("Qi").unwrap().degree(), 2);
        assert_eq!(NumberField::preset("Qw3").unwrap().degree(), 2);
        assert!(matches!(NumberField::preset("GF7"), Err(Error::UnsupportedCharacteristic(7))));
    }

    #[test]
    fn reducible_quadratic_is_rejected() {
        let m = vec![Scalar::Rat(rat(-1)), Scalar::Rat(rat(0)), Scalar::Rat(rat(1))];
        assert!(matches!(NumberField::extend(&q(), m, "bad"), Err(Error::ReduciblePolynomial(_))));
    }

    #[test]
    fn linear_extension_returns_base() {
        let m = vec![Scalar::Rat(rat(-3)), Scalar::Rat(rat(1))];
        assert!(NumberField::extend(&q(), m, "same").unwrap().is_rationals());
    }

    #[test]
    fn inverse_of_i() {
        let k = NumberField::preset("Qi").unwrap();
        let i = k.gen();
        assert_eq!(k.inv(&i).unwrap(), k.neg(&i));
        assert_eq!(k.inv(&k.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_of_one_plus_w3() {
        let k = NumberField::preset("Qw3").unwrap();
        let w = k.gen();
        let a = k.add(&k.one(), &w);
        // (1+w)(-w) = -w - w^2 = 1 since w^2 = -1 - w
        let w2 = k.mul(&w, &w);
        assert_eq!(w2, k.sub(&k.neg(&k.one()), &w));
        assert_eq!(k.inv(&a).unwrap(), k.neg(&w));
    }

    #[test]
    fn tower_arithmetic() {
        let k = NumberField::preset("Qw3").unwrap();
        let two = Scalar::Rat(rat(2));
        let m = vec![k.neg(&k.embed(&two)), k.zero(), k.zero(), k.one()];
        let l = NumberField::extend(&k, m.iter().map(|c| c.clone()).collect(), "Q(w3)(x)").unwrap();
        assert_eq!(l.degree(), 3);
        assert_eq!(l.absolute_degree(), 6);
        let x = l.gen();
        assert_eq!(l.pow(&x, 3), l.from_int(2));
        let y = l.add(&x, &l.embed(&k.gen()));
        let yi = l.inv(&y).unwrap();
        assert_eq!(l.mul(&y, &yi), l.one());
    }

    #[test]
    fn roots_of_unity() {
        let k = NumberField::preset("Qw3").unwrap();
        let w = k.root_of_unity(3).unwrap();
        assert_eq!(k.pow(&w, 3), k.one());
        assert!(NumberField::rationals().root_of_unity(3).is_none());
        assert_eq!(NumberField::rationals().root_of_unity(2), Some(Scalar::Rat(rat(-1))));
    }

    #[test]
    fn rational_roundtrip() {
        let k = NumberField::preset("Qi").unwrap();
        let a = k.add(&k.from_int(3), &k.mul_rat(&k.gen(), &ratio(-1, 2)));
        let q = k.to_rationals(&a);
        assert_eq!(q, vec![rat(3), ratio(-1, 2)]);
        assert_eq!(k.from_rationals(&q), a);
        assert_eq!(k.display(&a), "3 + -1/2*i");
        assert_eq!(parse_rat(" -4/6"), Some(ratio(-2, 3)));
    }
}
