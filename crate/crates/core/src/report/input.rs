//! User supplied instances. See `docs/input-schema.md` for the format.

use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{correspondence_json, Section, SCHEMA};
use crate::algebra::{FinAlgebra, Orientation, Subalgebra};
use crate::comatrix::{comatrix_coring, ComatrixCoring, FreeRightModule};
use crate::coring::check_coideal;
use crate::error::{Error, Result};
use crate::exactmath::field::parse_rat;
use crate::exactmath::{vector, NumberField, SVec, Scalar, Subspace};
use crate::galois::{correspondence_entry, is_simple_cosemisimple, j_of, quotient_comodule, r_of};

/// Upper bound on rank × dim A for user instances.
pub const MAX_KDIM: usize = 8;

/// One generator of a coideal: a sum of classes φ ⊗ x.
type Terms = Vec<(SVec, SVec)>;

#[derive(Clone, Debug)]
pub struct UserInstance {
    pub name: String,
    pub field: NumberField,
    pub alg: Arc<FinAlgebra>,
    pub sigma: Arc<FreeRightModule>,
    pub base: Subalgebra,
    pub extensions: Vec<(String, Subalgebra)>,
    pub coideals: Vec<(String, Vec<Terms>)>,
}

impl UserInstance {
    pub fn parameters(&self) -> Value {
        json!({"field": self.field.label(), "algebra_dim": self.alg.dim, "rank": self.sigma.rank})
    }
}

fn schema(pointer: &str, message: impl Into<String>) -> Error {
    Error::Schema { pointer: pointer.to_string(), message: message.into() }
}

pub(super) fn child(pointer: &str, key: impl std::fmt::Display) -> String {
    let key = key.to_string().replace('~', "~0").replace('/', "~1");
    format!("{pointer}/{key}")
}

fn array<'a>(v: &'a Value, pointer: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(pointer, "expected an array"))
}

fn array_of_len<'a>(v: &'a Value, len: usize, pointer: &str) -> Result<&'a Vec<Value>> {
    let a = array(v, pointer)?;
    if a.len() != len {
        return Err(schema(pointer, format!("expected {len} entries, got {}", a.len())));
    }
    Ok(a)
}

fn usize_field(v: &Value, pointer: &str) -> Result<usize> {
    v.as_u64().and_then(|x| usize::try_from(x).ok()).ok_or_else(|| schema(pointer, "expected a non-negative integer"))
}

fn rational(v: &Value, pointer: &str) -> Result<crate::exactmath::Rat> {
    let s = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        _ => return Err(schema(pointer, "expected a rational as a \"p/q\" string or an integer")),
    };
    parse_rat(&s).ok_or_else(|| schema(pointer, format!("{s:?} is not a rational number")))
}

/// A field element: a rational, or its coordinate vector over Q.
pub fn scalar(k: &NumberField, v: &Value, pointer: &str) -> Result<Scalar> {
    match v {
        Value::Array(a) => {
            let deg = k.absolute_degree();
            if a.len() != deg {
                return Err(schema(pointer, format!("expected {deg} coordinates over Q for {}, got {}", k.label(), a.len())));
            }
            let q = a.iter().enumerate().map(|(i, x)| rational(x, &child(pointer, i))).collect::<Result<Vec<_>>>()?;
            Ok(k.from_rationals(&q))
        }
        _ => Ok(k.from_rat(rational(v, pointer)?)),
    }
}

/// An element of A: its coordinate vector, or a field element c standing for c·1.
fn alg_elem(alg: &FinAlgebra, v: &Value, pointer: &str) -> Result<Vec<Scalar>> {
    let k = &alg.field;
    match v {
        Value::Array(a) if a.len() == alg.dim => a
            .iter()
            .enumerate()
            .map(|(i, x)| scalar(k, x, &child(pointer, i)))
            .collect(),
        _ => match scalar(k, v, pointer) {
            Ok(c) => Ok(vector::scale(k, &alg.unit, &c)),
            Err(_) => Err(schema(pointer, format!("expected an element of A ({} coordinates) or a field element", alg.dim))),
        },
    }
}

/// An n×n matrix over A as an element of End(Σ_A).
fn matrix(sigma: &FreeRightModule, v: &Value, pointer: &str) -> Result<Vec<Scalar>> {
    let (n, d) = (sigma.rank, sigma.d());
    let k = sigma.field();
    let mut out = vec![k.zero(); sigma.end_alg.dim];
    for (p, row) in array_of_len(v, n, pointer)?.iter().enumerate() {
        let rp = child(pointer, p);
        for (q, e) in array_of_len(row, n, &rp)?.iter().enumerate() {
            let a = alg_elem(&sigma.alg, e, &child(&rp, q))?;
            for (s, c) in a.into_iter().enumerate() {
                out[(p * n + q) * d + s] = c;
            }
        }
    }
    Ok(out)
}

/// Σ x_j e_j as a vector of n elements of A.
fn sigma_vec(sigma: &FreeRightModule, v: &Value, pointer: &str, dual: bool) -> Result<SVec> {
    let k = sigma.field();
    let mut out = SVec::zero(sigma.kdim());
    for (j, e) in array_of_len(v, sigma.rank, pointer)?.iter().enumerate() {
        let a = alg_elem(&sigma.alg, e, &child(pointer, j))?;
        let t = if dual {
            sigma.dual_left_act(&a, &sigma.dual_basis_vec(j))
        } else {
            sigma.right_act(&sigma.basis_vec(j), &a)
        };
        out.add_assign(k, &t);
    }
    Ok(out)
}

fn algebra(k: &NumberField, v: Option<&Value>) -> Result<Arc<FinAlgebra>> {
    let Some(v) = v else {
        return Ok(Arc::new(FinAlgebra::ground(k)));
    };
    let p = "/algebra";
    let dim = usize_field(v.get("dim").ok_or_else(|| schema(p, "missing \"dim\""))?, "/algebra/dim")?;
    if dim == 0 {
        return Err(schema("/algebra/dim", "must be positive"));
    }
    let mp = "/algebra/mult";
    let rows = array_of_len(v.get("mult").ok_or_else(|| schema(p, "missing \"mult\""))?, dim, mp)?;
    let mut mult = Vec::with_capacity(dim * dim);
    for (i, r) in rows.iter().enumerate() {
        let ri = child(mp, i);
        for (j, c) in array_of_len(r, dim, &ri)?.iter().enumerate() {
            let cj = child(&ri, j);
            let coeffs = array_of_len(c, dim, &cj)?
                .iter()
                .enumerate()
                .map(|(l, x)| scalar(k, x, &child(&cj, l)))
                .collect::<Result<Vec<_>>>()?;
            mult.push(SVec::from_dense(k, &coeffs));
        }
    }
    let up = "/algebra/unit";
    let unit = array_of_len(v.get("unit").ok_or_else(|| schema(p, "missing \"unit\""))?, dim, up)?
        .iter()
        .enumerate()
        .map(|(i, x)| scalar(k, x, &child(up, i)))
        .collect::<Result<Vec<_>>>()?;
    let alg = FinAlgebra::new(k.clone(), dim, mult, unit, "A", Orientation::Native).map_err(|e| schema(p, e.to_string()))?;
    if !alg.is_commutative() || !alg.is_simple_artinian()?.simple {
        return Err(schema(p, "the base algebra must be a field"));
    }
    Ok(Arc::new(alg))
}

fn matrices(sigma: &FreeRightModule, v: &Value, pointer: &str) -> Result<Vec<Vec<Scalar>>> {
    array(v, pointer)?.iter().enumerate().map(|(i, m)| matrix(sigma, m, &child(pointer, i))).collect()
}

fn name_of(v: &Value, pointer: &str, default: String) -> Result<String> {
    match v.get("name") {
        None => Ok(default),
        Some(Value::String(s)) => Ok(s.clone()),
        Some(_) => Err(schema(&child(pointer, "name"), "expected a string")),
    }
}

/// Validates a document and builds the instance; every error carries the
/// JSON pointer of the offending value.
pub fn parse(doc: &Value) -> Result<UserInstance> {
    if !doc.is_object() {
        return Err(schema("", "expected a JSON object"));
    }
    match doc.get("schema") {
        Some(Value::String(s)) if s == SCHEMA => {}
        Some(_) => return Err(schema("/schema", format!("expected {SCHEMA:?}"))),
        None => return Err(schema("/schema", "missing")),
    }
    let name = name_of(doc, "", "input".into())?;
    let field = match doc.get("field") {
        None => NumberField::rationals(),
        Some(Value::String(s)) => NumberField::preset(s)?,
        Some(_) => return Err(schema("/field", "expected a preset name")),
    };
    let alg = algebra(&field, doc.get("algebra"))?;
    let rank = usize_field(doc.get("rank").ok_or_else(|| schema("/rank", "missing"))?, "/rank")?;
    if rank == 0 {
        return Err(schema("/rank", "must be positive"));
    }
    if rank * alg.dim > MAX_KDIM {
        return Err(schema("/rank", format!("rank times dim A must be at most {MAX_KDIM}")));
    }
    let sigma = FreeRightModule::new(&alg, rank);
    let base_gens = match doc.get("base") {
        None => Vec::new(),
        Some(v) => matrices(&sigma, v, "/base")?,
    };
    let base = Subalgebra::closure(&sigma.end_alg, &base_gens, "B");
    let mut extensions = Vec::new();
    if let Some(v) = doc.get("extensions") {
        for (i, e) in array(v, "/extensions")?.iter().enumerate() {
            let p = child("/extensions", i);
            let ename = name_of(e, &p, format!("C{i}"))?;
            let g = e.get("generators").ok_or_else(|| schema(&p, "missing \"generators\""))?;
            let mut gens = base_gens.clone();
            gens.extend(matrices(&sigma, g, &child(&p, "generators"))?);
            extensions.push((ename.clone(), Subalgebra::closure(&sigma.end_alg, &gens, &ename)));
        }
    }
    let mut coideals = Vec::new();
    if let Some(v) = doc.get("coideals") {
        for (i, c) in array(v, "/coideals")?.iter().enumerate() {
            let p = child("/coideals", i);
            let cname = name_of(c, &p, format!("J{i}"))?;
            let gp = child(&p, "generators");
            let g = c.get("generators").ok_or_else(|| schema(&p, "missing \"generators\""))?;
            let mut gens = Vec::new();
            for (l, terms) in array(g, &gp)?.iter().enumerate() {
                let tp = child(&gp, l);
                let mut out = Vec::new();
                for (t, term) in array(terms, &tp)?.iter().enumerate() {
                    let pp = child(&tp, t);
                    let phi = term.get("phi").ok_or_else(|| schema(&pp, "missing \"phi\""))?;
                    let x = term.get("x").ok_or_else(|| schema(&pp, "missing \"x\""))?;
                    out.push((sigma_vec(&sigma, phi, &child(&pp, "phi"), true)?, sigma_vec(&sigma, x, &child(&pp, "x"), false)?));
                }
                gens.push(out);
            }
            coideals.push((cname, gens));
        }
    }
    Ok(UserInstance { name, field, alg, sigma, base, extensions, coideals })
}

fn coideal_vectors(cm: &ComatrixCoring, gens: &[Terms]) -> Vec<Vec<Scalar>> {
    let k = cm.field();
    gens.iter()
        .map(|terms| {
            let mut v = SVec::zero(cm.coring.dim());
            for (phi, x) in terms {
                v.add_assign(k, &cm.class(phi, x));
            }
            v.to_dense(k)
        })
        .collect()
}

fn coideal_entry(cm: &ComatrixCoring, name: &str, gens: &[Terms]) -> Result<Value> {
    let k = cm.field();
    let vecs = coideal_vectors(cm, gens);
    if let Err(e) = check_coideal(&cm.coring, &vecs).into_result() {
        let Error::NotACoideal { index, condition } = &e else { return Err(e) };
        return Ok(json!({
            "instance": name,
            "coideal": false,
            "error": {"kind": e.kind(), "message": e.to_string(), "index": index, "condition": condition},
            "passed": false,
        }));
    }
    let j = Subspace::span(k, cm.coring.dim(), &vecs);
    let (q, m) = quotient_comodule(cm, &j)?;
    let r = r_of(cm, &j)?;
    let jr = j_of(cm, &r)?;
    let simple = r.is_simple_artinian()?.simple;
    let scs = is_simple_cosemisimple(&m)?;
    let roundtrip = jr == j;
    Ok(json!({
        "instance": name,
        "coideal": true,
        "J_dim": j.dim(),
        "quotient_dim": q.coring.dim(),
        "R_dim": r.dim(),
        "R_simple_artinian": simple,
        "roundtrip_JR": roundtrip,
        "simple_cosemisimple": scs.value(),
        "passed": roundtrip && scs.value(),
    }))
}

fn failed_entry(name: &str, e: &Error) -> Value {
    json!({"instance": name, "error": {"kind": e.kind(), "message": e.to_string()}, "passed": false})
}

/// Correspondence entries for the listed extensions and coideals. Errors
/// raised by a single entry are recorded in that entry.
pub(super) fn correspondence_part(inst: &UserInstance, s: &mut Section) -> Result<()> {
    let cm = comatrix_coring(&inst.sigma, &inst.base)?;
    let rows: Vec<Value> = inst
        .extensions
        .par_iter()
        .map(|(name, c)| match correspondence_entry(&cm, name, c) {
            Ok(e) => correspondence_json(&e),
            Err(e) => failed_entry(name, &e),
        })
        .collect();
    for r in &rows {
        let name = r["instance"].as_str().unwrap_or_default();
        s.check(&format!("{name}: RJ = C and JR = J, simple cosemisimple"), r["passed"] == Value::Bool(true));
    }
    s.put("entries", rows);
    let rows: Vec<Value> = inst
        .coideals
        .par_iter()
        .map(|(name, gens)| coideal_entry(&cm, name, gens).unwrap_or_else(|e| failed_entry(name, &e)))
        .collect();
    for r in &rows {
        let name = r["instance"].as_str().unwrap_or_default();
        if r["coideal"] == Value::Bool(false) {
            let idx = r["error"]["index"].as_u64().unwrap_or(0);
            let cond = r["error"]["condition"].as_str().unwrap_or("");
            s.check(&format!("{name}: coideal (generator {idx} fails {cond})"), false);
        } else {
            s.check(&format!("{name}: coideal with JR(J) = J, simple cosemisimple"), r["passed"] == Value::Bool(true));
        }
    }
    s.put("coideals", rows);
    Ok(())
}
