//! JSON reports shared by the command line front end and the bindings.
//!
//! Every report is a `serde_json::Value` with keys in insertion order, so
//! identical requests serialize to identical bytes.

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::comatrix::{canonical_coaction, canonical_map, comatrix_coring, comod_end, FreeRightModule};
use crate::coring::{grouplike_elements, GrouplikeSet};
use crate::duality::{dual_iso_end, verify_theorem_jb, DualIso, JbEntry};
use crate::error::{Error, Result};
use crate::examples::{self, AOmega, AppendixCase, EmbeddingKind};
use crate::exactmath::field::{fmt_rat, parse_rat};
use crate::exactmath::{vector, NumberField, Scalar};
use crate::galois::{
    correspondence_entry, enumerate_coideals, is_simple_cosemisimple, pjb_closure, quotient_comodule, r_of,
    ConjugacyCertificate, CorrespondenceEntry, SimpleCosemisimple, Verdict,
};

pub mod input;

pub const SCHEMA: &str = "coring-lab/1";

/// Parameters of a built-in instance as given on the command line.
#[derive(Clone, Debug, Default)]
pub struct InstanceParams {
    pub n: Option<usize>,
    pub field: Option<String>,
    pub omega: Option<String>,
    pub alpha: Option<String>,
    pub beta: Option<String>,
}

pub fn scalar_json(k: &NumberField, a: &Scalar) -> Value {
    Value::Array(k.to_rationals(a).iter().map(|r| Value::String(fmt_rat(r))).collect())
}

/// An element of M_n(A) as an n×n array of A-coordinate vectors.
pub fn matrix_json(sigma: &FreeRightModule, f: &[Scalar]) -> Value {
    let k = sigma.field();
    let n = sigma.rank;
    let rows = (0..n)
        .map(|p| {
            Value::Array(
                (0..n)
                    .map(|q| Value::Array(sigma.entry(f, p, q).iter().map(|c| scalar_json(k, c)).collect()))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

/// Reads "p/q" or a comma separated list of rational coordinates.
pub fn parse_scalar_str(k: &NumberField, s: &str, pointer: &str) -> Result<Scalar> {
    let bad = |m: String| Error::Schema { pointer: pointer.to_string(), message: m };
    let parts: Vec<&str> = s.split(',').collect();
    let q = parts
        .iter()
        .map(|p| parse_rat(p).ok_or_else(|| bad(format!("{p:?} is not a rational number"))))
        .collect::<Result<Vec<_>>>()?;
    let deg = k.absolute_degree();
    match q.len() {
        1 => Ok(k.from_rat(q[0].clone())),
        l if l == deg => Ok(k.from_rationals(&q)),
        l => Err(bad(format!("expected 1 or {deg} coordinates over {}, got {l}", k.label()))),
    }
}

/// Accumulates the facts and checks of one instance.
pub(crate) struct Section {
    body: Map<String, Value>,
    facts: Map<String, Value>,
    checks: Vec<Value>,
    all: bool,
}

impl Section {
    fn new(instance: &str) -> Self {
        let mut body = Map::new();
        body.insert("instance".into(), Value::String(instance.into()));
        Section { body, facts: Map::new(), checks: Vec::new(), all: true }
    }

    fn put(&mut self, key: &str, v: impl Into<Value>) {
        self.body.insert(key.into(), v.into());
    }

    fn fact(&mut self, key: &str, v: impl Into<Value>) {
        self.facts.insert(key.into(), v.into());
    }

    fn check(&mut self, name: &str, passed: bool) {
        self.all &= passed;
        self.checks.push(json!({"name": name, "passed": passed}));
    }

    fn finish(mut self) -> Value {
        self.body.insert("facts".into(), Value::Object(self.facts));
        self.body.insert("checks".into(), Value::Array(self.checks));
        self.body.insert("passed".into(), Value::Bool(self.all));
        Value::Object(self.body)
    }
}

/// Wraps per-instance sections into a top level report.
pub fn envelope(command: &str, sections: Vec<Value>) -> Value {
    let passed = sections.iter().all(|s| s["passed"] == Value::Bool(true));
    json!({"schema": SCHEMA, "command": command, "instances": sections, "passed": passed})
}

pub fn error_report(command: &str, e: &Error) -> Value {
    let mut err = Map::new();
    err.insert("kind".into(), e.kind().into());
    err.insert("message".into(), e.to_string().into());
    match e {
        Error::Schema { pointer, .. } => {
            err.insert("pointer".into(), pointer.clone().into());
        }
        Error::NotACoideal { index, condition } => {
            err.insert("index".into(), (*index).into());
            err.insert("condition".into(), condition.clone().into());
        }
        _ => {}
    }
    json!({"schema": SCHEMA, "command": command, "error": err, "passed": false})
}

pub fn passed(report: &Value) -> bool {
    report["passed"] == Value::Bool(true)
}

fn grouplike_json(g: &GrouplikeSet) -> Value {
    json!({"count": g.points.len(), "complete": g.complete})
}

fn scs_json(s: &Option<SimpleCosemisimple>) -> Value {
    match s {
        None => Value::Null,
        Some(s) => json!({
            "value": s.value(),
            "end_dim": s.end_dim,
            "end_simple_artinian": s.end_simple_artinian,
            "end_division": s.end_division.as_str(),
            "can_rank": s.can_rank,
            "can_domain_dim": s.can_domain_dim,
            "can_codomain_dim": s.can_codomain_dim,
        }),
    }
}

fn correspondence_json(e: &CorrespondenceEntry) -> Value {
    json!({
        "instance": e.name,
        "C_dim": e.c_dim,
        "simple_artinian": e.simple_artinian,
        "J_dim": e.j_dim,
        "quotient_dim": e.quotient_dim,
        "roundtrip_RJ": e.rj_equals_c,
        "roundtrip_JR": e.jr_equals_j,
        "galois": e.galois,
        "can_kernel_dim": e.can_kernel_dim,
        "simple_cosemisimple": scs_json(&e.simple_cosemisimple),
        "passed": e.passed(),
    })
}

pub fn conjugacy_json(sigma: &FreeRightModule, pair: &str, c: &ConjugacyCertificate) -> Value {
    json!({
        "pair": pair,
        "verdict": c.verdict.as_str(),
        "intertwiner_dim": c.intertwiner_dim,
        "det_is_zero": c.det_is_zero,
        "witness": c.witness.as_ref().map(|w| matrix_json(sigma, w)),
        "witness_verified": c.witness_verified,
        "obstruction": c.obstruction,
    })
}

fn dual_json(d: &DualIso) -> Value {
    json!({
        "dual_dim": d.dual_dim,
        "end_dim": d.end_dim,
        "bijective": d.bijective,
        "multiplicative": d.multiplicative,
        "unital": d.unital,
    })
}

fn jb_json(e: &JbEntry) -> Value {
    json!({
        "instance": e.name,
        "C_dim": e.c_dim,
        "U_dim": e.u_dim,
        "U_simple_artinian": e.u_simple_artinian,
        "roundtrip_RJ": e.r_j_equals_c,
        "roundtrip_JR": e.j_r_equals_u,
        "passed": e.passed(),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

// ---------------------------------------------------------------- instances

/// Resolves the field, ω, α and β for an A_ω instance. The defaults are
/// (Q, −1, −1, −1) for n = 2 and (Q(w3), w3, 2, 3) for n = 3.
pub fn aomega_setting(p: &InstanceParams) -> Result<(usize, NumberField, Scalar, Scalar, Scalar)> {
    let n = p.n.unwrap_or(2);
    if n < 2 {
        return Err(Error::Schema { pointer: "/n".into(), message: "n must be at least 2".into() });
    }
    let preset = p.field.clone().unwrap_or_else(|| {
        match n {
            3 => "Qw3",
            4 => "Qw4",
            _ => "Q",
        }
        .into()
    });
    let k = NumberField::preset(&preset)?;
    let omega = match &p.omega {
        Some(s) => parse_scalar_str(&k, s, "/omega")?,
        None => k.root_of_unity(n).ok_or_else(|| {
            Error::HypothesisViolated(format!("{} has no primitive {n}-th root of unity", k.label()))
        })?,
    };
    let (da, db) = if n == 2 { (-1, -1) } else { (2, 3) };
    let alpha = match &p.alpha {
        Some(s) => parse_scalar_str(&k, s, "/alpha")?,
        None => k.from_int(da),
    };
    let beta = match &p.beta {
        Some(s) => parse_scalar_str(&k, s, "/beta")?,
        None => k.from_int(db),
    };
    Ok((n, k, omega, alpha, beta))
}

fn aomega_params(inst: &AOmega) -> Value {
    let k = &inst.field;
    json!({
        "n": inst.n,
        "field": k.label(),
        "omega": scalar_json(k, &inst.omega),
        "alpha": scalar_json(k, &inst.alpha),
        "beta": scalar_json(k, &inst.beta),
    })
}

fn demo_trig() -> Result<Value> {
    let t = examples::trig()?;
    let mut s = Section::new("trig");
    s.put("label", "trigonometric coring over Q(i)/Q");
    let s_alg = &t.sigma.end_alg;
    let k = t.sigma.field();
    let g = grouplike_elements(&t.coring)?;
    let end = comod_end(&t.comodule)?;
    let can = canonical_map(&t.comodule)?;
    let scs = is_simple_cosemisimple(&t.comodule)?;
    let minus_one = vector::neg(k, &s_alg.one());
    s.fact("coring_dim", t.coring.dim());
    s.fact("grouplikes", grouplike_json(&g));
    s.fact("can_rank", can.rank);
    s.fact("end_dim", end.dim());
    s.fact("end_division", scs.end_division.as_str());
    s.check("coring axioms", t.coring.check_exhaustive());
    s.check("comodule axioms", t.comodule.check().passed());
    s.check("no group-like elements", g.points.is_empty() && g.complete);
    s.check("Galois", can.is_bijective());
    s.check("End is 4-dimensional", end.dim() == 4);
    s.check("i^2 = -1", s_alg.mul(&t.i_bar, &t.i_bar) == minus_one);
    s.check("j^2 = -1", s_alg.mul(&t.j_bar, &t.j_bar) == minus_one);
    s.check("ij = -ji", s_alg.mul(&t.i_bar, &t.j_bar) == vector::neg(k, &s_alg.mul(&t.j_bar, &t.i_bar)));
    s.check("End equals the quaternion subring", end == t.quaternions);
    s.check("isomorphic to the comatrix coring of H", t.witness.check().is_isomorphism());
    s.check("simple cosemisimple", scs.value());
    Ok(s.finish())
}

fn demo_sweedler() -> Result<Value> {
    let sw = examples::sweedler()?;
    let mut s = Section::new("sweedler");
    s.put("label", "Sweedler coring of Q(i)/Q");
    let g = grouplike_elements(&sw.coring)?;
    let cm = &sw.comatrix;
    let lattice = enumerate_coideals(&cm.coring)?;
    s.fact("coring_dim", sw.coring.dim());
    s.fact("grouplikes", grouplike_json(&g));
    s.fact("coideal_count", lattice.coideals.len());
    s.check("coring axioms", sw.coring.check_exhaustive());
    s.check("isomorphic to the comatrix coring of Q(i)", sw.witness.check().is_isomorphism());
    s.check("has a group-like element", !g.points.is_empty());
    let mut entries = Vec::new();
    let mut ok = true;
    for j in &lattice.coideals {
        let (_, m) = quotient_comodule(cm, j)?;
        let scs = is_simple_cosemisimple(&m)?;
        let r = r_of(cm, j)?;
        let jr = crate::galois::j_of(cm, &r)?;
        let pjb = pjb_closure(cm, j)? == r;
        let pass = scs.value() && jr == *j && pjb;
        ok &= pass;
        entries.push(json!({
            "J_dim": j.dim(),
            "R_dim": r.dim(),
            "roundtrip_JR": jr == *j,
            "closure_matches": pjb,
            "simple_cosemisimple": scs.value(),
            "passed": pass,
        }));
    }
    s.put("coideals", entries);
    s.check("every coideal quotient is simple cosemisimple with JR(J) = J", ok);
    Ok(s.finish())
}

fn demo_t2() -> Result<Value> {
    let t = examples::t2_counterexample()?;
    let mut s = Section::new("t2-counterexample");
    s.put("label", "U = T2(Q) acting on Q^2");
    let scs = is_simple_cosemisimple(&t.comodule)?;
    s.fact("U_dim", t.ring.dim());
    s.fact("ustar_dim", t.ustar.coring.dim());
    s.fact("can_domain_dim", t.can.domain_dim());
    s.fact("can_codomain_dim", t.can.codomain_dim());
    s.fact("can_rank", t.can.rank);
    s.fact("galois", t.can.is_bijective());
    s.fact("simple_cosemisimple", scs.value());
    s.check("U* coring axioms", t.ustar.coring.check_exhaustive());
    s.check("comodule axioms", t.comodule.check().passed());
    s.check("can surjective", t.can.is_surjective());
    s.check("can has rank 3 on a 4-dimensional domain", t.can.rank == 3 && t.can.domain_dim() == 4);
    s.check("can not injective (not Galois)", !t.can.is_injective());
    Ok(s.finish())
}

fn demo_aomega(p: &InstanceParams) -> Result<Value> {
    let (n, k, omega, alpha, beta) = aomega_setting(p)?;
    if k.is_one(&alpha) {
        return demo_grouplike(n, &k, &omega);
    }
    let inst = examples::aomega(n, &k, &omega, &alpha, &beta)?;
    let mut s = Section::new("aomega");
    s.put("label", inst.label());
    s.put("parameters", aomega_params(&inst));
    s.fact("coring_dim", inst.base.coring.dim());
    s.fact("extensions", inst.extensions.iter().map(|(name, c)| json!({"name": name, "dim": c.dim()})).collect::<Vec<_>>());
    s.check("X and Y satisfy the defining relations", inst.eqaction_check());
    s.check("coring axioms", inst.base.coring.check().passed());
    for name in ["C(alpha)", "C(beta)", "A_omega", "M_n(k)"] {
        let f = inst.listed_coideal(name)?;
        s.check(&format!("listed coideal of {name} equals J({name})"), f.span == inst.j_of(name)?);
    }
    let entries: Vec<CorrespondenceEntry> = inst
        .extensions
        .par_iter()
        .map(|(name, c)| correspondence_entry(&inst.base, name, c))
        .collect::<Result<_>>()?;
    for e in &entries {
        s.check(&format!("{} roundtrips, simple cosemisimple quotient", e.name), e.passed());
    }
    let cert = inst.c_alpha_conjugacy()?;
    s.put("conjugacy", vec![conjugacy_json(&inst.sigma, "C(alpha) diagonal / twisted", &cert)]);
    s.check("twisted and diagonal C(alpha) are not conjugate", cert.verdict == Verdict::NotConjugate);
    Ok(s.finish())
}

fn demo_grouplike(n: usize, k: &NumberField, omega: &Scalar) -> Result<Value> {
    let g = examples::grouplike_quotient(n, k, omega)?;
    let mut s = Section::new("aomega");
    s.put("label", g.instance.label());
    s.put("parameters", aomega_params(&g.instance));
    let iso = g.iso.check();
    s.fact("quotient_dim", g.quotient.coring.dim());
    s.fact("grouplikes", g.grouplike.len());
    s.fact("iso_rank", iso.rank);
    s.check("quotient coring axioms", g.quotient.coring.check().passed());
    s.check("listed coideal of M_n(k) equals J(M_n(k))", g.coideal_matches_kernel);
    for (i, b) in g.grouplike.iter().enumerate() {
        s.check(&format!("c_{} is group-like", i + 1), *b);
    }
    s.check("isomorphic to the Sweedler coring of k in C(alpha)", iso.is_isomorphism());
    Ok(s.finish())
}

fn demo_appendix(kind: EmbeddingKind, p: &InstanceParams) -> Result<Value> {
    let n = p.n.unwrap_or(2);
    let case = AppendixCase::build(kind, n)?;
    let mut s = Section::new(kind.id());
    s.put("label", format!("D = {} in M_{n}(Q(i))", kind.as_str()));
    s.put("parameters", json!({"n": n, "field": case.sigma.field().label(), "algebra": case.sigma.alg.label}));
    let w = case.witness.check();
    let end = case.end_dim()?;
    s.fact("B_dim", case.b.dim());
    s.fact("coring_dim", case.comatrix.coring.dim());
    s.fact("model_dim", case.model.dim());
    s.fact("witness_rank", w.rank);
    s.fact("end_dim", end);
    s.check("comatrix coring axioms", case.comatrix.coring.check().passed());
    s.check("model coring axioms", case.model.check().passed());
    s.check("isomorphism witness", w.is_isomorphism());
    s.check("End recovers D", end == case.b.dim());
    Ok(s.finish())
}

pub fn validate_instance(id: &str) -> Result<()> {
    if examples::INSTANCE_IDS.contains(&id) {
        Ok(())
    } else {
        Err(Error::UnknownInstance(format!("{id} (known: {})", examples::INSTANCE_IDS.join(", "))))
    }
}

pub fn demo_section(id: &str, p: &InstanceParams) -> Result<Value> {
    validate_instance(id)?;
    match id {
        "trig" => demo_trig(),
        "sweedler" => demo_sweedler(),
        "aomega" => demo_aomega(p),
        "t2-counterexample" => demo_t2(),
        "appendix-R" => demo_appendix(EmbeddingKind::Real, p),
        "appendix-C-diag" => demo_appendix(EmbeddingKind::ComplexDiagonal, p),
        "appendix-C-twist" => demo_appendix(EmbeddingKind::ComplexTwisted, p),
        "appendix-H" => demo_appendix(EmbeddingKind::Quaternion, p),
        other => Err(Error::UnknownInstance(other.into())),
    }
}

/// Runs several demos, in parallel across instances. All ids are checked
/// before anything is computed.
pub fn demo(ids: &[String], p: &InstanceParams) -> Result<Value> {
    for id in ids {
        validate_instance(id)?;
    }
    let sections = ids.par_iter().map(|id| demo_section(id, p)).collect::<Result<Vec<_>>>()?;
    Ok(envelope("demo", sections))
}

// ------------------------------------------------------------ correspondence

pub fn correspondence_aomega(p: &InstanceParams) -> Result<Value> {
    let (n, k, omega, alpha, beta) = aomega_setting(p)?;
    let inst = examples::aomega(n, &k, &omega, &alpha, &beta)?;
    let mut s = Section::new("aomega");
    s.put("label", inst.label());
    s.put("parameters", aomega_params(&inst));
    s.fact("coring_dim", inst.base.coring.dim());
    let rows: Vec<Value> = inst
        .extensions
        .par_iter()
        .map(|(name, c)| -> Result<Value> {
            let e = correspondence_entry(&inst.base, name, c)?;
            let mut v = correspondence_json(&e);
            let fixture = inst.listed_coideal(name)?;
            let obj = v.as_object_mut().expect("object");
            obj.insert("listed_coideal_matches".into(), Value::Bool(fixture.span == inst.j_of(name)?));
            if let Some(note) = fixture.note {
                obj.insert("listed_coideal_note".into(), note.into());
            }
            let cm = comatrix_coring(&inst.sigma, c)?;
            obj.insert("dual".into(), dual_json(&dual_iso_end(&cm)?));
            Ok(v)
        })
        .collect::<Result<_>>()?;
    for r in &rows {
        let name = r["instance"].as_str().unwrap_or_default();
        s.check(&format!("{name}: RJ = C and JR = J, simple cosemisimple"), r["passed"] == Value::Bool(true));
        s.check(&format!("{name}: listed coideal equals J"), r["listed_coideal_matches"] == Value::Bool(true));
        let d = &r["dual"];
        let ok = d["bijective"] == Value::Bool(true) && d["multiplicative"] == Value::Bool(true) && d["unital"] == Value::Bool(true);
        s.check(&format!("{name}: dual ring maps isomorphically onto End"), ok);
    }
    s.put("entries", rows);
    let jb = verify_theorem_jb(&inst.sigma, &inst.extensions)?;
    for e in &jb {
        s.check(&format!("{}: commutant roundtrips", e.name), e.passed());
    }
    s.put("commutants", jb.iter().map(jb_json).collect::<Vec<_>>());
    let cert = inst.c_alpha_conjugacy()?;
    s.check("twisted and diagonal C(alpha) are not conjugate", cert.verdict == Verdict::NotConjugate);
    s.put("conjugacy", vec![conjugacy_json(&inst.sigma, "C(alpha) diagonal / twisted", &cert)]);
    Ok(envelope("correspondence", vec![s.finish()]))
}

// ------------------------------------------------------------------ classify

pub fn classify(n: usize) -> Result<Value> {
    let c = examples::classify(n)?;
    let mut s = Section::new("classify");
    s.put("label", format!("simple cosemisimple Q(i)/Q-corings, n = {n}"));
    s.put("parameters", json!({"n": n, "base_pair": "QiQ"}));
    s.fact("classes", c.classes.len());
    let classes: Vec<Value> = c
        .classes
        .iter()
        .map(|e| {
            json!({
                "D": e.kind.as_str(),
                "members": e.members.iter().map(|m| m.as_str()).collect::<Vec<_>>(),
                "B_dim": e.b_dim,
                "coring_dim": e.coring_dim,
                "coring_axioms": e.coring_ok,
                "end_dim": e.end_dim,
                "witness_rank": e.witness_rank,
                "witness_isomorphism": e.witness_iso,
            })
        })
        .collect();
    for e in &c.classes {
        s.check(&format!("D = {}: coring axioms", e.kind.as_str()), e.coring_ok);
        s.check(&format!("D = {}: isomorphism witness", e.kind.as_str()), e.witness_iso);
        s.check(&format!("D = {}: End recovers D", e.kind.as_str()), e.end_dim == e.b_dim);
    }
    s.put("classes", classes);
    s.put(
        "rejected",
        c.rejected.iter().map(|(kind, why)| json!({"D": kind.as_str(), "reason": why})).collect::<Vec<_>>(),
    );
    let sigma = FreeRightModule::new(&examples::gaussian(), n);
    let mut conj: Vec<Value> = c
        .conjugacy
        .iter()
        .map(|(a, b, cert)| conjugacy_json(&sigma, &format!("{} / {}", a.as_str(), b.as_str()), cert))
        .collect();
    if n == 2 {
        let t = examples::trig()?;
        for (name, cert) in examples::inner_twisted_quaternions()? {
            s.check(&format!("{name}: conjugate with verified witness"), cert.verdict == Verdict::Conjugate && cert.witness_verified);
            conj.push(conjugacy_json(&t.sigma, &name, &cert));
        }
    }
    s.put("conjugacy", conj);
    Ok(envelope("classify", vec![s.finish()]))
}

// ---------------------------------------------------------------- user input

/// Runs the correspondence on a user supplied instance.
pub fn correspondence_input(doc: &Value) -> Result<Value> {
    let inst = input::parse(doc)?;
    let mut s = Section::new(&inst.name);
    s.put("parameters", inst.parameters());
    input::correspondence_part(&inst, &mut s)?;
    Ok(envelope("correspondence", vec![s.finish()]))
}

/// Structural checks plus the correspondence on a user supplied instance.
pub fn check_input(doc: &Value) -> Result<Value> {
    let inst = input::parse(doc)?;
    let mut s = Section::new(&inst.name);
    s.put("parameters", inst.parameters());
    let cm = comatrix_coring(&inst.sigma, &inst.base)?;
    let m = canonical_coaction(&cm);
    let can = canonical_map(&m)?;
    let end = comod_end(&m)?;
    s.fact("coring_dim", cm.coring.dim());
    s.fact("B_dim", inst.base.dim());
    s.fact("end_dim", end.dim());
    s.fact("can_rank", can.rank);
    match grouplike_elements(&cm.coring) {
        Ok(g) => s.fact("grouplikes", grouplike_json(&g)),
        Err(Error::CarrierTooLarge(d)) => s.fact("grouplikes", json!({"skipped": format!("carrier dimension {d} exceeds 8")})),
        Err(e) => return Err(e),
    }
    s.check("coring axioms", cm.coring.check().passed());
    s.check("comodule axioms", m.check().passed());
    s.check("Galois", can.is_bijective());
    s.check("End recovers B", end == inst.base);
    if inst.base.is_simple_artinian()?.simple {
        s.check("simple cosemisimple", is_simple_cosemisimple(&m)?.value());
    } else {
        s.fact("simple_cosemisimple", "B is not simple artinian");
    }
    input::correspondence_part(&inst, &mut s)?;
    Ok(envelope("check", vec![s.finish()]))
}

// ---------------------------------------------------------------------- text

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) if a.iter().all(|x| x.is_string()) && a.len() <= 4 => {
            let parts: Vec<String> = a.iter().map(compact).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(o) => {
            let parts: Vec<String> = o.iter().map(|(k, x)| format!("{k}={}", compact(x))).collect();
            parts.join(" ")
        }
        Value::Array(a) => {
            let parts: Vec<String> = a.iter().map(compact).collect();
            format!("[{}]", parts.join("; "))
        }
        other => other.to_string(),
    }
}

/// Human readable rendering of a report.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    if let Some(err) = report.get("error") {
        out.push_str(&format!("error [{}]: {}\n", err["kind"].as_str().unwrap_or(""), err["message"].as_str().unwrap_or("")));
        return out;
    }
    for sec in report["instances"].as_array().into_iter().flatten() {
        out.push_str(&format!("== {}", sec["instance"].as_str().unwrap_or("")));
        if let Some(l) = sec.get("label").and_then(Value::as_str) {
            out.push_str(&format!(" ({l})"));
        }
        out.push('\n');
        if let Some(p) = sec.get("parameters") {
            out.push_str(&format!("  parameters: {}\n", compact(p)));
        }
        for (k, v) in sec["facts"].as_object().into_iter().flatten() {
            out.push_str(&format!("  {k}: {}\n", compact(v)));
        }
        for key in ["entries", "coideals", "commutants", "classes", "rejected", "conjugacy"] {
            let Some(rows) = sec.get(key).and_then(Value::as_array).filter(|r| !r.is_empty()) else { continue };
            out.push_str(&format!("  {key}:\n"));
            for r in rows {
                let mut r = r.clone();
                if let Some(o) = r.as_object_mut() {
                    o.remove("witness");
                }
                out.push_str(&format!("    {}\n", compact(&r)));
            }
        }
        for c in sec["checks"].as_array().into_iter().flatten() {
            let ok = c["passed"] == Value::Bool(true);
            out.push_str(&format!("  {}  {}\n", yes_no(ok), c["name"].as_str().unwrap_or("")));
        }
    }
    out.push_str(&format!("result: {}\n", yes_no(passed(report))));
    out
}

#[cfg(test)]
mod tests;
