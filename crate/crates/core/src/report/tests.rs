use serde_json::json;

use super::*;

fn qi() -> NumberField {
    NumberField::preset("Qi").unwrap()
}

#[test]
fn scalar_strings_roundtrip() {
    let k = qi();
    let a = parse_scalar_str(&k, "1/2,-3", "/alpha").unwrap();
    assert_eq!(scalar_json(&k, &a), json!(["1/2", "-3"]));
    let b = parse_scalar_str(&k, "-4/6", "/alpha").unwrap();
    assert_eq!(scalar_json(&k, &b), json!(["-2/3", "0"]));
}

#[test]
fn scalar_string_errors_keep_the_pointer() {
    let k = qi();
    for bad in ["x", "1,2,3", "1/0"] {
        match parse_scalar_str(&k, bad, "/alpha") {
            Err(Error::Schema { pointer, .. }) => assert_eq!(pointer, "/alpha"),
            other => panic!("{bad}: {other:?}"),
        }
    }
}

#[test]
fn json_scalars_accept_integers_and_coordinates() {
    let k = qi();
    let one = input::scalar(&k, &json!(1), "").unwrap();
    assert!(k.is_one(&one));
    let i = input::scalar(&k, &json!(["0", 1]), "").unwrap();
    assert_eq!(k.mul(&i, &i), k.from_int(-1));
    match input::scalar(&k, &json!(["0", true]), "/s") {
        Err(Error::Schema { pointer, .. }) => assert_eq!(pointer, "/s/1"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn pointer_segments_are_escaped() {
    assert_eq!(input::child("/a", "b/c"), "/a/b~1c");
    assert_eq!(input::child("", "m~n"), "/m~0n");
    assert_eq!(input::child("/x", 3), "/x/3");
}

#[test]
fn error_reports_carry_details() {
    let e = Error::Schema { pointer: "/rank".into(), message: "expected a non-negative integer".into() };
    let r = error_report("check", &e);
    assert_eq!(r["schema"], SCHEMA);
    assert_eq!(r["error"]["kind"], "Schema");
    assert_eq!(r["error"]["pointer"], "/rank");
    assert!(!passed(&r));
    let r = error_report("check", &Error::NotACoideal { index: 2, condition: "counit".into() });
    assert_eq!(r["error"]["index"], 2);
    assert_eq!(r["error"]["condition"], "counit");
}

#[test]
fn envelope_passes_only_when_every_section_does() {
    let mut a = Section::new("a");
    a.check("fine", true);
    let mut b = Section::new("b");
    b.check("broken", false);
    assert!(passed(&envelope("demo", vec![a.finish()])));
    let mut a = Section::new("a");
    a.check("fine", true);
    assert!(!passed(&envelope("demo", vec![a.finish(), b.finish()])));
}

#[test]
fn text_rendering() {
    let mut s = Section::new("toy");
    s.fact("dim", 4);
    s.check("axioms", true);
    s.put("entries", json!([{"instance": "C", "witness": [1, 2], "passed": true}]));
    let text = render_text(&envelope("demo", vec![s.finish()]));
    assert!(text.starts_with("== toy\n"));
    assert!(text.contains("  dim: 4\n"));
    assert!(text.contains("    instance=C passed=true\n"));
    assert!(!text.contains("witness"));
    assert!(text.ends_with("result: PASS\n"));
    let err = render_text(&error_report("demo", &Error::UnknownInstance("x".into())));
    assert!(err.starts_with("error [UnknownInstance]"));
}

#[test]
fn aomega_defaults() {
    let (n, k, omega, alpha, beta) = aomega_setting(&InstanceParams::default()).unwrap();
    assert_eq!(n, 2);
    assert!(k.is_rationals());
    assert_eq!(omega, k.from_int(-1));
    assert_eq!((alpha, beta), (k.from_int(-1), k.from_int(-1)));
    let p = InstanceParams { n: Some(3), ..Default::default() };
    let (_, k, omega, ..) = aomega_setting(&p).unwrap();
    assert_eq!(k.absolute_degree(), 2);
    assert!(!k.is_one(&omega));
    let bad = InstanceParams { n: Some(1), ..Default::default() };
    assert!(aomega_setting(&bad).is_err());
}

#[test]
fn trig_demo_is_deterministic() {
    let a = demo_section("trig", &InstanceParams::default()).unwrap();
    let b = demo_section("trig", &InstanceParams::default()).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a["passed"], true);
}
