use serde_json::Value;
use supersym::cli::{run, Outcome, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

fn call(args: &[&str]) -> Outcome {
    run(std::iter::once("supersym").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut a = args.to_vec();
    a.push("--json");
    let out = call(&a);
    let v: Value = serde_json::from_str(&out.stdout)
        .unwrap_or_else(|e| panic!("`{}` printed invalid json ({e}): {}", a.join(" "), out.stdout));
    (v, out.code)
}

const D2: &str = r#"{"g": 2, "coeffs": [{"a": "x2", "b": "y2"}, {"a": "x1*x2", "b": "x1*y1"}],
"base": {"even": ["x1", "x2"], "odd": ["y1", "y2"]}}"#;

#[test]
fn act_applies_signs() {
    let out = call(&["act", "--perm", "(1 2)", "--poly", "t1*t2"]);
    assert_eq!(out.code, EXIT_PASS);
    assert_eq!(out.stdout.trim(), "-1*t1*t2");
    assert_eq!(call(&["act", "--perm", "(1 2 3)", "--poly", "z1*t2"]).stdout.trim(), "1*z2*t3");
}

#[test]
fn reports_have_the_documented_fields() {
    let (v, code) = json(&["counterexample", "--g", "2"]);
    assert_eq!(code, EXIT_PASS);
    for key in ["command", "status", "witness", "dims", "runtime_ms", "result"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["command"], "counterexample");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["dims"], serde_json::json!([[2, 1]]));
    assert_eq!(v["runtime_ms"], 0);
}

#[test]
fn timing_is_opt_in() {
    let (v, _) = json(&["verify-lemma1", "--g", "3", "--d", "3", "--w", "3", "--timing"]);
    assert!(v["runtime_ms"].is_u64());
    let (v, _) = json(&["verify-lemma1", "--g", "3", "--d", "3", "--w", "3"]);
    assert_eq!(v["runtime_ms"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["susy-check", "--unit", "1"]).code, EXIT_PASS);
    assert_eq!(call(&["susy-check", "--unit", "-3"]).code, EXIT_PASS);
    let (v, code) = json(&["susy-check", "--unit", "2", "--literal"]);
    assert_eq!(code, EXIT_FAIL);
    assert_eq!(v["status"], "fail");
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
    assert_eq!(call(&["susy-check", "--unit", "0"]).code, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(call(&["act", "--perm", "(1 2)", "--poly", "t1*"]).code, EXIT_USAGE);
    assert_eq!(call(&["classify", "--divisor", "/nonexistent/d.json"]).code, EXIT_USAGE);
    let help = call(&["--help"]);
    assert_eq!(help.code, EXIT_PASS);
    assert!(help.stdout.contains("Usage"));
}

#[test]
fn errors_are_reported_as_json() {
    let (v, code) = json(&["reynolds", "--poly", "q1"]);
    assert_eq!(code, EXIT_USAGE);
    assert_eq!(v["status"], "error");
}

#[test]
fn divisor_files() {
    let dir = tempfile::tempdir().unwrap();
    let d2 = dir.path().join("d2.json");
    std::fs::write(&d2, D2).unwrap();
    let d2 = d2.to_str().unwrap();

    let out = call(&["divisor", "charpoly", d2]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);

    let (v, code) = json(&["classify", "--divisor", d2]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["status"], "pass");

    let (v, code) = json(&["roundtrip", "--divisor", d2]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["status"], "pass");

    let (v, code) = json(&["divisor", "sum", d2, d2]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["result"]["divisor"]["g"], 4);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"g": 3, "coeffs": [], "base": {"even": [], "odd": []}}"#).unwrap();
    assert_eq!(call(&["divisor", "reduce", bad.to_str().unwrap()]).code, EXIT_USAGE);
}

#[test]
fn random_instances_follow_the_seed() {
    let a = call(&["roundtrip", "--seed", "5", "--count", "6"]);
    let b = call(&["roundtrip", "--seed", "5", "--count", "6"]);
    assert_eq!(a, b);
    assert_eq!(a.code, EXIT_PASS);
}

#[test]
fn symfun_kinds() {
    let odd = call(&["symfun", "--g", "2", "--kind", "odd"]);
    assert_eq!(odd.stdout, "sig1 = 1*t2 + 1*t1\nsig2 = 1*z1*t2 + 1*z2*t1\n");
    let even = call(&["symfun", "--g", "2", "--kind", "even", "--h", "2"]);
    assert_eq!(even.stdout, "s2 = 1*z1*z2\n");
    assert_eq!(call(&["symfun", "--g", "2", "--kind", "both"]).code, EXIT_USAGE);
    assert_eq!(call(&["symfun", "--g", "2", "--h", "3"]).code, EXIT_USAGE);
}
