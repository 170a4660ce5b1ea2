use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};
use tempfile::TempDir;

use toric_additive::polytope::builtin as polytopes;

fn toric(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_toric")).args(args).output().expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

fn report(args: &[&str]) -> (Value, i32) {
    let (s, code) = toric(args);
    (serde_json::from_str(&s).unwrap_or_else(|e| panic!("{e}: {s}")), code)
}

struct Workspace(TempDir);

impl Workspace {
    fn new() -> Self {
        Workspace(tempfile::tempdir().unwrap())
    }

    fn write(&self, name: &str, contents: &str) -> PathBuf {
        let p = self.0.path().join(name);
        std::fs::write(&p, contents).unwrap();
        p
    }

    fn gen(&self, name: &str, args: &[&str]) -> PathBuf {
        let (s, code) = toric(&[&["gen"], args].concat());
        assert_eq!(code, 0, "{s}");
        self.write(name, &s)
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn fan_check_reports_validity_and_completeness() {
    let ws = Workspace::new();
    let f2 = ws.gen("f2.json", &["hirzebruch", "2"]);
    let (r, code) = report(&["fan-check", s(&f2)]);
    assert_eq!(code, 0);
    assert_eq!(r["command"], "fan-check");
    assert_eq!(r["result"]["valid"], true);
    assert_eq!(r["result"]["complete"], true);
    assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);

    let quadrant = ws.write("q.json", r#"{"dim":2,"rays":[[1,0],[0,1]],"max_cones":[[0,1]]}"#);
    let (r, code) = report(&["fan-check", s(&quadrant)]);
    assert_eq!((code, &r["result"]["valid"], &r["result"]["complete"]), (0, &json!(true), &json!(false)));

    let bad = ws.write("bad.json", r#"{"dim":2,"rays":[[2,0],[0,1]],"max_cones":[[0,1]]}"#);
    let (r, code) = report(&["fan-check", s(&bad)]);
    assert_eq!(code, 2);
    assert_eq!(r["exit_status"], 2);
    assert_eq!(r["result"]["violations"], json!([{ "kind": "ray_not_primitive", "ray": 0 }]));
}

#[test]
fn invalid_input_exits_with_two() {
    let ws = Workspace::new();
    let junk = ws.write("junk.json", "{not json");
    assert_eq!(toric(&["roots", s(&junk)]).1, 2);
    let extra = ws.write("extra.json", r#"{"dim":1,"rays":[[1]],"max_cones":[[0]],"x":0}"#);
    assert_eq!(toric(&["cox", s(&extra)]).1, 2);
    let (r, code) = report(&["additive", "/nonexistent/fan.json"]);
    assert_eq!((code, &r["input_digest"]), (2, &Value::Null));
    assert_eq!(toric(&["gen", "nope"]).1, 2);
    assert_eq!(toric(&["gen", "pn", "-1"]).1, 2);
    assert_eq!(toric(&["frobnicate"]).1, 2);
    let p2 = ws.gen("p2.json", &["pn", "2"]);
    assert_eq!(toric(&["pairs", s(&p2), "--root", "0:-1,2"]).1, 2);
    assert_eq!(toric(&["pairs", s(&p2), "--root", "garbage"]).1, 2);
}

#[test]
fn roots_command() {
    let ws = Workspace::new();
    let f3 = ws.gen("f3.json", &["hirzebruch", "3"]);
    let (r, _) = report(&["roots", s(&f3)]);
    assert_eq!(r["result"]["listed"], 6);
    assert_eq!(r["result"]["finite"], true);
    assert_eq!(r["result"]["rays"][3]["roots"][3]["derivation"], "x1^3*x2 d/dx4");
    let p2 = ws.gen("p2.json", &["pn", "2"]);
    assert_eq!(report(&["roots", s(&p2)]).0["result"]["listed"], 6);

    let k2 = ws.gen("k2.json", &["affine", "2"]);
    let (r, code) = report(&["roots", s(&k2)]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["rays"][0]["status"], "infinite");
    assert_eq!(r["result"]["rays"][1]["status"], "infinite");
    let (r, _) = report(&["roots", s(&k2), "--bound", "2"]);
    assert_eq!(r["result"]["rays"][0]["status"], "truncated");
    assert_eq!(r["result"]["rays"][0]["bound"], 2);
    assert_eq!(r["result"]["rays"][0]["roots"].as_array().unwrap().len(), 3);
    assert_eq!(r["options"]["bound"], 2);
}

#[test]
fn collections_command() {
    let ws = Workspace::new();
    let f1 = ws.gen("f1.json", &["hirzebruch", "1"]);
    let (r, _) = report(&["collections", s(&f1), "--equivalence"]);
    assert_eq!(r["result"]["count"], 2);
    let classes = r["result"]["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0]["members"][1]["automorphism"], json!([[-1, 0], [1, 1]]));
    assert_eq!(classes[0]["members"][1]["ray_bijection"], json!([[0, 2], [3, 3]]));

    let p2 = ws.gen("p2.json", &["pn", "2"]);
    let (r, _) = report(&["collections", s(&p2), "--equivalence"]);
    assert_eq!((r["result"]["count"].clone(), r["result"]["classes"].as_array().unwrap().len()), (json!(3), 1));

    let p235 = ws.gen("p235.json", &["p235"]);
    let (r, _) = report(&["collections", s(&p235)]);
    assert_eq!(r["result"]["collections"], json!([]));
    assert!(r["result"].get("classes").is_none());
}

#[test]
fn additive_command() {
    let ws = Workspace::new();
    let w = ws.gen("w.json", &["wps1", "2", "3"]);
    let (r, code) = report(&["additive", s(&w), "--strict"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["admits"], true);
    assert_eq!(r["result"]["formulas"], json!(["x1 -> x1 + s1*x3^2", "x2 -> x2 + s2*x3^3"]));
    assert_eq!(r["result"]["degree_zero"], true);

    let p3 = ws.gen("p3.json", &["pn", "3"]);
    let (r, _) = report(&["additive", s(&p3)]);
    assert_eq!(r["result"]["formulas"], json!(["x1 -> x1 + s1*x4", "x2 -> x2 + s2*x4", "x3 -> x3 + s3*x4"]));

    let p235 = ws.gen("p235.json", &["p235"]);
    let (r, code) = report(&["additive", s(&p235)]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["admits"], false);
    assert_eq!(r["result"]["theorem3con"], json!({ "complete_collection_exists": false, "distinguished_span": false }));
    assert_eq!(toric(&["--strict", "additive", s(&p235)]).1, 1);

    let k2 = ws.gen("k2.json", &["affine", "2"]);
    let (r, _) = report(&["additive", s(&k2)]);
    assert_eq!(r["result"]["reading"], "normalized_only");
    assert_eq!(r["result"]["theorem3con"], Value::Null);
}

#[test]
fn cox_command() {
    let ws = Workspace::new();
    let f2 = ws.gen("f2.json", &["hirzebruch", "2"]);
    let (r, _) = report(&["cox", s(&f2)]);
    assert_eq!(r["result"]["degrees"], json!([[1, 0], [0, 1], [1, 0], [2, 1]]));
    let w = ws.gen("w.json", &["wps1", "1", "2", "3"]);
    assert_eq!(report(&["cox", s(&w)]).0["result"]["degrees"], json!([[1], [2], [3], [1]]));
    let t = ws.gen("t.json", &["torsion"]);
    let (r, _) = report(&["cox", s(&t)]);
    assert_eq!((r["result"]["torsion"].clone(), r["result"]["free"].clone()), (json!([2]), json!(false)));
}

#[test]
fn pairs_command() {
    let ws = Workspace::new();
    let cases = [(&["pn", "1"][..], "0:-1", 1), (&["pn", "2"], "0:-1,0", 2), (&["hirzebruch", "1"], "3:0,1", 2)];
    for (gen, root, count) in cases {
        let f = ws.gen("f.json", gen);
        let (r, code) = report(&["pairs", s(&f), "--root", root]);
        assert_eq!(code, 0, "{r}");
        assert_eq!(r["result"]["count"], count, "{gen:?}");
    }
}

#[test]
fn polytope_commands() {
    let ws = Workspace::new();
    let t = ws.gen("t.json", &["trapezoid"]);
    let (r, _) = report(&["polytope", "check", s(&t)]);
    assert_eq!(r["result"]["inscribed"], true);
    assert_eq!(r["result"]["witness"], json!({ "vertex": [0, 0], "edge_basis": [[1, 0], [0, 1]] }));
    let tri = ws.gen("tri.json", &["triangle"]);
    let (r, code) = report(&["polytope", "check", s(&tri)]);
    assert_eq!((code, &r["result"]["inscribed"], &r["result"]["witness"]), (0, &json!(false), &Value::Null));
    assert_eq!(toric(&["polytope", "check", s(&tri), "--strict"]).1, 1);

    let (scaled, _) = toric(&["polytope", "scale", "2", s(&t)]);
    assert_eq!(scaled.trim(), r#"{"dim":2,"vertices":[[0,0],[0,6],[4,0],[4,2]]}"#);
    let bad = ws.write("bad.json", r#"{"dim":2,"vertices":[[0,0],[2,0],[0,2],[1,0]]}"#);
    assert_eq!(toric(&["polytope", "check", s(&bad)]).1, 2);
    let out = ws.0.path().join("fan.json");
    let (r, code) = report(&["polytope", "normalfan", s(&t), "--out", s(&out)]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["data"]["rays"], json!([[1, 0], [0, 1], [-1, 0], [-1, -1]]));
    assert!(std::fs::read_to_string(&out).unwrap().starts_with(r#"{"dim":2"#));
}

#[test]
fn normal_fan_pipeline_agrees_with_polytope_check() {
    let ws = Workspace::new();
    for (name, p) in polytopes::bundled() {
        let file = ws.write("p.json", &p.to_data().to_json());
        let (check, _) = report(&["polytope", "check", s(&file)]);
        let (fan, code) = toric(&["polytope", "normalfan", s(&file)]);
        assert_eq!(code, 0);
        let fan_file = ws.write("fan.json", &fan);
        let (additive, _) = report(&["additive", s(&fan_file)]);
        assert_eq!(check["result"]["inscribed"], additive["result"]["admits"], "{name}");
    }
}

#[test]
fn output_is_deterministic() {
    let ws = Workspace::new();
    let f = ws.gen("f.json", &["p1n", "3"]);
    for args in [
        vec!["collections", s(&f), "--equivalence"],
        vec!["roots", s(&f)],
        vec!["--format", "text", "additive", s(&f)],
        vec!["cox", s(&f)],
    ] {
        assert_eq!(toric(&args), toric(&args), "{args:?}");
    }
}

#[test]
fn text_format() {
    let ws = Workspace::new();
    let f = ws.gen("f.json", &["hirzebruch", "2"]);
    let (out, code) = toric(&["--format", "text", "additive", s(&f)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("command: additive\n"), "{out}");
    assert!(out.contains("  admits: true\n"), "{out}");
    assert!(out.ends_with("exit_status: 0\n"), "{out}");
}

#[test]
fn gen_writes_files_and_handles_big_integers() {
    let ws = Workspace::new();
    let out = ws.0.path().join("big.json");
    let (r, code) = report(&["gen", "hirzebruch", "9007199254740993", "--out", s(&out)]);
    assert_eq!(code, 0);
    assert_eq!(r["options"]["params"], json!(["9007199254740993"]));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains(r#"[-1,"9007199254740993"]"#), "{text}");
    let (r, code) = report(&["cox", s(&out)]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["degrees"][3], json!(["9007199254740993", 1]));
}
