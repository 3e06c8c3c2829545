use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use crossed_kernel::resolutions::{cyclic_resolution, infinite_cyclic};
use crossed_kernel::{CrossedComplex, Dim2Elem, Gen};

fn crossed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crossed")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn summary(o: &Output) -> Value {
    json_lines(o).pop().unwrap()["summary"].clone()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn verify_cyclic_five() {
    let o = crossed(&["verify", "--cyclic", "5", "--maxdim", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    let checks: Vec<&str> = lines.iter().filter_map(|l| l["check"].as_str()).collect();
    for c in ["ddzero", "cm1", "cm2"] {
        assert!(checks.contains(&c), "{c} missing from {checks:?}");
    }
    let s = summary(&o);
    assert_eq!(s["status"], "pass");
    assert_eq!(s["seed"], 0);
    assert_eq!(s["failures"], 0);
}

#[test]
fn homology_cyclic_three() {
    let o = crossed(&["homology", "--cyclic", "3", "--dims", "1..3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[3] [] [3]\n");
}

#[test]
fn resolve_standard_counts() {
    let o = crossed(&["resolve", "--standard", "C2", "--maxdim", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let cx = CrossedComplex::from_json(&stdout(&o)).unwrap();
    assert_eq!(cx.counts(), vec![2, 4, 8]);
}

#[test]
fn round_trip_keeps_the_digest() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("c5.json");
    let path = path.to_str().unwrap();
    let o = crossed(&["resolve", "--cyclic", "5", "--maxdim", "6", "--out", path]);
    assert_eq!(o.status.code(), Some(0));
    let direct = crossed(&["verify", "--cyclic", "5", "--maxdim", "6", "--seed", "4"]);
    let loaded = crossed(&["verify", "--complex", path, "--seed", "4"]);
    assert_eq!(loaded.status.code(), Some(0));
    assert_eq!(summary(&direct)["digest"], summary(&loaded)["digest"]);
    assert_eq!(stdout(&direct), stdout(&loaded));
}

#[test]
fn reports_are_deterministic() {
    let a = crossed(&["verify", "--standard", "S3", "--seed", "7", "--samples", "200"]);
    let b = Command::new(env!("CARGO_BIN_EXE_crossed"))
        .args(["verify", "--standard", "S3", "--seed", "7", "--samples", "200"])
        .env("CROSSED_KERNEL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(summary(&a)["seed"], 7);
}

#[test]
fn corrupted_boundary_exits_one() {
    let dir = TempDir::new().unwrap();
    let mut cx = cyclic_resolution(3, 2).unwrap();
    let r = cx.basis(2).unwrap()[0].clone();
    cx.push_dim3(vec![(Gen::new("x3"), Dim2Elem::gen(&r))]).unwrap();
    let path = write(dir.path(), "bad.json", &cx.to_json());
    let o = crossed(&["verify", "--complex", &path]);
    assert_eq!(o.status.code(), Some(1));
    let s = summary(&o);
    assert_eq!(s["status"], "fail");
    let bad = json_lines(&o).into_iter().find(|l| l["check"] == "ddzero" && l["dim"] == 3).unwrap();
    assert_ne!(bad["status"], "pass");
}

#[test]
fn exactness_lines() {
    let o = crossed(&["verify", "--standard", "C3", "--maxdim", "4", "--exactness"]);
    assert_eq!(o.status.code(), Some(0));
    let n = json_lines(&o).iter().filter(|l| l["check"] == "exactness").count();
    assert_eq!(n, 2);
}

#[test]
fn tensor_and_boundary() {
    let dir = TempDir::new().unwrap();
    let x = write(dir.path(), "x.json", &infinite_cyclic("x", 2).unwrap().to_json());
    let y = write(dir.path(), "y.json", &infinite_cyclic("y", 2).unwrap().to_json());
    let t = dir.path().join("t.json");
    let t = t.to_str().unwrap();
    let o = crossed(&["tensor", "--left", &x, "--right", &y, "--maxdim", "2", "--out", t]);
    assert_eq!(o.status.code(), Some(0));
    let o = crossed(&["boundary", "--complex", t, "--gen", "x(tensor)y"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("y^-1 x^-1 y x"));
    assert!(lines.next().unwrap().starts_with("raw: "));
    let o = crossed(&["boundary", "--complex", t, "--gen", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn square_graph_product() {
    let dir = TempDir::new().unwrap();
    let graph = r#"{
        "vertices": ["A", "B", "C", "D"],
        "edges": [["A", "B"], ["B", "C"], ["C", "D"], ["A", "D"]],
        "factors": {"A": {"infinite": "x"}, "B": {"infinite": "y"}, "C": {"infinite": "z"}, "D": {"infinite": "w"}}
    }"#;
    let path = write(dir.path(), "square.json", graph);
    let out = dir.path().join("square-complex.json");
    let out = out.to_str().unwrap();
    let o = crossed(&["graph-product", "--graph", &path, "--maxdim", "3", "--out", out]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o)[0]["counts"], serde_json::json!([4, 4, 0]));
    let cx = CrossedComplex::from_json(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(cx.counts(), vec![4, 4, 0]);
    let v = crossed(&["verify", "--complex", out, "--samples", "100"]);
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn graph_product_with_mixed_factors() {
    let dir = TempDir::new().unwrap();
    let c3 = write(dir.path(), "c3.json", &cyclic_resolution(3, 3).unwrap().to_json());
    let graph = format!(
        r#"{{"vertices": ["A", "B"], "edges": [["A", "B"]], "factors": {{"A": {{"cyclic": 2}}, "B": {{"complex": "{}"}}}}}}"#,
        Path::new(&c3).file_name().unwrap().to_str().unwrap()
    );
    let path = write(dir.path(), "g.json", &graph);
    let o = crossed(&["graph-product", "--graph", &path, "--maxdim", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json_lines(&o)[0]["counts"], serde_json::json!([2, 3, 4]));
}

#[test]
fn extensions_of_c2() {
    let o = crossed(&["extensions", "--p", "2", "--k", "C2"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    let classes: Vec<&str> = lines.iter().filter_map(|l| l["class"].as_str()).collect();
    assert_eq!(classes.len(), 2);
    assert!(classes.contains(&"C4") && classes.contains(&"C2xC2"));
    assert_eq!(lines.last().unwrap()["summary"]["classes"], 2);
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.json");
    let garbage = write(dir.path(), "garbage.json", "{ not json");
    let cases: Vec<Vec<&str>> = vec![
        vec![],
        vec!["frobnicate"],
        vec!["verify"],
        vec!["verify", "--cyclic", "3", "--standard", "C2"],
        vec!["verify", "--complex", missing.to_str().unwrap()],
        vec!["verify", "--complex", &garbage],
        vec!["verify", "--standard", "Q7"],
        vec!["homology", "--cyclic", "3", "--dims", "3..1"],
        vec!["extensions", "--p", "2", "--k", "C9"],
        vec!["resolve", "--cyclic", "1"],
    ];
    for args in cases {
        let o = crossed(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn pretty_output() {
    let o = crossed(&["verify", "--cyclic", "2", "--maxdim", "4", "--pretty", "--samples", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all checks pass"));
    let o = crossed(&["homology", "--cyclic", "2", "--dims", "1", "--pretty"]);
    assert_eq!(stdout(&o), "H_1 = [2]\n");
}
