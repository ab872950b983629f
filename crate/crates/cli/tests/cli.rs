use std::io::Write;
use std::process::{Command, Output};

use orbitclass::{Poly, SymbolTable};
use serde_json::Value;

const LOCAL_CLASSES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/local_classes.json");

fn orbitclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitclass"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = orbitclass(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn poly(v: &Value) -> Poly {
    let t = SymbolTable::with_default_degrees(&["c1", "c2", "c3"]).unwrap();
    Poly::from_json_value_in(&serde_json::from_value(v.clone()).unwrap(), &t).unwrap()
}

#[test]
fn a6_class_is_printed_factored() {
    let out = stdout(&["class", "A6"]);
    assert!(out.contains("p = 336(9c1^3+12c1c2-11c3)(2c1^3+c1c2+c3)"), "{out}");
    assert!(out.contains("predegree = 1785"), "{out}");
    assert!(out.contains("#Aut = "), "{out}");
    assert!(out.contains("computed by: "), "{out}");
}

#[test]
fn projective_only_drops_the_affine_line() {
    let out = stdout(&["class", "E6", "--projective"]);
    assert!(!out.contains("\np = "), "{out}");
    assert!(out.contains("P = "), "{out}");
}

#[test]
fn three_distinct_points() {
    let out = stdout(&["class", "points:1,1,1"]);
    assert!(out.contains("p(-u,-v) = 6"), "{out}");
    let out = stdout(&["class", "points:1,1,1", "--flip-sign"]);
    assert!(out.contains("p(u,v) = 6"), "{out}");
}

#[test]
fn unknown_ids_are_usage_errors() {
    assert_eq!(orbitclass(&["class", "bogus"]).status.code(), Some(2));
    assert_eq!(orbitclass(&["class", "nodal(3,1)"]).status.code(), Some(2));
    assert_eq!(orbitclass(&["table", "nope"]).status.code(), Some(2));
    assert_eq!(orbitclass(&["verify", "nope"]).status.code(), Some(2));
}

#[test]
fn section_counts() {
    let out = stdout(&["table", "sections"]);
    for n in ["510720", "63840", "21120", "9600", "134400"] {
        assert!(out.contains(n), "{n} missing:\n{out}");
    }
    let v = json(&["--format", "json", "table", "sections"]);
    let general = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["id"] == "general")
        .unwrap();
    assert_eq!(general["count"], "510720");
}

#[test]
fn cubic_table_lists_conditional_rows_as_skipped() {
    let out = stdout(&["table", "cubics"]);
    assert!(out.contains("18c1^2+9c2"), "{out}");
    assert!(out.contains("cuspidal-cubic: not computed"), "{out}");
    let out = stdout(&["--kazarian-file", LOCAL_CLASSES, "table", "cubics"]);
    assert!(out.contains("24c1^2"), "{out}");
    assert!(out.contains("-36c1^3-18c1c2"), "{out}");
    assert!(!out.contains("not computed"), "{out}");
}

#[test]
fn quartic_json_satisfies_the_flex_relation() {
    let v = json(&["--format", "json", "table", "quartics"]);
    let rows = v["rows"].as_array().unwrap();
    let p = |id: &str| poly(&rows.iter().find(|r| r["id"] == id).unwrap()["affine"]["poly"]);
    let two = Poly::from_int(p("D6").symbols(), 2);
    assert_eq!(p("flex"), &p("AN") + &(&two * &p("D6")));
}

#[test]
fn json_class_round_trips_through_the_library() {
    let v = json(&["--format", "json", "class", "A6"]);
    let p = poly(&v["affine"]["poly"]);
    let display = v["affine"]["display"].as_str().unwrap();
    let want = Poly::parse(display, p.symbols()).unwrap();
    assert_eq!(p, want);
}

#[test]
fn other_formats() {
    let csv = stdout(&["--format", "csv", "table", "quartics"]);
    assert!(csv.starts_with("id,name,aut,predegree,p,provenance\n"), "{csv}");
    let tex = stdout(&["--format", "latex", "class", "D6"]);
    assert!(tex.contains("p = "), "{tex}");
    let tower = json(&["tower"]);
    assert!(tower["divisors"]["w_bn"].is_string());
}

#[test]
fn verify_suites_exit_zero() {
    for suite in ["points", "crosschecks", "predegrees"] {
        let out = stdout(&["verify", suite]);
        assert!(out.contains(" 0 failed"), "{out}");
    }
    let out = stdout(&["verify", "--suite", "cubics"]);
    assert!(out.contains("2 skipped"), "{out}");
}

#[test]
fn injected_fault_exits_one() {
    let out = orbitclass(&["verify", "quartics", "--inject-fault", "A6 local class at d=4"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("A6 local class at d=4"), "{err}");
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn supplied_local_classes_run_every_check() {
    let out = stdout(&["--kazarian-file", LOCAL_CLASSES, "verify", "crosschecks"]);
    assert!(out.contains("0 failed, 0 skipped"), "{out}");
}

#[test]
fn bad_local_class_files_are_usage_errors() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"[{{"name": "A2", "polynomial": "c1^2"}}]"#).unwrap();
    let path = f.path().to_str().unwrap();
    let out = orbitclass(&["--kazarian-file", path, "table", "cubics"]);
    assert_eq!(out.status.code(), Some(2));

    let mut g = tempfile::NamedTempFile::new().unwrap();
    write!(g, "not json").unwrap();
    let out = orbitclass(&["--kazarian-file", g.path().to_str().unwrap(), "verify"]);
    assert_eq!(out.status.code(), Some(2));

    let out = orbitclass(&["--kazarian-file", "/nonexistent/classes.json", "verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "quartics"][..],
        &["--format", "json", "class", "nodal(2,1)"],
        &["table", "cubics"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}
