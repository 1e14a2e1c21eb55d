use std::path::PathBuf;
use std::process::Command;

use homlie::cli::run;
use homlie::corpus::builtin;
use homlie::format::{emit, parse};
use serde_json::Value;

fn homlie(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_homlie")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn in_process(args: &[&str]) -> (u8, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("homlie").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("homlie-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn validate_exit_codes() {
    let (code, out, _) = homlie(&["validate", "builtin:aff2", "--check", "hom-lie"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = homlie(&["validate", "builtin:notjac3", "--check", "hom-lie"]);
    assert_eq!(code, 1);
    assert!(out.contains("(1,2,3)"), "{out}");
    let (code, out, _) = homlie(&["validate", "builtin:aff2", "--rmatrix", "e1^e2", "--check", "chybe"]);
    assert_eq!(code, 0, "{out}");
    let (code, _, _) = homlie(&["validate", "builtin:aff2", "--rmatrix", "e1.e2 + e2.e1", "--check", "chybe"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(homlie(&["validate", "builtin:aff2", "--check", "nonsense"]).0, 2);
    assert_eq!(homlie(&["validate", "builtin:nope"]).0, 2);
    assert_eq!(homlie(&["validate", "/definitely/not/here.json"]).0, 2);
    assert_eq!(homlie(&["validate", "builtin:aff2", "--check", "chybe"]).0, 2);
    let path = scratch("broken.json", "{\"version\": 1,\n  \"name\": \"x\",\n  \"algebra\": }");
    let (code, _, err) = homlie(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    assert_eq!(homlie(&["--help"]).0, 0);
}

#[test]
fn json_report() {
    let (code, out, _) = homlie(&[
        "validate",
        "builtin:aff2bad",
        "--check",
        "hom-lie",
        "--check",
        "weakly-involutive",
        "--format",
        "json",
    ]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], Value::Bool(false));
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    assert_eq!(checks[0]["report"]["passed"], Value::Bool(true));
    assert_eq!(checks[1]["report"]["passed"], Value::Bool(false));
    assert!(out.contains("\"basis\""));
}

#[test]
fn builds() {
    let (code, out, err) = homlie(&["build", "hom-double", "builtin:aff2-triangular"]);
    assert_eq!(code, 0, "{err}");
    let s = parse(&out, &builtin).unwrap();
    assert_eq!(s.algebra.as_ref().unwrap().dim(), 4);
    assert!(s.rmatrix.is_some());

    let (code, out, _) = homlie(&["build", "semidirect", "builtin:aff2", "--rep", "adjoint"]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out, &builtin).unwrap().algebra.unwrap().dim(), 4);

    let (code, out, _) = homlie(&["build", "dual", "--cobracket", "zero", "builtin:aff2"]);
    assert_eq!(code, 0);
    let dual = parse(&out, &builtin).unwrap().algebra.unwrap();
    assert_eq!(dual.dim(), 2);
    assert!(dual.bracket().is_zero());

    let (code, _, _) = homlie(&["build", "cor512", "builtin:lsa1idem"]);
    assert_eq!(code, 1);
    let (code, _, _) = homlie(&["build", "semidirect", "builtin:aff2phi", "--rep", "coadjoint"]);
    assert_eq!(code, 1);
}

#[test]
fn built_files_validate_from_disk() {
    let (_, out, _) = homlie(&["build", "hom-double", "builtin:aff2-triangular"]);
    let path = scratch("hd.json", &out);
    let p = path.to_str().unwrap();
    let (code, text, _) = homlie(&["validate", p, "--check", "hom-lie", "--check", "chybe", "--check", "coboundary"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("[PASS] chybe"), "{text}");
    assert!(text.trim_end().ends_with("hom-double(aff2-triangular): PASS"), "{text}");
}

#[test]
fn every_builtin_emits_and_reparses() {
    for b in homlie::corpus::BUILTINS {
        let s = builtin(b.name).unwrap();
        assert_eq!(parse(&emit(&s), &builtin).unwrap(), s, "{}", b.name);
        let (code, out) = in_process(&["validate", &format!("builtin:{}", b.name)]);
        assert_eq!(code, if b.name == "notjac3" { 1 } else { 0 }, "{}: {out}", b.name);
    }
}

#[test]
fn seeded_suites() {
    for name in ["aff2", "heis3phi", "sl2alpha"] {
        let (code, out) = in_process(&[
            "validate",
            &format!("builtin:{name}"),
            "--check",
            "lemma44",
            "--check",
            "lemma46",
            "--seed",
            "1",
        ]);
        assert_eq!(code, 0, "{name}: {out}");
    }
    let (code, _) = in_process(&["validate", "builtin:aff2phi", "--check", "lemma44", "--seed", "1"]);
    assert_eq!(code, 1);
    let (code, _) = in_process(&["validate", "builtin:aff2", "--check", "lemma44"]);
    assert_eq!(code, 2);
}

#[test]
fn operator_checks() {
    for check in ["o-operator", "lsa", "thm58"] {
        let (code, out) = in_process(&["validate", "builtin:lsa2", "--check", check]);
        assert_eq!(code, 0, "{check}: {out}");
    }
    let (code, out) = in_process(&[
        "validate",
        "builtin:aff2-triangular",
        "--check",
        "bialgebra",
        "--check",
        "triple-equivalence",
        "--check",
        "hom-double",
        "--check",
        "matched-pair",
        "--check",
        "manin-triple",
    ]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn corpus_listing() {
    let (code, out, _) = homlie(&["corpus", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let names: Vec<_> = v.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap().to_string()).collect();
    assert!(names.contains(&"aff2phi".to_string()));
    assert_eq!(names.len(), homlie::corpus::BUILTINS.len());
    let (code, out, _) = homlie(&["corpus"]);
    assert_eq!(code, 0);
    assert!(out.contains("notjac3"));
}
