use std::process::{Command, Output};

use onsager_core::tables::BasisRow;
use onsager_core::{basis_elem, BasisVector};

fn onsager(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_onsager"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = onsager(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&["eval", "[A,B]"]), "x⊗2 + y⊗2t + z⊗(2 - 2t)");
    assert_eq!(stdout(&["eval", "[A,[A,[A,B]]] - 4[A,B]"]), "0");
    assert_eq!(stdout(&["--ascii", "eval", "A"]), "x(x)1");
}

#[test]
fn basis_examples() {
    assert_eq!(stdout(&["basis", "uu", "psi", "1", "--form", "recursive"]), "1/2 A + 1/2 B - 1/4 [A, B]");
    assert_eq!(stdout(&["basis", "du", "A", "0"]), "-x⊗1");
    assert_eq!(stdout(&["basis", "[0312]", "A", "0"]), stdout(&["basis", "uu", "A", "0"]));
}

#[test]
fn convert_examples() {
    assert_eq!(stdout(&["convert", "--from", "uu", "--to", "dd", "A", "3"]), "-1 A^uu_3");
    assert_eq!(stdout(&["convert", "--from", "uu", "--to", "du", "A", "1"]), "A^uu_0 + A^uu_1");
    assert_eq!(stdout(&["convert", "--from", "uu", "--to", "uu", "A", "1"]), "A^uu_1");
}

#[test]
fn decompose_and_apply() {
    let parts = stdout(&["decompose", "x*t^3"]);
    assert_eq!(parts.lines().last().unwrap(), "X_12: x⊗t^3");
    let json = stdout(&["--format", "json", "apply", "rho", "x*1"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["word"], serde_json::json!(["rho"]));
}

#[test]
fn verify_runs() {
    let out = stdout(&["verify", "--max-index", "0", "--suite", "bases"]);
    assert!(out.contains("PASS") && !out.contains("FAIL"), "{out}");
    let out = stdout(&["verify", "--max-index", "12", "--suite", "transitions", "--samples", "10"]);
    assert!(!out.contains("FAIL"), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(onsager(&["basis", "uu", "psi", "0"]).status.code(), Some(2));
    assert_eq!(onsager(&["eval", "[A, B"]).status.code(), Some(2));
    assert_eq!(onsager(&["eval", "0A"]).status.code(), Some(2));
    assert_eq!(onsager(&["coords", "uu", "z*1"]).status.code(), Some(2));
    assert_eq!(onsager(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(onsager(&["frobnicate"]).status.code(), Some(2));
    let err = String::from_utf8(onsager(&["eval", "[A, B"]).stderr).unwrap();
    assert!(err.starts_with("error:"), "{err}");
}

#[test]
fn tables() {
    let text = stdout(&["table", "generators"]);
    let dd = text.lines().find(|l| l.contains("[3021]")).unwrap();
    assert!(dd.contains("-A^dd_0") && dd.contains("-B^dd_0"), "{dd}");
    let text = stdout(&["table", "bases"]);
    let row = text
        .lines()
        .find(|l| l.contains("[0312]") && l.contains("z⊗(t-1)^{i+1}"))
        .unwrap_or_else(|| panic!("{text}"));
    assert!(row.contains("X_31 ∩ O"), "{row}");
}

#[test]
fn bases_table_json_round_trip() {
    let json = stdout(&["--format", "json", "table", "bases"]);
    let rows: Vec<BasisRow> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.len(), 12);
    for row in &rows {
        let mut value = row.generator.clone();
        for i in 0..6 {
            let v = BasisVector::new(row.basis, row.family, i + row.offset()).unwrap();
            assert_eq!(value, basis_elem(v).unwrap(), "{v}");
            value = value.scale(&row.center);
        }
    }
}
