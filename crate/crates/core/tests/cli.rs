mod common;

use std::process::{Command, Output};

use common::p;
use serde_json::Value;

use symquot::bases::{basis_element, BasisFamily, TransitionMatrix};
use symquot::conjecture::ConjectureReport;
use symquot::mixedbasis::{mixed_expand, FirstFamily, Generator, MixedExpansion, MixedVariant};
use symquot::partition::{gaussian_binomial, CountRow};
use symquot::quotient::QuotientElement;
use symquot::{Scalar, SymPoly};

fn symquot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symquot")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = symquot(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn count_matches_gaussian_binomial() {
    let rows: Vec<CountRow> =
        serde_json::from_value(json(&["count", "--k", "2", "--n", "4", "--max-degree", "10"])).unwrap();
    let gauss = gaussian_binomial(4, 2).unwrap();
    assert_eq!(rows.len(), 11);
    for r in &rows {
        assert_eq!(r.gaussian, gauss.coeff(r.degree));
        assert_eq!(r.boxed as i64, r.gaussian);
        assert_eq!(r.product, r.at_most_k as i64);
    }
}

#[test]
fn mixed_expand_worked_example() {
    let v = json(&["mixed-expand", "--first", "m", "--second", "p", "--k", "3", "--n", "4", "--element", "m:2,2,1"]);
    let x = MixedExpansion::from_json(&v).unwrap();
    let variant = MixedVariant::new(FirstFamily::Monomial, Generator::PowerSum, 3, 4).unwrap();
    assert_eq!(x, mixed_expand(&SymPoly::monomial(3, &p("2,2,1")), variant).unwrap());
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 5);
    assert!(terms.contains(&serde_json::json!({"lambda": "1", "mu": "4", "coeff": "1/2"})));
    assert!(terms.contains(&serde_json::json!({"lambda": "-", "mu": "3,2", "coeff": "-1"})));
}

#[test]
fn quantum_point_class_squared() {
    let v = json(&["structure-constants", "--mode", "quantum", "--k", "2", "--n", "4", "--lambda", "2,2", "--mu", "2,2"]);
    assert_eq!(v["coeffs"], serde_json::json!({"-": "q^2"}));
    let r = QuotientElement::from_json(&v).unwrap();
    assert_eq!(r.coeff(&p("-")), Scalar::q().pow(2));
}

#[test]
fn custom_mode_accepts_deformations() {
    let quantum = json(&["structure-constants", "--mode", "quantum", "--k", "2", "--n", "5", "--lambda", "3,1", "--mu", "2,2"]);
    let custom = json(&[
        "structure-constants", "--mode", "custom", "--family", "h", "--b", "5=-q", "--k", "2", "--n", "5",
        "--lambda", "3,1", "--mu", "2,2",
    ]);
    assert_eq!(quantum, custom);
}

#[test]
fn reduce_with_json_deformation_and_input_file() {
    let dir = std::env::temp_dir().join(format!("symquot-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("input.json");
    let f = basis_element(BasisFamily::Complete, &p("3,2"), 2);
    std::fs::write(&path, f.to_json().to_string()).unwrap();
    let b = SymPoly::constant(2, Scalar::from_int(-1)).to_json().to_string();
    let v = json(&[
        "reduce", "--k", "2", "--n", "4", "--family", "h", "--b", &format!("4={b}"), "--basis", "m",
        "--input-file", path.to_str().unwrap(),
    ]);
    let r = QuotientElement::from_json(&v).unwrap();
    assert_eq!(r.basis(), FirstFamily::Monomial);
    assert_eq!(r.spec().deformation(4), SymPoly::constant(2, Scalar::from_int(-1)));
    let inline = json(&["reduce", "--k", "2", "--n", "4", "--family", "h", "--b", "4=-1", "--basis", "m", "--input", "h:3,2"]);
    assert_eq!(v, inline);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn outputs_reparse() {
    let t: TransitionMatrix =
        serde_json::from_value(json(&["transition-matrix", "--row", "s", "--col", "m", "--degree", "4", "--k", "3"]))
            .unwrap();
    assert!(t.is_unitriangular_under_dominance());
    let r: ConjectureReport =
        serde_json::from_value(json(&["check-conjecture", "--variant", "7.1", "--k", "2", "--n", "3", "--max-degree", "6"]))
            .unwrap();
    assert_eq!(r.degrees.len(), 7);
    let v = json(&["check-basis", "--first", "e", "--second", "h", "--k", "2", "--n", "4", "--max-degree", "6"]);
    assert_eq!(v["degrees"].as_array().unwrap().len(), 7);
    let v = json(&["expand", "--k", "3", "--family", "s", "--element", "m:2,1"]);
    assert_eq!(v["coeffs"], serde_json::json!({"1,1,1": "-2", "2,1": "1"}));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let runs: &[&[&str]] = &[
        &["mixed-expand", "--first", "e", "--second", "h", "--k", "3", "--n", "5", "--element", "s:4,3,1"],
        &["structure-constants", "--mode", "quantum", "--k", "3", "--n", "5", "--lambda", "2,1", "--mu", "2,2,1"],
        &["count", "--k", "3", "--n", "6", "--max-degree", "12"],
    ];
    for args in runs {
        let a = symquot(args);
        let b = symquot(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(symquot(&["count", "--k", "2"]).status.code(), Some(2));
    assert_eq!(symquot(&["count", "--k", "2", "--n", "4", "--max-degree", "3", "--nope"]).status.code(), Some(2));
    assert_eq!(symquot(&["count", "--k", "0", "--n", "4", "--max-degree", "3"]).status.code(), Some(2));
    let bad_b = symquot(&["reduce", "--k", "2", "--n", "4", "--family", "h", "--b", "3=[{\"partition\":\"3\",\"coeff\":{\"0\":\"1\"}}]", "--element", "s:1"]);
    assert_eq!(bad_b.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_b.stderr).contains("b_3"));
    let singular = symquot(&["transition-matrix", "--row", "m", "--col", "e", "--degree", "2", "--k", "1", "--restrict-n", "3"]);
    assert_eq!(singular.status.code(), Some(3));
    let help = symquot(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("structure-constants"));
}

#[test]
fn table_output() {
    let out = symquot(&["--output", "table", "structure-constants", "--k", "2", "--n", "4", "--lambda", "1", "--mu", "1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "s[1,1] + s[2]\n");
}
