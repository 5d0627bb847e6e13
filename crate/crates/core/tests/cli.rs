use std::process::{Command, Output};

use lie_psi::charclass::{ch_spinor, to_pe};
use lie_psi::cli::{poly_from_json, rows_from_json};
use lie_psi::golden;
use lie_psi::gpoly::GradedPoly;
use lie_psi::homotopy::Space;
use lie_psi::linalg::q;
use lie_psi::presentation::rosenfeld_presentation;
use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie-psi")).args(args).env_remove("LIE_PSI_CACHE_DIR").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = cli(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn cyclic_matrix_round_trips_through_json() {
    let v = json(&["cyclic", "F4", "w4"]);
    let rows = rows_from_json(&v["rows"]).unwrap();
    let printed: Vec<Vec<_>> = golden::F4_CYCLIC.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    assert_eq!(rows, printed);
    assert_eq!(v["det"], "351");
}

#[test]
fn presentation_round_trips_through_json() {
    let v = json(&["present", "R5"]);
    let p = rosenfeld_presentation(Space::R5).unwrap();
    let rels: Vec<_> = v["relations"].as_array().unwrap().iter().map(|r| poly_from_json(&r["poly"]).unwrap()).collect();
    assert_eq!(rels, p.relations);
    assert_eq!(v["relations"][0]["label"], "r18");
    for img in v["images"].as_array().unwrap() {
        let name = img["class"].as_str().unwrap();
        assert_eq!(&poly_from_json(&img["poly"]).unwrap(), p.image(name).unwrap(), "{name}");
    }
}

#[test]
fn chern_character_round_trips_through_json() {
    let v = json(&["--max-degree", "16", "chern", "delta16+"]);
    let expect = to_pe(&ch_spinor(8, 1, 16)).unwrap().poly;
    let parts = v["components"].as_array().unwrap();
    // Only degrees divisible by four carry Pontryagin or Euler classes of Spin(16).
    assert_eq!(parts.len(), 5);
    let mut sum = GradedPoly::zero(&expect.gens);
    for part in parts {
        let d = part["degree"].as_u64().unwrap() as u32;
        let p = poly_from_json(&part["poly"]).unwrap();
        assert_eq!(p, expect.homogeneous_part(d), "degree {d}");
        sum = sum.add(&p);
    }
    assert_eq!(sum, expect);
}

#[test]
fn long_work_is_gated() {
    let out = cli(&["cyclic", "E8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--allow-long"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(cli(&["type", "Q7"]).status.code(), Some(2));
    assert_eq!(cli(&["present", "N5"]).status.code(), Some(2));
    assert_eq!(cli(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_passes_and_reports_in_json() {
    let v = json(&["verify", "grassmannian"]);
    let checks = v["verify"].as_array().unwrap();
    assert_eq!(checks.len(), 9);
    assert!(checks.iter().all(|c| c["status"] == "PASS"));
}

#[test]
fn text_output_names_the_flagged_type_entry() {
    let out = cli(&["--verify", "type", "Spin12"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("extra [23] flagged"));
}
