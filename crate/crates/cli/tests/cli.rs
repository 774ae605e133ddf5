use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn toric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = toric(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn canonical_form_of_p2() {
    let out = toric(&["canonical-form", "--pd", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 / (y*(y - x + 1)*(x - 2*y))\n");
}

#[test]
fn canonical_form_from_file_matches_pd() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    fs::write(&path, "0 0\n1 0\n2 1\n3 3\n").unwrap();
    let from_file = toric(&["canonical-form", "--file", path.to_str().unwrap()]);
    let from_pd = toric(&["canonical-form", "--pd", "3"]);
    assert_eq!(stdout(&from_file), stdout(&from_pd));
}

#[test]
fn curve_cyclic_data() {
    let v = json(&["curve", "--ell", "0,1,2,3", "--k", "2"]);
    assert_eq!(v["cyclic_volume"], 8);
    assert_eq!(v["cyclic_count"], 8);
    assert_eq!(v["interpolant_positroid"], true);
    assert_eq!(v["interpolant_tilde_positroid"], true);
}

#[test]
fn report_for_d3() {
    let v = json(&["report", "--d-range", "3..3"]);
    let r = &v["reports"][0];
    assert_eq!(r["degree"], 4);
    assert_eq!(r["dual_degree_normal"], 4);
    assert_eq!(r["dual_degree_projected"], 4);
    assert_eq!(r["is_general_projection"], false);
}

#[test]
fn report_keeps_order_and_field_names() {
    let v = json(&["report", "--d-range", "3..6"]);
    let reports = v["reports"].as_array().unwrap();
    let ds: Vec<u64> = reports.iter().map(|r| r["d"].as_u64().unwrap()).collect();
    assert_eq!(ds, vec![3, 4, 5, 6]);
    let keys: Vec<&String> = reports[0].as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        [
            "d",
            "degree",
            "ambient_normalization_dim",
            "perimeter",
            "singular_multiplicities",
            "vertex_eus",
            "dual_degree_normal",
            "dual_degree_projected",
            "is_general_projection"
        ]
    );
}

#[test]
fn interpolant_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    fs::write(&a, "2 4\n1 1 1 1\n0 1 2 3\n").unwrap();
    let out = toric(&["interpolant", "--matrix", a.to_str().unwrap(), "--k", "2"]);
    assert_eq!(stdout(&out), "3 4\n1 1 1 1\n0 1 2 3\n0 0 1 3\n");
    let b = dir.path().join("b.txt");
    fs::write(&b, stdout(&out)).unwrap();
    // Feeding A^(2) back in and asking for k = 1 reproduces it.
    let again = toric(&["interpolant", "--matrix", b.to_str().unwrap(), "--k", "1"]);
    assert_eq!(stdout(&again), stdout(&out));
    let tilde = toric(&[
        "interpolant",
        "--matrix",
        a.to_str().unwrap(),
        "--k",
        "2",
        "--tilde",
    ]);
    assert_eq!(stdout(&tilde), "3 4\n1 1 1 1\n0 1 2 3\n0 1 4 9\n");
}

#[test]
fn jet_at_two() {
    let out = toric(&[
        "jet",
        "--rows",
        "1,1,1,1;0,1,2,3",
        "--k",
        "2",
        "--point",
        "2",
    ]);
    assert_eq!(stdout(&out), "3 4\n1 2 4 8\n0 1 4 12\n0 0 1 6\n");
}

#[test]
fn verify_is_reproducible_and_passes() {
    let args = [
        "verify",
        "--rows",
        "1,1,1,1,1,1,1;0,1,0,1,1,2,2;0,0,1,1,2,1,2",
        "--k",
        "2",
        "--point",
        "2,5",
        "--samples",
        "3",
        "--seed",
        "11",
    ];
    let a = toric(&args);
    let b = toric(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("holds: true"));
    let other_seed = toric(&[&args[..10], &["--seed", "12"]].concat());
    assert_ne!(a.stdout, other_seed.stdout);
}

#[test]
fn binomials_and_hypersurface() {
    let v = json(&[
        "binomials",
        "--rows",
        "1,1,1,1;0,1,2,3;0,0,1,3",
        "--hypersurface",
    ]);
    assert_eq!(v["binomial"], "x0*x2^3 - x1^3*x3");
    assert_eq!(v["equation_degree"], 4);
    let out = toric(&["binomials", "--rows", "1,1,1,1;0,1,2,3", "--hypersurface"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("corank"));
}

#[test]
fn polygon_all() {
    let v = json(&["polygon", "--pd", "4", "--all"]);
    assert_eq!(v["normalized_area"], 10);
    assert_eq!(v["boundary_length"], 6);
    assert_eq!(v["lattice_points"], 9);
    assert_eq!(v["vertex_data"][0]["multiplicity"], 3);
    assert_eq!(v["vertex_data"][0]["euler_obstruction"], 0);
}

#[test]
fn polygon_text_round_trips() {
    let out = toric(&["polygon", "--points", "0,0;2,0;1,1;0,2;2,2"]);
    let text = stdout(&out);
    let block: String = text
        .lines()
        .skip(1)
        .take_while(|l| l.starts_with("  "))
        .map(|l| format!("{}\n", l.trim()))
        .collect();
    assert_eq!(block, "0 0\n2 0\n2 2\n0 2\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sq.txt");
    fs::write(&path, &block).unwrap();
    let again = toric(&["polygon", "--file", path.to_str().unwrap()]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn dual_degrees() {
    let v = json(&["dual-degree", "--pd", "5", "--projected"]);
    assert_eq!(v["dual_degree_normal"], 44);
    assert_eq!(v["dual_degree_projected"], 36);
}

#[test]
fn normalize_rebases() {
    let out = toric(&["normalize", "--rows", "3,2,1,0;0,1,2,3"]);
    assert_eq!(stdout(&out), "2 4\n1 1 1 1\n0 1 2 3\n");
}

#[test]
fn exit_codes() {
    assert_eq!(toric(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        toric(&["interpolant", "--rows", "1,x", "--k", "2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(toric(&["interpolant", "--k", "2"]).status.code(), Some(1));
    assert_eq!(
        toric(&[
            "interpolant",
            "--rows",
            "1,1",
            "--matrix",
            "a.txt",
            "--k",
            "2"
        ])
        .status
        .code(),
        Some(1)
    );
    let rank = toric(&["interpolant", "--rows", "1,1;2,2", "--k", "2"]);
    assert_eq!(rank.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&rank.stderr).contains("rank"));
    assert_eq!(
        toric(&["canonical-form", "--pd", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        toric(&["report", "--d-range", "2..4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        toric(&["report", "--d-range", "four"]).status.code(),
        Some(1)
    );
    assert_eq!(toric(&["--help"]).status.code(), Some(0));
}

#[test]
fn negative_exponents_need_tilde() {
    let a = toric(&["interpolant", "--rows", "1,1,1;-1,0,2", "--k", "2"]);
    assert_eq!(a.status.code(), Some(2));
    let b = toric(&[
        "interpolant",
        "--rows",
        "1,1,1;-1,0,2",
        "--k",
        "2",
        "--tilde",
    ]);
    assert_eq!(stdout(&b), "3 3\n1 1 1\n-1 0 2\n1 0 4\n");
}
