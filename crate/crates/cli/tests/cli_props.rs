use std::fs;
use std::process::{Command, Output};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, RngSeed};
use toric_core::osculation::build_ak;
use toric_core::polygon::{convex_hull, LatticePoint, LatticePolygon};
use toric_core::toric::Configuration;
use toric_core::{Int, IntMatrix};

fn seeded(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_algorithm: RngAlgorithm::ChaCha,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn toric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// `--rows` argument for an all-ones row above one exponent row.
fn curve_rows(exps: &[i64]) -> String {
    let ones = vec!["1"; exps.len()].join(",");
    let e: Vec<String> = exps.iter().map(i64::to_string).collect();
    format!("{ones};{}", e.join(","))
}

fn points_arg(points: &[(i64, i64)]) -> String {
    points
        .iter()
        .map(|(x, y)| format!("{x},{y}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// The indented vertex block following the first line of `polygon` output.
fn vertex_block(text: &str) -> String {
    text.lines()
        .skip(1)
        .take_while(|l| l.starts_with("  "))
        .map(|l| format!("{}\n", l.trim()))
        .collect()
}

proptest! {
    #![proptest_config(seeded(50, 0x636c6931))]

    #[test]
    fn interpolant_output_reparses(
        exps in proptest::collection::vec(0i64..=6, 2..=5),
        k in 1usize..=3,
    ) {
        let rows = curve_rows(&exps);
        let out = toric(&["interpolant", "--rows", &rows, "--k", &k.to_string()]);
        let ones = vec![Int::from(1); exps.len()];
        let m = IntMatrix::from_rows(vec![ones, exps.iter().map(|&e| Int::from(e)).collect()]).unwrap();
        match Configuration::validate(m) {
            Ok(a) => {
                prop_assert_eq!(out.status.code(), Some(0));
                let printed = IntMatrix::parse_text(&stdout(&out)).unwrap();
                prop_assert_eq!(&printed, &build_ak(&a, k).unwrap());
                let dir = tempfile::tempdir().unwrap();
                let path = dir.path().join("ak.txt");
                fs::write(&path, stdout(&out)).unwrap();
                let again = toric(&["interpolant", "--matrix", path.to_str().unwrap(), "--k", "1"]);
                prop_assert_eq!(again.stdout, out.stdout);
            }
            Err(_) => prop_assert_eq!(out.status.code(), Some(2)),
        }
    }

    #[test]
    fn polygon_output_reparses(points in proptest::collection::vec((-6i64..=6, -6i64..=6), 3..=8)) {
        let arg = points_arg(&points);
        let out = toric(&["polygon", "--points", &arg]);
        let pts: Vec<LatticePoint> = points.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect();
        match convex_hull(&pts) {
            Ok(hull) => {
                prop_assert_eq!(out.status.code(), Some(0));
                let block = vertex_block(&stdout(&out));
                prop_assert_eq!(&LatticePolygon::parse_text(&block).unwrap(), &hull);
                let dir = tempfile::tempdir().unwrap();
                let path = dir.path().join("p.txt");
                fs::write(&path, &block).unwrap();
                let again = toric(&["polygon", "--file", path.to_str().unwrap()]);
                prop_assert_eq!(again.stdout, out.stdout);
            }
            Err(_) => prop_assert_ne!(out.status.code(), Some(0)),
        }
    }
}

proptest! {
    #![proptest_config(seeded(50, 0x636c6932))]

    #[test]
    fn exit_codes_are_deterministic(
        command in prop::sample::select(vec!["interpolant", "binomials", "normalize", "jet", "nonsense"]),
        rows in prop::sample::select(vec![
            "1,1,1,1;0,1,2,3",
            "1,1,1;-1,0,2",
            "1,1;2,2",
            "3,2,1,0;0,1,2,3",
            "1,x;0,1",
            "",
        ]),
        k in 0usize..=3,
    ) {
        let args = [command, "--rows", rows, "--k", &k.to_string(), "--point", "2"];
        let a = toric(&args);
        let b = toric(&args);
        prop_assert!(matches!(a.status.code(), Some(0..=3)));
        prop_assert_eq!(a.status.code(), b.status.code());
        prop_assert_eq!(a.stdout, b.stdout);
    }

    #[test]
    fn verify_transcript_depends_only_on_seed(
        ell in proptest::sample::subsequence((1i64..=8).collect::<Vec<_>>(), 2..=5),
        samples in 1usize..=3,
        seed in 0u64..1000,
    ) {
        let exps: Vec<i64> = std::iter::once(0).chain(ell).collect();
        let rows = curve_rows(&exps);
        let (samples, seed) = (samples.to_string(), seed.to_string());
        let args = ["verify", "--rows", &rows, "--k", "2", "--samples", &samples, "--seed", &seed];
        let a = toric(&args);
        let b = toric(&args);
        prop_assert_eq!(a.status.code(), Some(0));
        prop_assert_eq!(a.stdout, b.stdout);
    }
}
