#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, RngSeed};
use toric_core::polygon::LatticePoint;
use toric_core::{Int, IntMatrix, Rat};

/// Fixed-seed configuration so every run sees the same cases.
pub fn seeded(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_algorithm: RngAlgorithm::ChaCha,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn int(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect(),
    )
    .unwrap()
}

pub fn q(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn pt(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

/// Strictly increasing sequence starting at 0, entries <= `max`, length in `len`.
pub fn ell(max: i64, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<i64>> {
    proptest::sample::subsequence(
        (1..=max).collect::<Vec<_>>(),
        (*len.start() - 1)..=(*len.end() - 1),
    )
    .prop_map(|mut v| {
        v.insert(0, 0);
        v
    })
}

/// Integer matrix with the given shape ranges and entries in `-bound..=bound`.
pub fn int_matrix(
    rows: std::ops::RangeInclusive<usize>,
    cols: std::ops::RangeInclusive<usize>,
    bound: i64,
) -> impl Strategy<Value = IntMatrix> {
    (rows, cols).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            IntMatrix::from_vec(r, c, v.into_iter().map(Int::from).collect()).unwrap()
        })
    })
}

/// Nonzero rational with numerator and denominator in `1..=100`, random sign.
pub fn torus_coord() -> impl Strategy<Value = Rat> {
    (1i64..=100, 1i64..=100, any::<bool>()).prop_map(|(n, d, neg)| q(if neg { -n } else { n }, d))
}

pub fn points(
    n: std::ops::RangeInclusive<usize>,
    bound: i64,
) -> impl Strategy<Value = Vec<LatticePoint>> {
    proptest::collection::vec((-bound..=bound, -bound..=bound), n)
        .prop_map(|v| v.into_iter().map(|(x, y)| pt(x, y)).collect())
}
