mod common;

use common::seeded;
use proptest::prelude::*;
use toric_core::invariants::{
    closed_form, dual_degree_normal, dual_degree_projected, surface_report,
};
use toric_core::polygon::p_polygon;
use toric_core::Int;

/// `binom(n, k)` by multiplicative formula over `u64`.
fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(seeded(64, 0x64756131))]

    #[test]
    fn normal_dual_degree_matches_closed_form(d in 3usize..=12) {
        let polygon_value = dual_degree_normal(&p_polygon(d).unwrap()).unwrap();
        let d3 = (d * d * d) as i64;
        let expected = if d % 2 == 0 { (d3 - 7 * d as i64 + 6) / 2 } else { (d3 - 9 * d as i64 + 8) / 2 };
        prop_assert_eq!(polygon_value, Int::from(expected));
    }

    #[test]
    fn projected_dual_degree_two_evaluations(d in 3usize..=12) {
        let du = d as u64;
        let factored = binom(du - 1, 2) * (du + 1);
        let expanded = (du * du * du + 2 - 2 * du * du - du) / 2;
        prop_assert_eq!(factored, expanded);
        prop_assert_eq!(dual_degree_projected(d).unwrap(), Int::from(factored));
        prop_assert_eq!(closed_form::dual_degree_projected_expanded(d), Int::from(expanded));
    }

    #[test]
    fn dual_degrees_differ_beyond_three(d in 4usize..=12) {
        prop_assert_ne!(dual_degree_normal(&p_polygon(d).unwrap()).unwrap(), dual_degree_projected(d).unwrap());
        prop_assert!(!surface_report(d).unwrap().is_general_projection);
    }

    #[test]
    fn lattice_count_and_area_of_pd(d in 3usize..=12) {
        let p = p_polygon(d).unwrap();
        let du = d as u64;
        let dim = if d % 2 == 0 { du * (du * du + 8) / 12 } else { du * (du * du + 11) / 12 };
        prop_assert_eq!(p.lattice_point_count() - 1, Int::from(dim));
        prop_assert_eq!(p.normalized_area(), Int::from(binom(du + 1, 3)));
    }
}

#[test]
fn report_at_three() {
    let r = surface_report(3).unwrap();
    assert_eq!(r.dual_degree_normal, 4);
    assert_eq!(r.dual_degree_projected, 4);
    assert!(!r.is_general_projection);
}
