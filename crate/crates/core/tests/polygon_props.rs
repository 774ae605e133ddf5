mod common;

use common::{points, pt, q, seeded};
use num_traits::One;
use proptest::prelude::*;
use toric_core::polygon::{
    canonical_form_fan, canonical_form_polygon, convex_hull, cyclic_count, cyclic_polygon,
    cyclic_volume, euler_obstruction_by_area, euler_obstruction_vertex, p_polygon,
    vertex_multiplicity, LatticePolygon,
};
use toric_core::{Int, Rat};

fn polygon(
    n: std::ops::RangeInclusive<usize>,
    bound: i64,
) -> impl Strategy<Value = LatticePolygon> {
    points(n, bound).prop_filter_map("nondegenerate", |p| convex_hull(&p).ok())
}

/// Counts lattice points in the bounding box that lie in the polygon.
fn brute_force_count(p: &LatticePolygon) -> Int {
    let xs = p.vertices().iter().map(|v| v.x.clone());
    let ys = p.vertices().iter().map(|v| v.y.clone());
    let (x0, x1) = (xs.clone().min().unwrap(), xs.max().unwrap());
    let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
    let mut n = Int::from(0);
    let mut x = x0;
    while x <= x1 {
        let mut y = y0.clone();
        while y <= y1 {
            if p.contains(&toric_core::polygon::LatticePoint::new(
                x.clone(),
                y.clone(),
            )) {
                n += 1;
            }
            y += 1;
        }
        x += 1;
    }
    n
}

proptest! {
    #![proptest_config(seeded(64, 0x7069636b))]

    #[test]
    fn pick_consistency(p in polygon(3..=8, 8)) {
        // points = area + boundary/2 + 1, with area = normalized/2.
        let area = Rat::new(p.normalized_area(), Int::from(2));
        let pick = area + Rat::new(p.boundary_length(), Int::from(2)) + Rat::one();
        prop_assert_eq!(Rat::from_integer(p.lattice_point_count()), pick);
        prop_assert_eq!(p.lattice_point_count(), brute_force_count(&p));
        prop_assert_eq!(Int::from(p.lattice_points().len()), p.lattice_point_count());
    }

    #[test]
    fn polygon_text_round_trips(p in polygon(3..=8, 50)) {
        prop_assert_eq!(LatticePolygon::parse_text(&p.to_text()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(seeded(64, 0x6379636c))]

    #[test]
    fn cyclic_volume_is_shoelace_area(ell in common::ell(30, 3..=8)) {
        let c = cyclic_polygon(&ell).unwrap();
        prop_assert_eq!(cyclic_volume(&ell).unwrap(), c.normalized_area());
    }

    #[test]
    fn cyclic_count_is_enumeration(ell in common::ell(30, 3..=8)) {
        let c = cyclic_polygon(&ell).unwrap();
        let vol = cyclic_volume(&ell).unwrap();
        let last = Int::from(*ell.last().unwrap());
        let liu = vol / 2 + last + 1;
        let count = cyclic_count(&ell).unwrap();
        prop_assert_eq!(&count, &liu);
        prop_assert_eq!(&count, &brute_force_count(&c));
    }
}

proptest! {
    #![proptest_config(seeded(64, 0x63616e6f))]

    /// Splitting a quadrilateral along either diagonal adds up to the whole.
    #[test]
    fn canonical_form_additivity(
        quad in polygon(4..=4, 6).prop_filter("quadrilateral", |p| p.len() == 4)
    ) {
        let whole = canonical_form_polygon(&quad).unwrap();
        let v = quad.vertices();
        for (a, b, c, d) in [(0, 1, 2, 3), (1, 2, 3, 0)] {
            let t1 = LatticePolygon::new(vec![v[a].clone(), v[b].clone(), v[c].clone()]).unwrap();
            let t2 = LatticePolygon::new(vec![v[a].clone(), v[c].clone(), v[d].clone()]).unwrap();
            let sum = canonical_form_polygon(&t1).unwrap().coefficient()
                .add(canonical_form_polygon(&t2).unwrap().coefficient());
            prop_assert!(whole.coefficient().equal(&sum));
        }
    }

    #[test]
    fn canonical_form_independent_of_fan_anchor(p in polygon(3..=7, 5)) {
        let base = canonical_form_fan(&p, 0).unwrap();
        for anchor in 1..p.len() {
            prop_assert!(canonical_form_fan(&p, anchor).unwrap().coefficient().equal(base.coefficient()));
        }
    }

    /// The form has a simple pole on each edge: its numerator does not
    /// vanish identically on any edge line (checked at edge midpoints).
    #[test]
    fn canonical_form_poles_on_every_edge(p in polygon(3..=6, 5)) {
        let form = canonical_form_polygon(&p).unwrap();
        for (a, b) in p.edges() {
            let mx = Rat::new(&a.x + &b.x, Int::from(2));
            let my = Rat::new(&a.y + &b.y, Int::from(2));
            prop_assert_ne!(form.numerator().eval(&mx, &my), q(0, 1));
        }
    }
}

proptest! {
    #![proptest_config(seeded(64, 0x6575))]

    #[test]
    fn smooth_vertices_have_euler_obstruction_one(p in polygon(3..=7, 6)) {
        for v in p.vertices() {
            if vertex_multiplicity(&p, v).unwrap().is_one() {
                prop_assert!(euler_obstruction_vertex(&p, v).unwrap().is_one());
            }
        }
    }
}

#[test]
fn euler_obstruction_characterizations_agree_on_pd() {
    for d in 2..=10 {
        let p = p_polygon(d).unwrap();
        for v in p.vertices() {
            assert_eq!(
                euler_obstruction_vertex(&p, v).unwrap(),
                euler_obstruction_by_area(&p, v).unwrap(),
                "d = {d}, vertex {v}"
            );
        }
    }
}

#[test]
fn pd_area_increments() {
    for d in 3..=10 {
        let diff =
            p_polygon(d).unwrap().normalized_area() - p_polygon(d - 1).unwrap().normalized_area();
        assert_eq!(diff, Int::from(d * (d - 1) / 2));
    }
    assert_eq!(
        p_polygon(2).unwrap().vertices(),
        &[pt(0, 0), pt(1, 0), pt(2, 1)]
    );
}
