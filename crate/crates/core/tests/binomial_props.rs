mod common;

use common::{seeded, torus_coord};
use num_traits::{One, Zero};
use proptest::prelude::*;
use toric_core::binomials::{binomial_generators, hypersurface_equation, vanishes_on_torus};
use toric_core::osculation::build_ak;
use toric_core::toric::{Configuration, TorusPoint};
use toric_core::{Int, IntMatrix};

fn configuration() -> impl Strategy<Value = Configuration> {
    (1usize..=2, 3usize..=6)
        .prop_flat_map(|(m, c)| {
            proptest::collection::vec(-3i64..=3, m * c).prop_map(move |v| {
                let mut data = vec![Int::one(); c];
                data.extend(v.into_iter().map(Int::from));
                IntMatrix::from_vec(m + 1, c, data).unwrap()
            })
        })
        .prop_filter_map("valid configuration", |a| Configuration::validate(a).ok())
}

/// `w_i = (-1)^(d-i) binom(d, i)`, computed by Pascal's rule.
fn alternating_binomials(d: usize) -> Vec<Int> {
    let mut row = vec![Int::one()];
    for _ in 0..d {
        let mut next = vec![Int::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row.into_iter()
        .enumerate()
        .map(|(i, b)| if (d - i).is_multiple_of(2) { b } else { -b })
        .collect()
}

proptest! {
    #![proptest_config(seeded(64, 0x62696e6f))]

    #[test]
    fn generators_vanish_and_are_homogeneous(
        (a, t) in configuration().prop_flat_map(|a| {
            let dim = a.matrix().nrows() - 1;
            (Just(a), proptest::collection::vec(torus_coord(), dim))
        })
    ) {
        let x = a.monomial_eval(&TorusPoint::new(t).unwrap()).unwrap();
        let sys = binomial_generators(&a).unwrap();
        prop_assert!(sys.torus_only);
        for b in &sys.binomials {
            prop_assert!(b.eval(&x).unwrap().is_zero());
            prop_assert!(b.is_homogeneous());
            prop_assert!(vanishes_on_torus(b, &a).unwrap());
        }
    }

    #[test]
    fn hypersurface_of_rational_normal_interpolant(d in 3usize..=10) {
        let a = Configuration::rational_normal_curve(d).unwrap();
        let ak = Configuration::validate(build_ak(&a, d - 1).unwrap()).unwrap();
        let h = hypersurface_equation(&ak).unwrap();
        prop_assert_eq!(h.degree, 1u64 << (d - 1));
        let w = alternating_binomials(d);
        let v = h.binomial.exponent_vector();
        let neg: Vec<Int> = w.iter().map(|x| -x).collect();
        prop_assert!(v == w || v == neg);
        prop_assert_eq!(h.binomial.plus_degree(), h.binomial.minus_degree());
    }
}
