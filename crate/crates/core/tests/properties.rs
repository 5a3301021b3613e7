//! Randomized invariants. Each case draws a seed and builds its inputs from it
//! with the shared generators.

mod common;

use common::*;
use monoid_core::exactnum::{int, BigRat};
use monoid_core::intersect::{intersection_multiplicity_at, is_transversal};
use monoid_core::monoid::{build_monoid, seeded_rng};
use monoid_core::mvpoly::{HPoly, ProjPoint};
use monoid_core::quartic::{quartic_report, tangent_cone_type};
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

/// Cones with known labels, used by the rescaling property.
const CLASSIFIED: [(&str, &str); 4] = [
    ("x1^3 + x2^3 + 5*x1*x2*x3", "-x3^3*(x1 + x2)"),
    ("x1*x2^2 + x3^3", "x1^4"),
    ("x1*x2*x3", "x1^4 + x2^4 + x3^4 + x1*x2*x3*(x1 + x2 + x3)"),
    ("x1^3 + x2^3 + x3^3", "x1^4 - 2*x2^4 + 3*x3^4 + x1*x2*x3^2"),
];

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn detected_case_survives_coordinate_changes(seed in any::<u64>(), which in 0usize..9) {
        let mut rng = seeded_rng(seed);
        let (case, text) = NORMAL_FORMS[which];
        let f = h(text).transform(&random_invertible(&mut rng));
        let got = tangent_cone_type(&f, &mut rng).unwrap().case;
        prop_assert_eq!(got, case);
    }

    #[test]
    fn multiplicity_one_iff_transversal(seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let c = common_zero_instance(&mut rng);
        if let Ok(i) = intersection_multiplicity_at(&c.f, &c.g, &c.p) {
            prop_assert!(i >= 1);
            prop_assert_eq!(is_transversal(&c.f, &c.g, &c.p).unwrap(), i == 1);
        }
    }

    #[test]
    fn natural_parameterization_lands_on_the_surface(seed in any::<u64>(), d in 3u32..5) {
        let mut rng = seeded_rng(seed);
        let (lo, hi) = (random_form(&mut rng, d - 1, 0.7, 5), random_form(&mut rng, d, 0.7, 5));
        prop_assume!(lo.degree() == Some(d - 1) && hi.degree() == Some(d));
        let Ok(m) = build_monoid(&lo, &hi) else { return Ok(()) };
        let f = m.whole();
        for _ in 0..5 {
            let a = ProjPoint::from_ints(&[rng.random_range(-9..=9), rng.random_range(-9..=9), 1]);
            if let Ok(p) = m.natural_param(&a) {
                prop_assert!(f.evaluate(&p).unwrap().is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(config(8))]

    #[test]
    fn base_points_fill_the_bezout_count(seed in any::<u64>(), d in 3u32..5) {
        let mut rng = seeded_rng(seed);
        let (lo, hi) = (random_form(&mut rng, d - 1, 0.6, 4), random_form(&mut rng, d, 0.6, 4));
        prop_assume!(lo.degree() == Some(d - 1) && hi.degree() == Some(d));
        let Ok(m) = build_monoid(&lo, &hi) else { return Ok(()) };
        prop_assert_eq!(m.base_point_profile().unwrap().total(), (d * (d - 1)) as usize);
    }

    #[test]
    fn rescaling_the_quartic_part_keeps_the_labels(seed in any::<u64>(), which in 0usize..4) {
        // x0·f3 + λ·f4 + ℓ·f3 is x0 ↦ x0 + ℓ followed by a scaling.
        let mut rng = seeded_rng(seed);
        let (f3, f4) = (h(CLASSIFIED[which].0), h(CLASSIFIED[which].1));
        let lambda = BigRat::new(rng.random_range(1..=7).into(), rng.random_range(1..=5).into());
        let lambda = if rng.random_bool(0.5) { -lambda } else { lambda };
        let l = HPoly::linear(&(0..3).map(|_| int(rng.random_range(-3..=3))).collect::<Vec<_>>());
        let moved = f4.scale(&lambda).add(&l.mul(&f3));
        let before = quartic_report(&f3, &f4).unwrap();
        let after = quartic_report(&f3, &moved).unwrap();
        prop_assert_eq!(before.labels(), after.labels());
        prop_assert_eq!(before.case(), after.case());
    }
}
