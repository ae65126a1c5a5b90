use moonshine_core::hecke::{hecke, hecke_scaled};
use moonshine_core::{LaurentSeries, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// A series with the given valuation range, nonzero leading term, order <= 20.
fn series(v: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = LaurentSeries> {
    (v, 0i64..=20).prop_flat_map(|(val, extra)| {
        let len = (extra + 1) as usize;
        (rational(), prop::collection::vec(rational(), len)).prop_map(move |(lead, mut rest)| {
            rest[0] = if lead.is_zero() {
                Rational::one()
            } else {
                lead
            };
            LaurentSeries::from_coeffs(val, rest, val + extra)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in series(-3..=3), g in series(-3..=3), h in series(-3..=3)) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn inverse(f in series(-4..=4)) {
        let fi = f.inv().unwrap();
        let p = &f * &fi;
        prop_assert_eq!(p.order(), f.order() - f.valuation());
        prop_assert_eq!(p, LaurentSeries::one(f.order() - f.valuation()));
        prop_assert_eq!(fi.inv().unwrap(), f);
    }

    #[test]
    fn exp_log(a in series(1..=3), b in series(1..=3)) {
        prop_assert_eq!(a.exp().unwrap().log().unwrap(), a.clone());
        prop_assert_eq!((&a + &b).exp().unwrap(), &a.exp().unwrap() * &b.exp().unwrap());
        let one_plus = &LaurentSeries::one(a.order()) + &a;
        prop_assert_eq!(one_plus.log().unwrap().exp().unwrap(), one_plus);
    }

    #[test]
    fn substitution_composes(f in series(-2..=2), m in 1u32..=4, n in 1u32..=4) {
        let lhs = f.substitute_power(m).unwrap().substitute_power(n).unwrap();
        prop_assert_eq!(lhs, f.substitute_power(m * n).unwrap());
        // substitution is a ring map
        let sq = (&f * &f).substitute_power(m).unwrap();
        let fm = f.substitute_power(m).unwrap();
        prop_assert_eq!(sq, &fm * &fm);
    }

    #[test]
    fn theta_is_a_derivation(f in series(-3..=3), g in series(-3..=3)) {
        prop_assert_eq!((&f * &g).theta(), &(&f.theta() * &g) + &(&f * &g.theta()));
    }

    #[test]
    fn json_round_trip(f in series(-5..=5)) {
        let back = LaurentSeries::from_json(&f.to_json()).unwrap();
        prop_assert_eq!(back.order(), f.order());
        prop_assert_eq!(back.valuation(), f.valuation());
        prop_assert_eq!(back, f);
    }

    #[test]
    fn hecke_is_linear(f in series(-1..=3), g in series(-1..=3), k in 1u64..=4) {
        let sum = hecke_scaled(&(&f + &g), k).unwrap();
        let parts = &hecke_scaled(&f, k).unwrap() + &hecke_scaled(&g, k).unwrap();
        prop_assert_eq!(sum, parts);
        prop_assert_eq!(hecke(&f, 1).unwrap(), f);
    }
}
