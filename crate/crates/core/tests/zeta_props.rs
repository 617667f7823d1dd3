mod common;

use common::{field, quartic_from};
use g3_core::zeta::l_polynomial_from_counts;
use proptest::prelude::*;

fn coeffs(n: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(any::<u64>(), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn l_polynomial_round_trip(p in prop::sample::select(&[3u64, 5, 7][..]), c in coeffs(15)) {
        let f = field((p, 1));
        let curve = quartic_from(&f, &c);
        prop_assume!(curve.as_ref().is_some_and(|q| q.is_smooth()));
        let curve = curve.unwrap();
        let counts = curve.count_series(3).unwrap();
        let l = l_polynomial_from_counts(p, [counts[0], counts[1], counts[2]]).unwrap();
        prop_assert!(l.weil_check());
        for r in 1..=3u32 {
            prop_assert_eq!(l.predict_count(r), counts[r as usize - 1] as i128);
        }
    }

    #[test]
    fn l_polynomial_predicts_fourth_count(pk in prop::sample::select(&[(2u64, 1usize), (3, 1), (2, 2)][..]), c in coeffs(15)) {
        let f = field(pk);
        let curve = quartic_from(&f, &c);
        prop_assume!(curve.as_ref().is_some_and(|q| q.is_smooth()));
        let curve = curve.unwrap();
        let counts = curve.count_series(4).unwrap();
        let l = l_polynomial_from_counts(f.q(), [counts[0], counts[1], counts[2]]).unwrap();
        prop_assert_eq!(l.predict_count(4), counts[3] as i128);
    }
}
