use cuspidal::poly::{rat, Rat};
use cuspidal::series::TruncSeries;
use proptest::prelude::*;

const N: usize = 8;

fn series(c: &[i64]) -> TruncSeries<Rat> {
    TruncSeries::new(&(), c.iter().map(|&v| rat(v)).collect(), N)
}

fn tail() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, N)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn double_inverse(c0 in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), rest in tail()) {
        let mut c = vec![c0];
        c.extend(rest);
        let s = series(&c);
        prop_assert_eq!(s.invert_unit().unwrap().invert_unit().unwrap(), s.clone());
        let one = s.mul(&s.invert_unit().unwrap());
        prop_assert_eq!(one, series(&[1]));
    }

    #[test]
    fn root_then_power(rest in tail(), n in 1u32..=6) {
        let mut c = vec![1];
        c.extend(rest);
        let s = series(&c);
        prop_assert_eq!(s.nth_root_unit(n).unwrap().pow(n), s);
    }

    #[test]
    fn double_reversion(c1 in prop::sample::select(vec![-2i64, -1, 1, 2]), rest in prop::collection::vec(-4i64..=4, N - 1)) {
        let mut c = vec![0, c1];
        c.extend(rest);
        let s = series(&c);
        let r = s.reverse_series().unwrap();
        prop_assert_eq!(r.reverse_series().unwrap(), s.clone());
        prop_assert_eq!(s.compose(&r).unwrap(), series(&[0, 1]));
    }
}
