mod common;

use parahom::zigzag::{coarsen, decompose, dualize, multiplicity, Direction, ZigzagModule};
use parahom::checks::restrict_bars;
use parahom::linalg::PrimeField;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_matches_hom_oracle(seed in any::<u64>(), len in 1usize..=5) {
        let mut rng = common::rng(seed);
        let m = common::random_module(&mut rng, len, 3);
        prop_assert_eq!(decompose(&m).unwrap(), common::brute_force_decomposition(&m));
    }

    #[test]
    fn interval_sums_recover_their_intervals(seed in any::<u64>(), len in 1usize..=8) {
        let mut rng = common::rng(seed);
        let (m, bars) = common::random_interval_sum(&mut rng, len, 4);
        let got = decompose(&m).unwrap();
        prop_assert_eq!(got.dimension_vector(), m.dims().to_vec());
        prop_assert_eq!(got, bars);
    }

    #[test]
    fn duals_have_the_same_bars(seed in any::<u64>(), len in 1usize..=7) {
        let mut rng = common::rng(seed);
        let m = common::random_module(&mut rng, len, 4);
        prop_assert_eq!(decompose(&dualize(&m)).unwrap(), decompose(&m).unwrap());
    }

    #[test]
    fn coarsening_restricts_bars(seed in any::<u64>(), len in 3usize..=8) {
        let mut rng = common::rng(seed);
        let m = common::random_module(&mut rng, len, 4);
        let bars = decompose(&m).unwrap();
        let dirs = m.directions();
        for k in 1..len - 1 {
            if dirs[k - 1] == dirs[k] {
                prop_assert_eq!(decompose(&coarsen(&m, k).unwrap()).unwrap(), restrict_bars(&bars, k));
            } else {
                prop_assert!(coarsen(&m, k).is_err());
            }
        }
    }

    #[test]
    fn single_multiplicity_agrees_with_sweep(seed in any::<u64>(), len in 1usize..=6) {
        let mut rng = common::rng(seed);
        let m = common::random_module(&mut rng, len, 3);
        let bars = decompose(&m).unwrap();
        for p in 0..len {
            for q in p..len {
                prop_assert_eq!(multiplicity(&m, p, q).unwrap(), bars.get(p, q));
            }
        }
    }
}

#[test]
fn interval_modules_are_indecomposable() {
    let f = PrimeField::new(3).unwrap();
    let dirs = [Direction::Forward, Direction::Backward, Direction::Backward];
    for p in 0..4 {
        for q in p..4 {
            let bars = decompose(&ZigzagModule::interval(f, &dirs, p, q).unwrap()).unwrap();
            assert_eq!(bars.total(), 1);
            assert_eq!(bars.get(p, q), 1);
        }
    }
}

#[test]
fn shape_errors() {
    let f = PrimeField::GF2;
    let m = ZigzagModule::interval(f, &[Direction::Forward], 0, 1).unwrap();
    assert!(coarsen(&m, 0).is_err());
    assert!(ZigzagModule::interval(f, &[Direction::Forward], 1, 0).is_err());
}
