//! Randomized invariants of the sets `S(λ)` and the parabolics they define.

use std::sync::OnceLock;

use parideal::irreducible::{
    cond_i, cond_iii, cond_iv, irreducible_ideal_of_parabolic, s_of_lambda, Parabolic,
};
use parideal::{RootSystem, Weight};
use proptest::prelude::*;

const SYSTEMS: [&str; 7] = ["A3", "B3", "C3", "D4", "G2", "F4", "A4"];

fn systems() -> &'static [RootSystem] {
    static CELL: OnceLock<Vec<RootSystem>> = OnceLock::new();
    CELL.get_or_init(|| {
        SYSTEMS
            .iter()
            .map(|s| RootSystem::new(s.parse().unwrap()))
            .collect()
    })
}

/// A system index and a nonzero weight in fundamental-weight coordinates.
fn system_and_weight() -> impl Strategy<Value = (usize, Weight)> {
    (0..SYSTEMS.len()).prop_flat_map(|k| {
        let rank = systems()[k].rank();
        proptest::collection::vec(-3i64..=3, rank)
            .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
            .prop_map(move |v| {
                let rs = &systems()[k];
                let lambda = v
                    .iter()
                    .enumerate()
                    .fold(Weight::zero(rank), |acc, (i, &c)| {
                        acc.add(&rs.fundamental_weight(i).scale(c.into()))
                    });
                (k, lambda)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn s_of_lambda_meets_every_condition((k, lambda) in system_and_weight()) {
        let rs = &systems()[k];
        let s = s_of_lambda(rs, &lambda).unwrap();
        prop_assert!(!s.is_empty());
        prop_assert!(cond_i(rs, &s));
        prop_assert!(cond_iv(rs, &s));
        if rs.num_roots() <= 48 {
            prop_assert!(cond_iii(rs, &s));
        }
    }

    #[test]
    fn s_of_lambda_ignores_positive_scaling((k, lambda) in system_and_weight(), c in 1i64..6) {
        let rs = &systems()[k];
        let s = s_of_lambda(rs, &lambda).unwrap();
        prop_assert_eq!(s_of_lambda(rs, &lambda.scale(c.into())).unwrap(), s);
    }

    #[test]
    fn s_of_lambda_is_weyl_equivariant(
        (k, lambda) in system_and_weight(),
        word in proptest::collection::vec(0usize..8, 0..6),
    ) {
        let rs = &systems()[k];
        let word: Vec<usize> = word.into_iter().map(|i| i % rs.rank()).collect();
        let moved = rs.apply_word(&word, &lambda);
        let s = s_of_lambda(rs, &lambda).unwrap();
        prop_assert_eq!(
            s_of_lambda(rs, &moved).unwrap(),
            s.map(|a| rs.apply_word_root(&word, a))
        );
    }

    #[test]
    fn irreducible_ideal_of_weight_parabolic((k, lambda) in system_and_weight()) {
        let rs = &systems()[k];
        let p = Parabolic::from_weight(rs, &lambda).unwrap();
        let i0 = irreducible_ideal_of_parabolic(rs, &p).unwrap();
        prop_assert_eq!(i0, s_of_lambda(rs, &lambda).unwrap());
    }
}
