use lagrange_kit::identities::{run_identity, IdentityParams, IDENTITY_NAMES};
use proptest::prelude::*;

const MONOTONE: [&str; 6] = [
    "catalan",
    "tree-function",
    "lacasse",
    "fc-polynomial",
    "weighted-stirling",
    "q-l",
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn reports_are_monotone_in_order(which in 0..MONOTONE.len(), n in 2usize..=12) {
        let name = MONOTONE[which];
        let params = IdentityParams::default();
        let top = run_identity(name, &params, n).unwrap();
        prop_assert!(top.passed());
        for lower in 1..n {
            prop_assert!(run_identity(name, &params, lower).unwrap().passed(), "{} at {}", name, lower);
        }
    }
}

#[test]
fn every_listed_identity_runs() {
    let quick = IdentityParams {
        n_max: Some(3),
        k: Some(2),
        p: Some(2),
        ..Default::default()
    };
    for name in IDENTITY_NAMES {
        let r = run_identity(name, &quick, 8).unwrap();
        assert!(r.passed(), "{name}: {:?}", r.first_failure);
        assert_eq!(r.identity, name);
    }
}

#[test]
fn two_stack_sortable_polynomial() {
    let params = IdentityParams {
        p: Some(3),
        i: Some(0),
        j: Some(2),
        ..Default::default()
    };
    let r = run_identity("fc-polynomial", &params, 20).unwrap();
    assert!(r.passed());
    assert_eq!(r.details["polynomial"], "2 - x");
}
