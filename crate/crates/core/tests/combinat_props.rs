use lagrange_kit::combinat::{
    cayley_degree_sum, cycle_lemma_count, decode_reduced, enumerate_ordered_forests,
    prufer_decode, prufer_encode, reduced_code, suffix_code, OracleError,
};
use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prufer_round_trip(m in 2usize..=9, seed in vec(1usize..=9, 7)) {
        let code: Vec<usize> = seed.iter().take(m - 2).map(|&c| (c - 1) % m + 1).collect();
        let tree = prufer_decode(m, &code).unwrap();
        prop_assert_eq!(tree.len(), m - 1);
        prop_assert_eq!(prufer_encode(m, &tree).unwrap(), code);
    }

    #[test]
    fn cycle_lemma_counts_k(seq in vec(-1i64..=2, 1..=10)) {
        let sum: i64 = seq.iter().sum();
        match cycle_lemma_count(&seq) {
            Ok(count) => prop_assert_eq!(count as i64, -sum),
            Err(OracleError::BadSequence(_)) => prop_assert!(sum >= 0),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}

#[test]
fn reduced_code_round_trip() {
    for n in 1..=7 {
        for k in 1..=n.min(3) {
            for f in enumerate_ordered_forests(n, k).unwrap() {
                let code = reduced_code(&f);
                assert_eq!(code.iter().sum::<i64>(), -(k as i64));
                assert_eq!(decode_reduced(&code, k).unwrap(), f);
                assert_eq!(suffix_code(&f).len(), n);
            }
        }
    }
}

#[test]
fn cayley_consistency() {
    for m in 2..=7usize {
        assert_eq!(cayley_degree_sum(m), BigInt::from(m).pow(m as u32 - 2));
    }
}
