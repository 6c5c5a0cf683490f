mod common;

use common::*;
use disjunct_codes::binmat::{null_space_enumerate, BitMatrix};
use disjunct_codes::bits::BitVec;
use disjunct_codes::decode::{
    bsc_campaign, iterate_bit_flip, majority_logic_step, run_trial, tillich_radius,
    verify_tillich_guarantee, CampaignConfig, DecodeError,
};
use proptest::prelude::*;

fn word(n: usize) -> impl Strategy<Value = Vec<bool>> {
    proptest::collection::vec(any::<bool>(), n)
}

fn xor(a: &BitVec, b: &BitVec) -> BitVec {
    let mut c = a.clone();
    c.xor_assign(b);
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Flip decisions depend on the syndrome only, so adding a codeword to
    /// the input adds it to the output.
    #[test]
    fn decoder_sees_only_the_syndrome(bits in word(10), pick in 0usize..64, rounds in 1usize..4) {
        let h = macula(2, 3, 5);
        let codewords: Vec<BitVec> = null_space_enumerate(&h, 1 << 20).unwrap().collect();
        let c = &codewords[pick % codewords.len()];
        let y = BitVec::from_bools(&bits);
        let a = iterate_bit_flip(&h, &y, rounds).unwrap();
        let b = iterate_bit_flip(&h, &xor(&y, c), rounds).unwrap();
        prop_assert_eq!(&xor(&a.output, c), &b.output);
        prop_assert_eq!(a.flipped, b.flipped);
        prop_assert_eq!(a.rounds, b.rounds);
        prop_assert_eq!(a.syndrome_weight_after, b.syndrome_weight_after);
    }

    /// The one-round radius is a theorem, so it holds on any matrix.
    #[test]
    fn guarantee_on_random_matrices(seed in 0u64..10_000) {
        let m = random_matrix(10, 12, 0.4, seed);
        let out = verify_tillich_guarantee(&m, 1 << 24).unwrap();
        prop_assert!(out.holds(), "{:?}", out);
    }

    #[test]
    fn one_step_flips_strict_majorities(seed in 0u64..10_000, bits in word(12)) {
        let h = random_matrix(8, 12, 0.4, seed);
        let y = BitVec::from_bools(&bits);
        let r = majority_logic_step(&h, &y).unwrap();
        let s = h.mul_vec(&y);
        for j in 0..h.cols() {
            let unsat = h.column_support(j).rows.iter().filter(|&&i| s.get(i)).count();
            let flips = 2 * unsat > h.column_weight(j);
            prop_assert_eq!(flips, r.flipped.contains(&j));
            prop_assert_eq!(r.output.get(j), y.get(j) ^ flips);
        }
    }
}

#[test]
fn zero_syndrome_takes_no_round() {
    let h = rs_example();
    let r = iterate_bit_flip(&h, &BitVec::zeros(16), 5).unwrap();
    assert_eq!((r.rounds, r.flipped.len()), (0, 0));
    assert!(r.is_codeword());
}

#[test]
fn single_errors_corrected_in_one_round() {
    let h = fu_hwang(&design("sqs10.design"));
    assert_eq!(tillich_radius(&h), 3);
    for j in 0..h.cols() {
        let r = majority_logic_step(&h, &BitVec::from_support(30, &[j])).unwrap();
        assert!(r.output.is_zero());
        assert_eq!(r.flipped, vec![j]);
    }
}

#[test]
fn wrong_length_is_rejected() {
    let h = macula(2, 3, 5);
    assert_eq!(
        majority_logic_step(&h, &BitVec::zeros(9)),
        Err(DecodeError::LengthMismatch {
            expected: 10,
            got: 9
        })
    );
}

#[test]
fn campaign_matches_individual_trials() {
    let h: BitMatrix = macula(2, 3, 6);
    let cfg = CampaignConfig {
        p: 0.1,
        trials: 400,
        seed: 7,
        max_rounds: 5,
        workers: 3,
        max_error_weight: None,
    };
    let s = bsc_campaign(&h, &cfg).unwrap();
    let fails = (0..400)
        .filter(|&t| !run_trial(&h, 0.1, 7, t, 5).success)
        .count() as u64;
    assert_eq!(s.failures, fails);
    assert_eq!(s.trials, 400);
    assert_eq!(s.failure_weights.values().sum::<u64>(), fails);
}
