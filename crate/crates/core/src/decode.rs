//! Majority-logic bit flipping: one round flips, simultaneously, every bit
//! whose unsatisfied checks are a strict majority of its checks. A tie does
//! not flip.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::binmat::BitMatrix;
use crate::bits::{self, BitVec};
use crate::combinat::{binomial, Subsets};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error("word has length {got}, matrix has {expected} columns")]
    LengthMismatch { expected: usize, got: usize },
    #[error("guarantee check needs {needed} patterns, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("invalid campaign setting: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub output: BitVec,
    /// Positions flipped, over all rounds, in flip order.
    pub flipped: Vec<usize>,
    pub rounds: usize,
    pub syndrome_weight_before: usize,
    pub syndrome_weight_after: usize,
}

impl DecodeResult {
    pub fn is_codeword(&self) -> bool {
        self.syndrome_weight_after == 0
    }
}

fn check_len(h: &BitMatrix, word: &BitVec) -> Result<(), DecodeError> {
    if word.len() != h.cols() {
        return Err(DecodeError::LengthMismatch {
            expected: h.cols(),
            got: word.len(),
        });
    }
    Ok(())
}

/// Positions whose unsatisfied-check count strictly exceeds half their
/// column weight.
fn flip_set(h: &BitMatrix, syndrome: &BitVec) -> Vec<usize> {
    (0..h.cols())
        .filter(|&j| 2 * bits::and_popcount(h.column(j), syndrome.words()) > h.column_weight(j))
        .collect()
}

/// One round. A word with zero syndrome is returned unchanged with
/// `rounds = 0`.
pub fn majority_logic_step(h: &BitMatrix, word: &BitVec) -> Result<DecodeResult, DecodeError> {
    check_len(h, word)?;
    let syndrome = h.mul_vec(word);
    let before = syndrome.weight();
    if before == 0 {
        return Ok(DecodeResult {
            output: word.clone(),
            flipped: Vec::new(),
            rounds: 0,
            syndrome_weight_before: 0,
            syndrome_weight_after: 0,
        });
    }
    let flipped = flip_set(h, &syndrome);
    let mut output = word.clone();
    for &j in &flipped {
        output.flip(j);
    }
    let after = h.mul_vec(&output).weight();
    Ok(DecodeResult {
        output,
        flipped,
        rounds: 1,
        syndrome_weight_before: before,
        syndrome_weight_after: after,
    })
}

/// Repeats [`majority_logic_step`] until the syndrome is zero, a round
/// flips nothing, or `max_rounds` rounds have run.
pub fn iterate_bit_flip(
    h: &BitMatrix,
    word: &BitVec,
    max_rounds: usize,
) -> Result<DecodeResult, DecodeError> {
    check_len(h, word)?;
    let before = h.mul_vec(word).weight();
    let mut current = word.clone();
    let mut flipped = Vec::new();
    let mut rounds = 0;
    let mut after = before;
    while after != 0 && rounds < max_rounds {
        let step = majority_logic_step(h, &current)?;
        if step.flipped.is_empty() {
            break;
        }
        rounds += 1;
        flipped.extend(step.flipped);
        after = step.syndrome_weight_after;
        current = step.output;
    }
    Ok(DecodeResult {
        output: current,
        flipped,
        rounds,
        syndrome_weight_before: before,
        syndrome_weight_after: after,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TillichOutcome {
    /// Every error of weight `1..=radius` is corrected in one round.
    Holds { radius: usize, patterns: u64 },
    /// The first uncorrected error support, in (weight, lexicographic) order.
    Counterexample { radius: usize, error: Vec<usize> },
}

impl TillichOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, Self::Holds { .. })
    }

    pub fn radius(&self) -> usize {
        match self {
            Self::Holds { radius, .. } | Self::Counterexample { radius, .. } => *radius,
        }
    }
}

/// `floor(v_min / (2 a_max))`; with disjoint column supports every error is
/// within reach, so the radius is the length.
pub fn tillich_radius(h: &BitMatrix) -> usize {
    let (v_min, a_max) = crate::analysis::weight_and_overlap(h);
    if a_max == 0 {
        if v_min == 0 {
            0
        } else {
            h.cols()
        }
    } else {
        v_min / (2 * a_max)
    }
}

/// Runs one round on every error pattern of weight `1..=radius` added to
/// the zero word. The decoder only sees the syndrome, so the zero word
/// stands for every codeword.
pub fn verify_tillich_guarantee(h: &BitMatrix, budget: u64) -> Result<TillichOutcome, DecodeError> {
    let n = h.cols();
    let radius = tillich_radius(h);
    let patterns = (1..=radius)
        .map(|w| binomial(n, w))
        .fold(0u64, u64::saturating_add);
    if patterns > budget {
        return Err(DecodeError::BudgetExceeded {
            needed: patterns,
            budget,
        });
    }
    let weights: Vec<usize> = h.column_weights();
    for w in 1..=radius {
        let mut subsets = Subsets::new(n, w);
        while let Some(err) = subsets.next_subset() {
            let mut syndrome = BitVec::zeros(h.rows());
            for &j in err {
                syndrome.xor_assign(&h.column_vec(j));
            }
            let corrected = (0..n).all(|j| {
                let flips = 2 * bits::and_popcount(h.column(j), syndrome.words()) > weights[j];
                flips == err.binary_search(&j).is_ok()
            });
            if !corrected {
                return Ok(TillichOutcome::Counterexample {
                    radius,
                    error: err.to_vec(),
                });
            }
        }
    }
    Ok(TillichOutcome::Holds { radius, patterns })
}

/// One channel use: the zero word through a binary symmetric channel, then
/// [`iterate_bit_flip`].
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelTrial {
    pub seed: u64,
    pub trial: u64,
    pub p: f64,
    pub error: BitVec,
    pub result: DecodeResult,
    pub success: bool,
}

/// Error vector for `trial`: ChaCha8 seeded with `seed`, stream `trial`.
pub fn trial_error(n: usize, p: f64, seed: u64, trial: u64) -> BitVec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut e = BitVec::zeros(n);
    for j in 0..n {
        if rng.gen_bool(p) {
            e.set(j, true);
        }
    }
    e
}

pub fn run_trial(h: &BitMatrix, p: f64, seed: u64, trial: u64, max_rounds: usize) -> ChannelTrial {
    let error = trial_error(h.cols(), p, seed, trial);
    let result = iterate_bit_flip(h, &error, max_rounds).expect("error has matrix length");
    let success = result.output.is_zero();
    ChannelTrial {
        seed,
        trial,
        p,
        error,
        result,
        success,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    pub p: f64,
    pub trials: u64,
    pub seed: u64,
    pub max_rounds: usize,
    /// Worker threads; results do not depend on this.
    pub workers: usize,
    /// Discard trials whose error weight exceeds this.
    pub max_error_weight: Option<usize>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            p: 0.01,
            trials: 1000,
            seed: 0,
            max_rounds: 10,
            workers: 1,
            max_error_weight: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignSummary {
    pub p: f64,
    /// Trials decoded (drawn minus discarded).
    pub trials: u64,
    pub discarded: u64,
    pub failures: u64,
    pub total_rounds: u64,
    /// Error weight of each failed trial, counted.
    pub failure_weights: BTreeMap<usize, u64>,
}

impl CampaignSummary {
    pub fn failure_rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.failures as f64 / self.trials as f64
        }
    }

    pub fn mean_rounds(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.total_rounds as f64 / self.trials as f64
        }
    }

    pub const CSV_HEADER: &'static str = "p,trials,failures,failure_rate,mean_rounds";

    pub fn csv_row(&self) -> String {
        let mut s = String::new();
        write!(
            s,
            "{},{},{},{:.6},{:.6}",
            self.p,
            self.trials,
            self.failures,
            self.failure_rate(),
            self.mean_rounds()
        )
        .unwrap();
        s
    }
}

/// Monte Carlo over the binary symmetric channel. Trial `i` uses its own
/// random stream, so the summary depends only on `(p, trials, seed,
/// max_rounds, max_error_weight)`.
pub fn bsc_campaign(h: &BitMatrix, cfg: &CampaignConfig) -> Result<CampaignSummary, DecodeError> {
    if !(0.0..=1.0).contains(&cfg.p) {
        return Err(DecodeError::InvalidConfig(format!(
            "p = {} is not a probability",
            cfg.p
        )));
    }
    if cfg.workers == 0 {
        return Err(DecodeError::InvalidConfig(
            "workers must be at least 1".into(),
        ));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| DecodeError::InvalidConfig(e.to_string()))?;
    let outcomes: Vec<Option<(bool, usize, usize)>> = pool.install(|| {
        (0..cfg.trials)
            .into_par_iter()
            .map(|trial| {
                let error = trial_error(h.cols(), cfg.p, cfg.seed, trial);
                let weight = error.weight();
                if cfg.max_error_weight.is_some_and(|m| weight > m) {
                    return None;
                }
                let r = iterate_bit_flip(h, &error, cfg.max_rounds).expect("length matches");
                Some((r.output.is_zero(), r.rounds, weight))
            })
            .collect()
    });
    let mut summary = CampaignSummary {
        p: cfg.p,
        trials: 0,
        discarded: 0,
        failures: 0,
        total_rounds: 0,
        failure_weights: BTreeMap::new(),
    };
    for o in outcomes {
        match o {
            None => summary.discarded += 1,
            Some((ok, rounds, weight)) => {
                summary.trials += 1;
                summary.total_rounds += rounds as u64;
                if !ok {
                    summary.failures += 1;
                    *summary.failure_weights.entry(weight).or_default() += 1;
                }
            }
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming() -> BitMatrix {
        BitMatrix::from_rows(&[
            [0, 0, 0, 1, 1, 1, 1],
            [0, 1, 1, 0, 0, 1, 1],
            [1, 0, 1, 0, 1, 0, 1],
        ])
    }

    /// 3x3 grid code: rows and columns of a 3x3 array as checks. Each bit is
    /// in two checks sharing nothing else with any other bit.
    fn grid() -> BitMatrix {
        let mut supports = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                supports.push(vec![r, 3 + c]);
            }
        }
        BitMatrix::from_column_supports(6, &supports)
    }

    #[test]
    fn codeword_is_untouched() {
        let h = hamming();
        let zero = BitVec::zeros(7);
        let r = majority_logic_step(&h, &zero).unwrap();
        assert_eq!(r.output, zero);
        assert!(r.flipped.is_empty());
        assert_eq!(r.rounds, 0);
        assert_eq!(iterate_bit_flip(&h, &zero, 5).unwrap().rounds, 0);
    }

    #[test]
    fn length_is_checked() {
        assert_eq!(
            majority_logic_step(&hamming(), &BitVec::zeros(6)),
            Err(DecodeError::LengthMismatch {
                expected: 7,
                got: 6
            })
        );
    }

    #[test]
    fn tie_does_not_flip() {
        // Single error on the grid: its two checks fail, so it flips (2 > 1);
        // every other bit sees at most one of its two checks fail (a tie).
        let h = grid();
        let e = BitVec::from_support(9, &[4]);
        let r = majority_logic_step(&h, &e).unwrap();
        assert_eq!(r.flipped, vec![4]);
        assert!(r.output.is_zero());
    }

    #[test]
    fn grid_radius() {
        let h = grid();
        assert_eq!(tillich_radius(&h), 1);
        assert_eq!(
            verify_tillich_guarantee(&h, 100).unwrap(),
            TillichOutcome::Holds {
                radius: 1,
                patterns: 9
            }
        );
        assert!(verify_tillich_guarantee(&h, 5).is_err());
    }

    #[test]
    fn identity_radius_is_length() {
        let h = BitMatrix::identity(4);
        assert_eq!(tillich_radius(&h), 4);
        assert!(verify_tillich_guarantee(&h, 100).unwrap().holds());
    }

    #[test]
    fn campaign_is_deterministic_across_workers() {
        let h = grid();
        let base = CampaignConfig {
            p: 0.2,
            trials: 300,
            seed: 7,
            ..CampaignConfig::default()
        };
        let one = bsc_campaign(&h, &base).unwrap();
        let four = bsc_campaign(
            &h,
            &CampaignConfig {
                workers: 4,
                ..base.clone()
            },
        )
        .unwrap();
        assert_eq!(one, four);
        assert_eq!(one.csv_row(), four.csv_row());
        assert_eq!(one.trials, 300);
    }

    #[test]
    fn zero_noise_never_fails() {
        let s = bsc_campaign(
            &grid(),
            &CampaignConfig {
                p: 0.0,
                trials: 50,
                ..CampaignConfig::default()
            },
        )
        .unwrap();
        assert_eq!(s.failures, 0);
        assert_eq!(s.csv_row(), "0,50,0,0.000000,0.000000");
    }

    #[test]
    fn conditioning_discards_heavy_errors() {
        let s = bsc_campaign(
            &grid(),
            &CampaignConfig {
                p: 0.3,
                trials: 200,
                max_error_weight: Some(1),
                ..CampaignConfig::default()
            },
        )
        .unwrap();
        assert_eq!(s.failures, 0);
        assert_eq!(s.trials + s.discarded, 200);
        assert!(s.trials > 0);
    }

    #[test]
    fn bad_probability() {
        let cfg = CampaignConfig {
            p: 1.5,
            ..CampaignConfig::default()
        };
        assert!(matches!(
            bsc_campaign(&grid(), &cfg),
            Err(DecodeError::InvalidConfig(_))
        ));
    }
}
