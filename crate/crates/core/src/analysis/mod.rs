//! Exhaustive verifiers: disjunctness, separability, girth and short cycles,
//! minimum and stopping distance, rates, and generalized Pasch
//! configurations.
//!
//! Every search takes an explicit work budget counted in elementary subset
//! checks, so running out of budget is deterministic.

mod disjunct;
mod distance;
mod girth;
mod params;
mod pasch;

pub(crate) use disjunct::weight_and_overlap;
pub use disjunct::{
    check_disjunct_witness, disjunct_profile, is_disjunct, is_separable, DisjunctOutcome,
    DisjunctProfile, FormulaD, SeparableOutcome, VerifiedD,
};
pub use distance::{min_distance, stopping_distance, StoppingDistance, ENUMERATION_DIMENSION};
pub use girth::{girth, girth_report, six_cycles, Girth, GirthReport, SixCycle};
pub use params::{
    code_parameters, fu_hwang_rate_bound, ks_rate_bound, macula_rate_bound, CodeParameters,
    Distance,
};
pub use pasch::{enumerate_generalized_pasch, find_generalized_pasch, pasch_size};

use thiserror::Error;

/// Default work budget: 10^8 elementary checks.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("search needs {needed} checks, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    /// A size search stopped early; no solution is smaller than
    /// `lower_bound`.
    #[error("budget of {budget} checks exhausted; value is at least {lower_bound}")]
    SearchExhausted { lower_bound: usize, budget: u64 },
    #[error("design must be an S(t,t+1,v): {0}")]
    NotApplicable(String),
}

impl AnalysisError {
    /// Proven lower bound carried by a partial distance search.
    pub fn lower_bound(&self) -> Option<usize> {
        match self {
            Self::SearchExhausted { lower_bound, .. } => Some(*lower_bound),
            _ => None,
        }
    }
}
