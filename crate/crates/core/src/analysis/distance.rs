use std::collections::HashMap;

use super::AnalysisError;
use crate::binmat::{null_space_enumerate, rank_gf2, BitMatrix};
use crate::bits::{self, words_for};
use crate::combinat::{binomial, Subsets};

/// Codes up to this dimension are scanned word by word; larger ones are
/// searched by increasing column-subset size.
pub const ENUMERATION_DIMENSION: usize = 24;

/// Minimum distance of `C(m) = {x : m x = 0}`; `None` for the zero code.
///
/// When the subset search runs out of budget the error carries a proven
/// lower bound.
pub fn min_distance(m: &BitMatrix, budget: u64) -> Result<Option<usize>, AnalysisError> {
    let n = m.cols();
    let dimension = n - rank_gf2(m);
    if dimension == 0 {
        return Ok(None);
    }
    if dimension <= ENUMERATION_DIMENSION {
        let words = 1u64 << dimension;
        if words > budget {
            return Err(AnalysisError::BudgetExceeded {
                needed: words,
                budget,
            });
        }
        let iter = null_space_enumerate(m, budget).expect("dimension checked against budget");
        return Ok(iter.skip(1).map(|w| w.weight()).min());
    }
    subset_search(m, budget).map(Some)
}

/// Smallest `w` such that some `w` columns sum to zero: for each
/// `(w-1)`-subset, look its sum up among the later columns.
fn subset_search(m: &BitMatrix, budget: u64) -> Result<usize, AnalysisError> {
    let n = m.cols();
    let mut by_value: HashMap<&[u64], Vec<usize>> = HashMap::new();
    for j in 0..n {
        by_value.entry(m.column(j)).or_default().push(j);
    }
    let stride = words_for(m.rows());
    let mut spent = 0u64;
    for w in 1..=n {
        let size = w - 1;
        spent = spent.saturating_add(binomial(n, size));
        if spent > budget {
            return Err(AnalysisError::SearchExhausted {
                lower_bound: w,
                budget,
            });
        }
        let mut subsets = Subsets::new(n, size);
        while let Some(set) = subsets.next_subset() {
            let mut sum = vec![0u64; stride];
            for &j in set {
                bits::xor_into(&mut sum, m.column(j));
            }
            let after = set.last().map_or(0, |&l| l + 1);
            if let Some(cols) = by_value.get(sum.as_slice()) {
                if cols.iter().any(|&j| j >= after) {
                    return Ok(w);
                }
            }
        }
    }
    unreachable!("a nonzero code has a dependent column set")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StoppingDistance {
    /// Size of a smallest nonempty stopping set, with the lexicographically
    /// first one of that size.
    Found { size: usize, set: Vec<usize> },
    /// No nonempty stopping set of any size.
    NoneWithinCap,
}

impl StoppingDistance {
    pub fn size(&self) -> Option<usize> {
        match self {
            Self::Found { size, .. } => Some(*size),
            Self::NoneWithinCap => None,
        }
    }
}

/// Smallest nonempty column set on which no row has weight exactly one.
///
/// `lower_bound` skips sizes already ruled out, e.g. `D + 2` for a
/// D-disjunct matrix; it must be a proven bound. `budget` counts search
/// nodes.
pub fn stopping_distance(
    m: &BitMatrix,
    budget: u64,
    lower_bound: Option<usize>,
) -> Result<StoppingDistance, AnalysisError> {
    let n = m.cols();
    let stride = words_for(m.rows());
    // suffix[j] = union of columns j..n.
    let mut suffix = vec![vec![0u64; stride]; n + 1];
    for j in (0..n).rev() {
        let mut u = suffix[j + 1].clone();
        bits::or_into(&mut u, m.column(j));
        suffix[j] = u;
    }
    let mut search = StopSearch {
        m,
        suffix,
        nodes: 0,
        budget,
        chosen: Vec::new(),
    };
    let start = lower_bound.unwrap_or(1).max(1);
    for size in start..=n {
        let once = vec![0u64; stride];
        let multi = vec![0u64; stride];
        match search.run(size, 0, once, multi) {
            Ok(true) => {
                return Ok(StoppingDistance::Found {
                    size,
                    set: search.chosen,
                })
            }
            Ok(false) => {}
            Err(()) => {
                return Err(AnalysisError::SearchExhausted {
                    lower_bound: size,
                    budget,
                })
            }
        }
    }
    Ok(StoppingDistance::NoneWithinCap)
}

struct StopSearch<'a> {
    m: &'a BitMatrix,
    suffix: Vec<Vec<u64>>,
    nodes: u64,
    budget: u64,
    chosen: Vec<usize>,
}

impl StopSearch<'_> {
    /// `once` holds rows hit exactly once by the chosen columns, `multi`
    /// rows hit at least twice.
    fn run(
        &mut self,
        size: usize,
        start: usize,
        once: Vec<u64>,
        multi: Vec<u64>,
    ) -> Result<bool, ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        if self.chosen.len() == size {
            return Ok(once.iter().all(|&w| w == 0));
        }
        // Rows hit once must be hit again by a later column.
        if !bits::is_subset(&once, &self.suffix[start]) {
            return Ok(false);
        }
        let n = self.m.cols();
        let left = size - self.chosen.len();
        for j in start..=n - left {
            let col = self.m.column(j);
            let new_multi: Vec<u64> = multi
                .iter()
                .zip(&once)
                .zip(col)
                .map(|((mu, o), c)| mu | (o & c))
                .collect();
            let new_once: Vec<u64> = once
                .iter()
                .zip(col)
                .zip(&new_multi)
                .map(|((o, c), mu)| (o | c) & !mu)
                .collect();
            self.chosen.push(j);
            if self.run(size, j + 1, new_once, new_multi)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}
