use std::collections::HashMap;

use rayon::prelude::*;

use super::AnalysisError;
use crate::binmat::BitMatrix;
use crate::bits::{self, words_for};
use crate::combinat::{binomial, Subsets};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DisjunctOutcome {
    Disjunct,
    /// `designated` is covered by the union of `others`. This is the least
    /// witness ordered by designated column, then lexicographically by
    /// `others`.
    NotDisjunct {
        designated: usize,
        others: Vec<usize>,
    },
}

impl DisjunctOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, Self::Disjunct)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparableOutcome {
    Separable,
    /// Two distinct column sets with the same Boolean sum; `first` comes
    /// earlier in (size, lexicographic) order.
    NotSeparable {
        first: Vec<usize>,
        second: Vec<usize>,
    },
}

impl SeparableOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, Self::Separable)
    }
}

/// `floor((w_min - 1) / a_max)`, with the two degenerate cases kept apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaD {
    Value(usize),
    /// `a_max = 0`: column supports are pairwise disjoint.
    Unbounded,
    /// `w_min = 0`: some column is zero.
    NotApplicable,
}

/// Largest D confirmed by exhaustive checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifiedD {
    /// D-disjunct but not (D+1)-disjunct.
    Exact(usize),
    /// D-disjunct with D = cols - 1, the largest meaningful value.
    Capped(usize),
    /// D-disjunct; checking D+1 would exceed the budget.
    AtLeast(usize),
    /// Not even 0-disjunct (a zero column).
    NotDisjunct,
    /// The D = 0 check alone exceeds the budget.
    Unknown,
}

impl VerifiedD {
    pub fn value(&self) -> Option<usize> {
        match *self {
            Self::Exact(d) | Self::Capped(d) | Self::AtLeast(d) => Some(d),
            Self::NotDisjunct | Self::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DisjunctProfile {
    pub w_min: usize,
    pub a_max: usize,
    pub formula: FormulaD,
    pub verified: VerifiedD,
}

fn disjunct_work(n: usize, d: usize) -> u64 {
    binomial(n.saturating_sub(1), d).saturating_mul(n as u64)
}

/// Exhaustive D-disjunct check: for every designated column `c` and every
/// D-set `T` of other columns, `support(c)` must not lie inside the union of
/// `T`'s supports.
pub fn is_disjunct(m: &BitMatrix, d: usize, budget: u64) -> Result<DisjunctOutcome, AnalysisError> {
    let n = m.cols();
    if d >= n {
        return Ok(DisjunctOutcome::Disjunct);
    }
    let needed = disjunct_work(n, d);
    if needed > budget {
        return Err(AnalysisError::BudgetExceeded { needed, budget });
    }
    let witness = (0..n).into_par_iter().find_map_first(|c| {
        let mut chosen = Vec::with_capacity(d);
        cover_search(m, c, d, 0, m.column(c).to_vec(), &mut chosen).then_some((c, chosen))
    });
    Ok(match witness {
        None => DisjunctOutcome::Disjunct,
        Some((designated, others)) => DisjunctOutcome::NotDisjunct { designated, others },
    })
}

/// Depth-first walk over D-sets of columns other than `c`, in lexicographic
/// order. `remaining` is the part of `support(c)` not yet covered. Returns
/// true with `chosen` holding the first covering set.
fn cover_search(
    m: &BitMatrix,
    c: usize,
    d: usize,
    start: usize,
    remaining: Vec<u64>,
    chosen: &mut Vec<usize>,
) -> bool {
    let n = m.cols();
    let available = |from: usize| (from..n).filter(|&j| j != c);
    if remaining.iter().all(|&w| w == 0) {
        let need = d - chosen.len();
        let fill: Vec<usize> = available(start).take(need).collect();
        if fill.len() == need {
            chosen.extend(fill);
            return true;
        }
        return false;
    }
    if chosen.len() == d {
        return false;
    }
    for j in available(start) {
        if n - j - usize::from(c >= j) < d - chosen.len() {
            break;
        }
        let next: Vec<u64> = remaining
            .iter()
            .zip(m.column(j))
            .map(|(r, x)| r & !x)
            .collect();
        chosen.push(j);
        if cover_search(m, c, d, j + 1, next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// True when `others` is a valid D-disjunct violation for `designated`:
/// distinct in-range columns, not containing `designated`, whose union
/// covers its support.
pub fn check_disjunct_witness(
    m: &BitMatrix,
    d: usize,
    designated: usize,
    others: &[usize],
) -> bool {
    let n = m.cols();
    if others.len() != d || designated >= n || others.iter().any(|&j| j >= n || j == designated) {
        return false;
    }
    let mut sorted = others.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let mut union = vec![0u64; words_for(m.rows())];
    for &j in others {
        bits::or_into(&mut union, m.column(j));
    }
    bits::is_subset(m.column(designated), &union)
}

/// Compares the Boolean sums of all column sets of size `d` (all sizes
/// `0..=d` when `up_to`).
pub fn is_separable(
    m: &BitMatrix,
    d: usize,
    up_to: bool,
    budget: u64,
) -> Result<SeparableOutcome, AnalysisError> {
    let n = m.cols();
    let sizes = if up_to { 0..=d } else { d..=d };
    let needed = sizes
        .clone()
        .map(|s| binomial(n, s))
        .fold(0u64, u64::saturating_add);
    if needed > budget {
        return Err(AnalysisError::BudgetExceeded { needed, budget });
    }
    let stride = words_for(m.rows());
    let mut seen: HashMap<Vec<u64>, Vec<usize>> = HashMap::with_capacity(needed as usize);
    for s in sizes {
        let mut subsets = Subsets::new(n, s);
        while let Some(set) = subsets.next_subset() {
            let mut union = vec![0u64; stride];
            for &j in set {
                bits::or_into(&mut union, m.column(j));
            }
            if let Some(first) = seen.get(&union) {
                return Ok(SeparableOutcome::NotSeparable {
                    first: first.clone(),
                    second: set.to_vec(),
                });
            }
            seen.insert(union, set.to_vec());
        }
    }
    Ok(SeparableOutcome::Separable)
}

/// Minimum column weight and maximum pairwise support intersection.
pub(crate) fn weight_and_overlap(m: &BitMatrix) -> (usize, usize) {
    let n = m.cols();
    let w_min = (0..n).map(|j| m.column_weight(j)).min().unwrap_or(0);
    let a_max = (0..n)
        .into_par_iter()
        .map(|a| {
            (a + 1..n)
                .map(|b| bits::and_popcount(m.column(a), m.column(b)))
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    (w_min, a_max)
}

/// Weight statistics, the closed-form disjunct value, and the largest D
/// confirmed by [`is_disjunct`] for D = 0, 1, 2, ... within `budget` each.
pub fn disjunct_profile(m: &BitMatrix, budget: u64) -> DisjunctProfile {
    let (w_min, a_max) = weight_and_overlap(m);
    let formula = if w_min == 0 {
        FormulaD::NotApplicable
    } else {
        (w_min - 1)
            .checked_div(a_max)
            .map_or(FormulaD::Unbounded, FormulaD::Value)
    };
    let cap = m.cols().saturating_sub(1);
    let mut verified = VerifiedD::Unknown;
    for d in 0..=cap {
        match is_disjunct(m, d, budget) {
            Ok(DisjunctOutcome::Disjunct) => {
                verified = if d == cap {
                    VerifiedD::Capped(d)
                } else {
                    VerifiedD::AtLeast(d)
                };
            }
            Ok(DisjunctOutcome::NotDisjunct { .. }) => {
                verified = match d {
                    0 => VerifiedD::NotDisjunct,
                    _ => VerifiedD::Exact(d - 1),
                };
                break;
            }
            Err(_) => break,
        }
    }
    DisjunctProfile {
        w_min,
        a_max,
        formula,
        verified,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: u64 = super::super::DEFAULT_BUDGET;

    #[test]
    fn identity_is_fully_disjunct() {
        let m = BitMatrix::identity(5);
        assert!(is_disjunct(&m, 4, B).unwrap().holds());
        let p = disjunct_profile(&m, B);
        assert_eq!(p.a_max, 0);
        assert_eq!(p.formula, FormulaD::Unbounded);
        assert_eq!(p.verified, VerifiedD::Capped(4));
    }

    #[test]
    fn witness_is_least() {
        // Column 2 = column 0 | column 1, and column 2 also covers column 0.
        let m = BitMatrix::from_rows(&[[1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(
            is_disjunct(&m, 2, B).unwrap(),
            DisjunctOutcome::NotDisjunct {
                designated: 0,
                others: vec![1, 2]
            }
        );
        assert!(check_disjunct_witness(&m, 2, 2, &[0, 1]));
        assert!(!check_disjunct_witness(&m, 2, 3, &[0, 1]));
        assert!(!check_disjunct_witness(&m, 2, 2, &[0, 0]));
        assert!(!check_disjunct_witness(&m, 2, 2, &[0, 2]));
    }

    #[test]
    fn early_cover_pads_with_smallest_columns() {
        // Column 1 equals column 3, so {3} already covers it.
        let m = BitMatrix::from_rows(&[[1, 1, 0, 1], [1, 0, 1, 0], [0, 0, 1, 0]]);
        assert_eq!(
            is_disjunct(&m, 1, B).unwrap(),
            DisjunctOutcome::NotDisjunct {
                designated: 1,
                others: vec![0]
            }
        );
        // Column 0 is covered by column 1 alone; the pair is padded with 2.
        let m = BitMatrix::from_rows(&[[1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(
            is_disjunct(&m, 2, B).unwrap(),
            DisjunctOutcome::NotDisjunct {
                designated: 0,
                others: vec![1, 2]
            }
        );
    }

    #[test]
    fn zero_column_is_not_zero_disjunct() {
        let m = BitMatrix::from_rows(&[[1, 0], [1, 0]]);
        assert!(!is_disjunct(&m, 0, B).unwrap().holds());
        let p = disjunct_profile(&m, B);
        assert_eq!(p.formula, FormulaD::NotApplicable);
        assert_eq!(p.verified, VerifiedD::NotDisjunct);
    }

    #[test]
    fn equal_columns_not_separable() {
        let m = BitMatrix::from_rows(&[[1, 1, 0], [0, 0, 1]]);
        assert_eq!(
            is_separable(&m, 1, false, B).unwrap(),
            SeparableOutcome::NotSeparable {
                first: vec![0],
                second: vec![1]
            }
        );
    }

    #[test]
    fn up_to_includes_empty_set() {
        let m = BitMatrix::from_rows(&[[1, 0], [0, 0]]).transpose();
        // Column 1 is zero, so its sum equals the empty sum.
        assert!(is_separable(&m, 1, false, B).unwrap().holds());
        assert!(!is_separable(&m, 1, true, B).unwrap().holds());
    }

    #[test]
    fn budget_is_checked_up_front() {
        let m = BitMatrix::identity(30);
        assert!(matches!(
            is_disjunct(&m, 10, 1000),
            Err(AnalysisError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            is_separable(&m, 10, true, 1000),
            Err(AnalysisError::BudgetExceeded { .. })
        ));
        let p = disjunct_profile(&m, 1000);
        assert_eq!(p.verified, VerifiedD::AtLeast(1));
    }
}
