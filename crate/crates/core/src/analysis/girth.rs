use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use super::AnalysisError;
use crate::binmat::BitMatrix;
use crate::bits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Cycle(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Girth and short-cycle counts of the Tanner graph. Cycles are counted as
/// subgraphs, each once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GirthReport {
    pub girth: Girth,
    pub four_cycles: u64,
    pub six_cycles: u64,
}

/// A 6-cycle through columns `a < b < c`; `rows` are the checks joining
/// (a,b), (b,c) and (c,a).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SixCycle {
    pub columns: [usize; 3],
    pub rows: [usize; 3],
}

pub fn girth_report(m: &BitMatrix) -> GirthReport {
    GirthReport {
        girth: girth(m),
        four_cycles: four_cycle_count(m),
        six_cycles: six_cycle_count(m),
    }
}

/// Shortest cycle length by breadth-first search from every variable node.
/// Every cycle passes through a variable node, and the search rooted on a
/// shortest cycle finds it exactly.
pub fn girth(m: &BitMatrix) -> Girth {
    let n = m.cols();
    let mut adj: Vec<Vec<usize>> = (0..n).map(|j| m.column_support(j).rows).collect();
    for j in adj.iter_mut() {
        for i in j.iter_mut() {
            *i += n;
        }
    }
    adj.extend((0..m.rows()).map(|i| m.row_support(i)));
    let best = (0..n)
        .into_par_iter()
        .filter_map(|root| shortest_cycle_from(&adj, root))
        .min();
    best.map_or(Girth::Acyclic, Girth::Cycle)
}

fn shortest_cycle_from(adj: &[Vec<usize>], root: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    let mut parent = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::from([root]);
    dist[root] = 0;
    let mut best: Option<usize> = None;
    while let Some(u) = queue.pop_front() {
        if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
            break;
        }
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if parent[u] != w {
                let len = dist[u] + dist[w] + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
            }
        }
    }
    best
}

fn choose2(x: usize) -> u64 {
    (x * x.saturating_sub(1) / 2) as u64
}

/// Sum over column pairs of `C(|A ∩ B|, 2)`.
fn four_cycle_count(m: &BitMatrix) -> u64 {
    let n = m.cols();
    (0..n)
        .into_par_iter()
        .map(|a| {
            (a + 1..n)
                .map(|b| choose2(bits::and_popcount(m.column(a), m.column(b))))
                .sum::<u64>()
        })
        .sum()
}

/// For each column, the later columns sharing at least one row, with the
/// overlap size.
fn overlap_lists(m: &BitMatrix) -> Vec<Vec<(usize, usize)>> {
    let n = m.cols();
    (0..n)
        .into_par_iter()
        .map(|a| {
            (a + 1..n)
                .filter_map(|b| {
                    let x = bits::and_popcount(m.column(a), m.column(b));
                    (x > 0).then_some((b, x))
                })
                .collect()
        })
        .collect()
}

/// For columns with pairwise overlaps `ab`, `bc`, `ca` and triple overlap
/// `t`, the row triples with all rows distinct number
/// `ab·bc·ca − t(ab + bc + ca) + 2t`.
fn six_cycle_count(m: &BitMatrix) -> u64 {
    let lists = overlap_lists(m);
    lists
        .par_iter()
        .enumerate()
        .map(|(a, nb)| {
            let mut total = 0u64;
            for (x, &(b, ab)) in nb.iter().enumerate() {
                let ab_words: Vec<u64> = m
                    .column(a)
                    .iter()
                    .zip(m.column(b))
                    .map(|(p, q)| p & q)
                    .collect();
                for &(c, ca) in &nb[x + 1..] {
                    let bc = bits::and_popcount(m.column(b), m.column(c));
                    if bc == 0 {
                        continue;
                    }
                    let t = bits::and_popcount(&ab_words, m.column(c)) as u64;
                    let (ab, bc, ca) = (ab as u64, bc as u64, ca as u64);
                    total += ab * bc * ca + 2 * t - t * (ab + bc + ca);
                }
            }
            total
        })
        .sum()
}

/// Every 6-cycle, ordered by columns then rows. Fails when the count
/// exceeds `cap`.
pub fn six_cycles(m: &BitMatrix, cap: u64) -> Result<Vec<SixCycle>, AnalysisError> {
    let needed = six_cycle_count(m);
    if needed > cap {
        return Err(AnalysisError::BudgetExceeded {
            needed,
            budget: cap,
        });
    }
    let lists = overlap_lists(m);
    let common = |x: usize, y: usize| -> Vec<usize> {
        let w: Vec<u64> = m
            .column(x)
            .iter()
            .zip(m.column(y))
            .map(|(p, q)| p & q)
            .collect();
        bits::ones(&w).collect()
    };
    let mut out = Vec::with_capacity(needed as usize);
    for (a, nb) in lists.iter().enumerate() {
        for (x, &(b, _)) in nb.iter().enumerate() {
            for &(c, _) in &nb[x + 1..] {
                let bc = common(b, c);
                if bc.is_empty() {
                    continue;
                }
                let ab = common(a, b);
                let ca = common(c, a);
                for &r1 in &ab {
                    for &r2 in &bc {
                        for &r3 in &ca {
                            if r1 != r2 && r2 != r3 && r1 != r3 {
                                out.push(SixCycle {
                                    columns: [a, b, c],
                                    rows: [r1, r2, r3],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    debug_assert_eq!(out.len() as u64, needed);
    Ok(out)
}
