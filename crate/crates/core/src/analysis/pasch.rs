//! Generalized Pasch configurations: `C(t+1,2) + 1` blocks of a
//! (t, t+1)-packing, pairwise meeting in exactly `t-1` points, with every
//! pairwise intersection distinct. The last condition makes every
//! (t-1)-subset covered by the blocks lie in exactly two of them, so the
//! blocks form a codeword of `M_{t-1}`.

use std::collections::HashSet;

use super::AnalysisError;
use crate::combinat::{binomial, lex_rank};
use crate::designs::Design;

/// Number of blocks in a generalized Pasch configuration for strength `t`.
pub fn pasch_size(t: usize) -> usize {
    binomial(t + 1, 2) as usize + 1
}

/// The lexicographically first configuration (as sorted block indices).
pub fn find_generalized_pasch(
    d: &Design,
    budget: u64,
) -> Result<Option<Vec<usize>>, AnalysisError> {
    let mut search = PaschSearch::new(d, budget, true)?;
    search.run()?;
    Ok(search.found.into_iter().next())
}

/// Every configuration, in lexicographic order of sorted block indices.
pub fn enumerate_generalized_pasch(
    d: &Design,
    budget: u64,
) -> Result<Vec<Vec<usize>>, AnalysisError> {
    let mut search = PaschSearch::new(d, budget, false)?;
    search.run()?;
    Ok(search.found)
}

struct PaschSearch {
    size: usize,
    /// For each block, the later blocks meeting it in `t-1` points, with
    /// the rank of the intersection.
    neighbours: Vec<Vec<(usize, usize)>>,
    nodes: u64,
    budget: u64,
    first_only: bool,
    found: Vec<Vec<usize>>,
}

impl PaschSearch {
    fn new(d: &Design, budget: u64, first_only: bool) -> Result<Self, AnalysisError> {
        let t = d.t();
        if d.k() != t + 1 || t < 2 {
            return Err(AnalysisError::NotApplicable(format!(
                "got t={t} k={}, need k=t+1 and t>=2",
                d.k()
            )));
        }
        let blocks = d.blocks();
        let neighbours = (0..blocks.len())
            .map(|i| {
                (i + 1..blocks.len())
                    .filter_map(|j| {
                        let common: Vec<usize> = blocks[i]
                            .iter()
                            .copied()
                            .filter(|p| blocks[j].binary_search(p).is_ok())
                            .collect();
                        (common.len() == t - 1).then(|| (j, lex_rank(&common, d.v())))
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            size: pasch_size(t),
            neighbours,
            nodes: 0,
            budget,
            first_only,
            found: Vec::new(),
        })
    }

    fn run(&mut self) -> Result<(), AnalysisError> {
        for first in 0..self.neighbours.len() {
            let cands: Vec<usize> = self.neighbours[first].iter().map(|&(j, _)| j).collect();
            let mut used = HashSet::new();
            let mut chosen = vec![first];
            if self.extend(&mut chosen, &cands, &mut used)? && self.first_only {
                return Ok(());
            }
        }
        Ok(())
    }

    /// `cands` are later blocks meeting every chosen block in `t-1` points.
    /// `used` holds the ranks of the pairwise intersections so far.
    fn extend(
        &mut self,
        chosen: &mut Vec<usize>,
        cands: &[usize],
        used: &mut HashSet<usize>,
    ) -> Result<bool, AnalysisError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(AnalysisError::BudgetExceeded {
                needed: self.nodes,
                budget: self.budget,
            });
        }
        if chosen.len() == self.size {
            self.found.push(chosen.clone());
            return Ok(true);
        }
        if chosen.len() + cands.len() < self.size {
            return Ok(false);
        }
        let mut any = false;
        for (x, &j) in cands.iter().enumerate() {
            // Intersections of j with every chosen block, all new and distinct.
            let ranks: Option<Vec<usize>> =
                chosen.iter().map(|&c| self.rank_between(c, j)).collect();
            let Some(ranks) = ranks else { continue };
            let distinct: HashSet<usize> = ranks.iter().copied().collect();
            if distinct.len() != ranks.len() || ranks.iter().any(|r| used.contains(r)) {
                continue;
            }
            let next: Vec<usize> = cands[x + 1..]
                .iter()
                .copied()
                .filter(|&k| self.rank_between(j, k).is_some())
                .collect();
            used.extend(ranks.iter().copied());
            chosen.push(j);
            let hit = self.extend(chosen, &next, used)?;
            chosen.pop();
            for r in &ranks {
                used.remove(r);
            }
            if hit {
                any = true;
                if self.first_only {
                    return Ok(true);
                }
            }
        }
        Ok(any)
    }

    fn rank_between(&self, a: usize, b: usize) -> Option<usize> {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.neighbours[lo]
            .binary_search_by_key(&hi, |&(j, _)| j)
            .ok()
            .map(|i| self.neighbours[lo][i].1)
    }
}
