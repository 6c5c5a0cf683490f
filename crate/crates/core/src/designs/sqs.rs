//! Steiner quadruple systems S(3,4,v) by exact-cover backtracking.
//!
//! Each step picks the uncovered triple with the fewest completing points
//! (first in lexicographic order on ties) and tries the completions in
//! increasing order. [`sqs_backtrack`] fixes the first block to
//! `{0,1,2,3}`, which loses no isomorphism class.

use super::{validate_packing, Classification, Design, DesignError};
use crate::combinat::{all_subsets, binomial, lex_rank};

const SUPPORTED: [usize; 3] = [8, 10, 14];

struct Search {
    v: usize,
    triples: Vec<Vec<usize>>,
    covered: Vec<bool>,
    blocks: Vec<[usize; 4]>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn rank3(&self, a: usize, b: usize, c: usize) -> usize {
        let mut t = [a, b, c];
        t.sort_unstable();
        lex_rank(&t, self.v)
    }

    fn completions(&self, t: &[usize]) -> Vec<usize> {
        let (a, b, c) = (t[0], t[1], t[2]);
        (0..self.v)
            .filter(|&d| d != a && d != b && d != c)
            .filter(|&d| {
                !self.covered[self.rank3(a, b, d)]
                    && !self.covered[self.rank3(a, c, d)]
                    && !self.covered[self.rank3(b, c, d)]
            })
            .collect()
    }

    fn set_block(&mut self, block: [usize; 4], value: bool) {
        let [a, b, c, d] = block;
        for (x, y, z) in [(a, b, c), (a, b, d), (a, c, d), (b, c, d)] {
            let r = self.rank3(x, y, z);
            self.covered[r] = value;
        }
    }

    fn solve(&mut self) -> Result<bool, DesignError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(DesignError::BudgetExceeded { nodes: self.budget });
        }
        let mut best: Option<(usize, Vec<usize>)> = None;
        for r in 0..self.triples.len() {
            if self.covered[r] {
                continue;
            }
            let cands = self.completions(&self.triples[r]);
            if cands.is_empty() {
                return Ok(false);
            }
            if best.as_ref().is_none_or(|(_, b)| cands.len() < b.len()) {
                let done = cands.len() == 1;
                best = Some((r, cands));
                if done {
                    break;
                }
            }
        }
        let Some((r, cands)) = best else {
            return Ok(true);
        };
        let t = self.triples[r].clone();
        for d in cands {
            let mut block = [t[0], t[1], t[2], d];
            block.sort_unstable();
            self.set_block(block, true);
            self.blocks.push(block);
            if self.solve()? {
                return Ok(true);
            }
            self.blocks.pop();
            self.set_block(block, false);
        }
        Ok(false)
    }
}

/// Finds an S(3,4,v) for `v` in {8, 10, 14}. Output is deterministic for a
/// fixed `v`. `node_budget` bounds the number of search nodes.
pub fn sqs_backtrack(v: usize, node_budget: u64) -> Result<Design, DesignError> {
    sqs_complete(v, &[vec![0, 1, 2, 3]], node_budget)
}

/// Extends a partial S(3,4,v) to a full one, keeping the given blocks.
pub fn sqs_complete(
    v: usize,
    partial: &[Vec<usize>],
    node_budget: u64,
) -> Result<Design, DesignError> {
    if v < 4 || !matches!(v % 6, 2 | 4) {
        return Err(DesignError::NoSuchDesign {
            t: 3,
            k: 4,
            v,
            reason: "v must be 2 or 4 mod 6".into(),
        });
    }
    if !SUPPORTED.contains(&v) {
        return Err(DesignError::Unsupported { v });
    }
    let triples = all_subsets(v, 3);
    let mut search = Search {
        v,
        covered: vec![false; binomial(v, 3) as usize],
        triples,
        blocks: Vec::new(),
        nodes: 0,
        budget: node_budget,
    };
    let seed = Design::new(v, 4, 3, partial.to_vec())?;
    if let Classification::Invalid {
        witness,
        first,
        second,
    } = validate_packing(&seed)
    {
        return Err(DesignError::ValidationFailed {
            witness,
            first,
            second,
        });
    }
    for b in seed.blocks() {
        let block = [b[0], b[1], b[2], b[3]];
        search.set_block(block, true);
        search.blocks.push(block);
    }
    if !search.solve()? {
        return Err(DesignError::NoSuchDesign {
            t: 3,
            k: 4,
            v,
            reason: "exhaustive search found no completion".into(),
        });
    }
    let d = Design::new(v, 4, 3, search.blocks.iter().map(|b| b.to_vec()).collect())?;
    debug_assert_eq!(validate_packing(&d), Classification::Steiner);
    Ok(d.canonical())
}
