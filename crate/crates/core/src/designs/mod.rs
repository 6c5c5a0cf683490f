//! Block designs: t-packings and Steiner systems S(t, k, v).
//!
//! Points are `0..v`. Blocks are stored sorted; the block list keeps the
//! order it was given in, since it becomes the column order of the packing
//! matrix.

mod sqs;
mod sts;

pub use sqs::{sqs_backtrack, sqs_complete};
pub use sts::steiner_triple_system;

use std::fmt::Write as _;

use thiserror::Error;

use crate::combinat::{binomial, lex_rank, Subsets};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DesignError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("block {index} is malformed: {reason}")]
    BadBlock { index: usize, reason: String },
    #[error("design parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("not a packing: {witness:?} lies in blocks {first} and {second}")]
    ValidationFailed {
        witness: Vec<usize>,
        first: usize,
        second: usize,
    },
    #[error("no S({t},{k},{v}) exists: {reason}")]
    NoSuchDesign {
        t: usize,
        k: usize,
        v: usize,
        reason: String,
    },
    #[error("search for S(3,4,{v}) is not supported")]
    Unsupported { v: usize },
    #[error("search gave up after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    v: usize,
    k: usize,
    t: usize,
    blocks: Vec<Vec<usize>>,
}

/// Outcome of the exhaustive t-subset scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// Every t-subset lies in exactly one block.
    Steiner,
    /// Every t-subset lies in at most one block, some in none.
    Packing,
    /// The lexicographically first t-subset lying in two blocks.
    Invalid {
        witness: Vec<usize>,
        first: usize,
        second: usize,
    },
}

impl Design {
    /// Checks block shape only: `k` distinct points in `0..v` per block.
    /// Use [`validate_packing`] for the packing property.
    pub fn new(v: usize, k: usize, t: usize, blocks: Vec<Vec<usize>>) -> Result<Self, DesignError> {
        if t == 0 || t > k || k > v {
            return Err(DesignError::InvalidParameters(format!(
                "need 1 <= t <= k <= v, got t={t} k={k} v={v}"
            )));
        }
        let mut sorted = Vec::with_capacity(blocks.len());
        for (index, mut b) in blocks.into_iter().enumerate() {
            b.sort_unstable();
            if b.len() != k {
                return Err(DesignError::BadBlock {
                    index,
                    reason: format!("has {} points, expected {k}", b.len()),
                });
            }
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(DesignError::BadBlock {
                    index,
                    reason: "repeated point".into(),
                });
            }
            if let Some(&p) = b.iter().find(|&&p| p >= v) {
                return Err(DesignError::BadBlock {
                    index,
                    reason: format!("point {p} outside 0..{v}"),
                });
            }
            sorted.push(b);
        }
        Ok(Self {
            v,
            k,
            t,
            blocks: sorted,
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_steiner(&self) -> bool {
        validate_packing(self) == Classification::Steiner
    }

    /// Number of blocks containing the sorted point set `s`.
    pub fn blocks_containing(&self, s: &[usize]) -> usize {
        self.blocks
            .iter()
            .filter(|b| crate::combinat::sorted_subset(s, b))
            .count()
    }

    /// Expected block count `C(v,t)/C(k,t)` of a Steiner system with these
    /// parameters.
    pub fn steiner_block_count(&self) -> u64 {
        binomial(self.v, self.t) / binomial(self.k, self.t)
    }

    /// Same blocks, sorted lexicographically. Designs are compared as block
    /// sets, so this is the canonical form.
    pub fn canonical(&self) -> Design {
        let mut blocks = self.blocks.clone();
        blocks.sort();
        Design { blocks, ..*self }
    }
}

/// Classifies a block system by counting, for every t-subset, the blocks
/// that contain it.
pub fn validate_packing(d: &Design) -> Classification {
    let slots = binomial(d.v, d.t) as usize;
    let mut owner: Vec<Option<usize>> = vec![None; slots];
    let mut first_clash: Option<(usize, usize, usize)> = None;
    for (bi, block) in d.blocks.iter().enumerate() {
        let mut sub = Subsets::new(d.k, d.t);
        let mut points = vec![0; d.t];
        while let Some(idx) = sub.next_subset() {
            for (p, &i) in points.iter_mut().zip(idx) {
                *p = block[i];
            }
            let r = lex_rank(&points, d.v);
            match owner[r] {
                None => owner[r] = Some(bi),
                Some(prev) => {
                    if first_clash.is_none_or(|(fr, _, _)| r < fr) {
                        first_clash = Some((r, prev, bi));
                    }
                }
            }
        }
    }
    if let Some((r, first, second)) = first_clash {
        let mut s = Subsets::new(d.v, d.t);
        let witness = std::iter::from_fn(|| s.next_subset().map(|x| x.to_vec()))
            .nth(r)
            .expect("rank within range");
        return Classification::Invalid {
            witness,
            first,
            second,
        };
    }
    if owner.iter().all(Option::is_some) {
        Classification::Steiner
    } else {
        Classification::Packing
    }
}

/// Text form: `v k t` on the first line, then one block per line as
/// space-separated 0-based points. Blocks are written in lexicographic
/// order.
pub fn design_write(d: &Design) -> String {
    let mut out = String::new();
    writeln!(out, "{} {} {}", d.v, d.k, d.t).unwrap();
    for b in d.canonical().blocks {
        let line: Vec<String> = b.iter().map(|p| p.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

/// Parses the text form and checks the packing property. Blank lines and
/// lines starting with `#` are ignored.
pub fn design_read(text: &str) -> Result<Design, DesignError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut blocks = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums = line
            .split_ascii_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| DesignError::Parse {
                    line: i + 1,
                    message: format!("invalid integer {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if header.is_none() {
            if nums.len() != 3 {
                return Err(DesignError::Parse {
                    line: i + 1,
                    message: "header must be `v k t`".into(),
                });
            }
            header = Some((nums[0], nums[1], nums[2]));
        } else {
            blocks.push((i + 1, nums));
        }
    }
    let Some((v, k, t)) = header else {
        return Err(DesignError::Parse {
            line: 1,
            message: "missing header".into(),
        });
    };
    let lines: Vec<usize> = blocks.iter().map(|(l, _)| *l).collect();
    let d = Design::new(v, k, t, blocks.into_iter().map(|(_, b)| b).collect()).map_err(
        |e| match e {
            DesignError::BadBlock { index, reason } => DesignError::Parse {
                line: lines[index],
                message: reason,
            },
            other => other,
        },
    )?;
    match validate_packing(&d) {
        Classification::Invalid {
            witness,
            first,
            second,
        } => Err(DesignError::ValidationFailed {
            witness,
            first,
            second,
        }),
        _ => Ok(d),
    }
}
