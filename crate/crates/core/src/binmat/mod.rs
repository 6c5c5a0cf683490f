//! Dense GF(2) matrices with both row-major and column-major packing.
//!
//! Elimination scans rows; disjunctness, separability and cycle counting
//! scan columns. Both packings are built once and never mutated afterwards.

mod alist;

pub use alist::{alist_read, alist_write};

use std::fmt;

use thiserror::Error;

use crate::bits::{self, words_for, BitVec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BinMatError {
    #[error("code dimension {dimension} gives 2^{dimension} codewords, above the cap of {cap}")]
    CapExceeded { dimension: usize, cap: u64 },
    #[error("alist parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("alist dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Binary matrix stored as packed rows and packed columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    row_stride: usize,
    col_stride: usize,
    row_words: Vec<u64>,
    col_words: Vec<u64>,
}

/// Rows holding a one in a given column, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnSupport {
    pub column: usize,
    pub rows: Vec<usize>,
}

impl ColumnSupport {
    pub fn weight(&self) -> usize {
        self.rows.len()
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_entries(rows, cols, std::iter::empty())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_entries(n, n, (0..n).map(|i| (i, i)))
    }

    /// Builds a matrix from the coordinates of its ones. Repeated
    /// coordinates are idempotent.
    ///
    /// # Panics
    /// Panics if a coordinate is out of range.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        ones: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let row_stride = words_for(cols);
        let col_stride = words_for(rows);
        let mut row_words = vec![0u64; rows * row_stride];
        let mut col_words = vec![0u64; cols * col_stride];
        for (i, j) in ones {
            assert!(
                i < rows && j < cols,
                "entry ({i},{j}) outside {rows}x{cols}"
            );
            bits::set_bit(&mut row_words[i * row_stride..(i + 1) * row_stride], j);
            bits::set_bit(&mut col_words[j * col_stride..(j + 1) * col_stride], i);
        }
        Self {
            rows,
            cols,
            row_stride,
            col_stride,
            row_words,
            col_words,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut ones = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    ones.push((i, j));
                }
            }
        }
        Self::from_entries(rows, cols, ones)
    }

    /// Builds a matrix from 0/1 rows.
    ///
    /// # Panics
    /// Panics on ragged input or entries other than 0 and 1.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut ones = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged row {i}");
            for (j, &x) in r.iter().enumerate() {
                match x {
                    0 => {}
                    1 => ones.push((i, j)),
                    _ => panic!("entry ({i},{j}) is {x}, expected 0 or 1"),
                }
            }
        }
        Self::from_entries(rows.len(), cols, ones)
    }

    /// Builds a matrix whose column `j` has ones at `supports[j]`.
    pub fn from_column_supports(rows: usize, supports: &[Vec<usize>]) -> Self {
        Self::from_entries(
            rows,
            supports.len(),
            supports
                .iter()
                .enumerate()
                .flat_map(|(j, s)| s.iter().map(move |&i| (i, j))),
        )
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry read through the row packing.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        bits::get_bit(self.row(i), j)
    }

    /// Entry read through the column packing.
    #[inline]
    pub fn get_by_column(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        bits::get_bit(self.column(j), i)
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.row_words[i * self.row_stride..(i + 1) * self.row_stride]
    }

    #[inline]
    pub fn column(&self, j: usize) -> &[u64] {
        &self.col_words[j * self.col_stride..(j + 1) * self.col_stride]
    }

    pub fn row_vec(&self, i: usize) -> BitVec {
        BitVec::from_words(self.row(i).to_vec(), self.cols)
    }

    pub fn column_vec(&self, j: usize) -> BitVec {
        BitVec::from_words(self.column(j).to_vec(), self.rows)
    }

    pub fn row_weight(&self, i: usize) -> usize {
        bits::popcount(self.row(i))
    }

    pub fn column_weight(&self, j: usize) -> usize {
        bits::popcount(self.column(j))
    }

    pub fn column_weights(&self) -> Vec<usize> {
        (0..self.cols).map(|j| self.column_weight(j)).collect()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        (0..self.rows).map(|i| self.row_weight(i)).collect()
    }

    pub fn row_support(&self, i: usize) -> Vec<usize> {
        bits::ones(self.row(i)).collect()
    }

    pub fn column_support(&self, j: usize) -> ColumnSupport {
        ColumnSupport {
            column: j,
            rows: bits::ones(self.column(j)).collect(),
        }
    }

    pub fn ones_count(&self) -> usize {
        bits::popcount(&self.row_words)
    }

    pub fn transpose(&self) -> BitMatrix {
        Self {
            rows: self.cols,
            cols: self.rows,
            row_stride: self.col_stride,
            col_stride: self.row_stride,
            row_words: self.col_words.clone(),
            col_words: self.row_words.clone(),
        }
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> BitMatrix {
        let supports: Vec<Vec<usize>> = columns
            .iter()
            .map(|&j| self.column_support(j).rows)
            .collect();
        Self::from_column_supports(self.rows, &supports)
    }

    /// `H · x` over GF(2).
    ///
    /// # Panics
    /// Panics if `x.len() != cols`.
    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.cols, "vector length must equal column count");
        let mut out = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            if bits::and_popcount(self.row(i), x.words()) & 1 == 1 {
                out.set(i, true);
            }
        }
        out
    }

    /// Checks that both packings describe the same matrix and that no
    /// padding bit is set.
    pub fn packings_consistent(&self) -> bool {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != self.get_by_column(i, j) {
                    return false;
                }
            }
        }
        let tail_clean = |words: &[u64], stride: usize, width: usize| {
            stride == 0
                || words.chunks(stride).all(|w| {
                    let mut copy = w.to_vec();
                    bits::mask_tail(&mut copy, width);
                    copy == w
                })
        };
        tail_clean(&self.row_words, self.row_stride, self.cols)
            && tail_clean(&self.col_words, self.col_stride, self.rows)
    }

    /// Reduced row echelon form of the rows; returns the nonzero rows and
    /// their pivot columns.
    fn row_reduce(&self) -> (Vec<Vec<u64>>, Vec<usize>) {
        let mut work: Vec<Vec<u64>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..work.len()).find(|&r| bits::get_bit(&work[r], col)) else {
                continue;
            };
            work.swap(rank, p);
            let pivot = work[rank].clone();
            for (r, row) in work.iter_mut().enumerate() {
                if r != rank && bits::get_bit(row, col) {
                    bits::xor_into(row, &pivot);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == work.len() {
                break;
            }
        }
        work.truncate(rank);
        (work, pivots)
    }

    /// A basis of the right null space `{x : H x = 0}`.
    pub fn null_space_basis(&self) -> Vec<BitVec> {
        let (reduced, pivots) = self.row_reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = BitVec::zeros(self.cols);
                x.set(f, true);
                for (row, &p) in reduced.iter().zip(&pivots) {
                    if bits::get_bit(row, f) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }
}

/// GF(2) rank by word-parallel elimination on a private copy.
pub fn rank_gf2(m: &BitMatrix) -> usize {
    m.row_reduce().1.len()
}

/// Every codeword of `C(m) = {x : m x = 0}`, starting with the zero word.
///
/// Fails with [`BinMatError::CapExceeded`] when `2^dimension > cap`.
pub fn null_space_enumerate(m: &BitMatrix, cap: u64) -> Result<NullSpaceIter, BinMatError> {
    let basis = m.null_space_basis();
    let dimension = basis.len();
    if dimension >= 64 || (1u64 << dimension) > cap {
        return Err(BinMatError::CapExceeded { dimension, cap });
    }
    Ok(NullSpaceIter {
        current: BitVec::zeros(m.cols()),
        total: 1u64 << dimension,
        next: 0,
        basis,
    })
}

/// Gray-code walk over the span of a null-space basis: each step adds one
/// basis vector, so consecutive words differ by a single XOR.
#[derive(Debug, Clone)]
pub struct NullSpaceIter {
    basis: Vec<BitVec>,
    current: BitVec,
    total: u64,
    next: u64,
}

impl NullSpaceIter {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for NullSpaceIter {
    type Item = BitVec;

    fn next(&mut self) -> Option<BitVec> {
        if self.next >= self.total {
            return None;
        }
        if self.next > 0 {
            let flip = self.next.trailing_zeros() as usize;
            self.current.xor_assign(&self.basis[flip]);
        }
        self.next += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}
