//! The three disjunct matrix families: subset inclusion `M(D,K,N)`, the
//! packing matrices `M_r`, and the unit-vector expansion of a q-ary code.
//!
//! Subsets are always listed in lexicographic order of their sorted tuples.

use thiserror::Error;

use crate::binmat::BitMatrix;
use crate::combinat::{all_subsets, binomial, sorted_subset};
use crate::designs::{validate_packing, Classification, Design};
use crate::galois::{enumerate_codewords, GaloisError, QaryCode};

/// Row and column limit for the q-ary expansion.
pub const KS_LIMIT: u64 = 1 << 16;

/// Column limit for the subset families.
pub const SUBSET_LIMIT: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid specification: {0}")]
    SpecInvalid(String),
    #[error("matrix too large: {what} = {value} exceeds {limit}")]
    TooLarge {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    #[error(transparent)]
    Galois(#[from] GaloisError),
}

/// Parameters of `M(D,K,N)`: rows are D-subsets, columns K-subsets of an
/// N-set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaculaSpec {
    d: usize,
    k: usize,
    n: usize,
}

impl MaculaSpec {
    pub fn new(d: usize, k: usize, n: usize) -> Result<Self, ConstructionError> {
        if d == 0 || d >= k || k >= n {
            return Err(ConstructionError::SpecInvalid(format!(
                "need 1 <= D < K < N, got D={d} K={k} N={n}"
            )));
        }
        for (what, value) in [("rows", binomial(n, d)), ("columns", binomial(n, k))] {
            if value > SUBSET_LIMIT {
                return Err(ConstructionError::TooLarge {
                    what,
                    value,
                    limit: SUBSET_LIMIT,
                });
            }
        }
        Ok(Self { d, k, n })
    }

    /// The common case `K = D + 1`.
    pub fn standard(d: usize, n: usize) -> Result<Self, ConstructionError> {
        Self::new(d, d + 1, n)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Set when `D > N/2`, where the matrix has more rows than columns
    /// for `K = D + 1`.
    pub fn warning(&self) -> Option<String> {
        (2 * self.d > self.n).then(|| {
            format!(
                "D={} > N/2: {} rows for {} columns",
                self.d,
                binomial(self.n, self.d),
                binomial(self.n, self.k)
            )
        })
    }
}

/// `C(N,D) x C(N,K)` matrix with a one where the row subset is contained in
/// the column subset.
pub fn macula_matrix(spec: &MaculaSpec) -> BitMatrix {
    let rows = all_subsets(spec.n, spec.d);
    let cols = all_subsets(spec.n, spec.k);
    BitMatrix::from_fn(rows.len(), cols.len(), |i, j| {
        sorted_subset(&rows[i], &cols[j])
    })
}

/// A packing together with the row-subset size `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuHwangSpec {
    design: Design,
    r: usize,
}

impl FuHwangSpec {
    pub fn new(design: Design, r: usize) -> Result<Self, ConstructionError> {
        let t = design.t();
        if r == 0 || r >= t {
            return Err(ConstructionError::SpecInvalid(format!(
                "need 1 <= r <= t-1, got r={r} t={t}"
            )));
        }
        if let Classification::Invalid { witness, .. } = validate_packing(&design) {
            return Err(ConstructionError::SpecInvalid(format!(
                "design is not a {t}-packing: {witness:?} lies in two blocks"
            )));
        }
        let rows = binomial(design.v(), r);
        if rows > SUBSET_LIMIT {
            return Err(ConstructionError::TooLarge {
                what: "rows",
                value: rows,
                limit: SUBSET_LIMIT,
            });
        }
        Ok(Self { design, r })
    }

    pub fn design(&self) -> &Design {
        &self.design
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

/// `C(v,r) x n` matrix: row `i` is the i-th r-subset, column `j` the j-th
/// chosen block, one iff the subset lies in the block. `columns` picks and
/// orders blocks by index; `None` takes every block in design order.
pub fn fu_hwang_matrix(
    spec: &FuHwangSpec,
    columns: Option<&[usize]>,
) -> Result<BitMatrix, ConstructionError> {
    let blocks = spec.design.blocks();
    let chosen: Vec<usize> = match columns {
        Some(cols) => {
            if let Some(&bad) = cols.iter().find(|&&c| c >= blocks.len()) {
                return Err(ConstructionError::SpecInvalid(format!(
                    "block index {bad} out of range (design has {} blocks)",
                    blocks.len()
                )));
            }
            cols.to_vec()
        }
        None => (0..blocks.len()).collect(),
    };
    let rows = all_subsets(spec.design.v(), spec.r);
    Ok(BitMatrix::from_fn(rows.len(), chosen.len(), |i, j| {
        sorted_subset(&rows[i], &blocks[chosen[j]])
    }))
}

/// The component q-ary code of the expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KautzSingletonSpec {
    code: QaryCode,
}

impl KautzSingletonSpec {
    pub fn new(code: QaryCode) -> Result<Self, ConstructionError> {
        let q = code.field().order() as u64;
        let rows = code.len() as u64 * q;
        if rows > KS_LIMIT {
            return Err(ConstructionError::TooLarge {
                what: "rows",
                value: rows,
                limit: KS_LIMIT,
            });
        }
        let cols = code.codeword_count();
        if cols > KS_LIMIT {
            return Err(ConstructionError::TooLarge {
                what: "columns",
                value: cols,
                limit: KS_LIMIT,
            });
        }
        Ok(Self { code })
    }

    pub fn code(&self) -> &QaryCode {
        &self.code
    }
}

/// `nq x q^k` matrix: codewords in enumeration order become columns, and
/// the symbol at position `i` sets row `i*q + position(symbol)`.
pub fn kautz_singleton_matrix(spec: &KautzSingletonSpec) -> Result<BitMatrix, ConstructionError> {
    let code = &spec.code;
    let field = code.field();
    let q = field.order() as usize;
    let n = code.len();
    let mut ones = Vec::with_capacity(n * code.codeword_count() as usize);
    let mut cols = 0;
    for (j, word) in enumerate_codewords(code)?.enumerate() {
        for (i, &s) in word.symbols.iter().enumerate() {
            ones.push((i * q + field.position(s), j));
        }
        cols += 1;
    }
    Ok(BitMatrix::from_entries(n * q, cols, ones))
}
