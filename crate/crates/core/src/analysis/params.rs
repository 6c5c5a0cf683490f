use std::fmt;

use num_rational::Ratio;

use super::{min_distance, stopping_distance, AnalysisError, StoppingDistance};
use crate::binmat::{rank_gf2, BitMatrix};

/// Outcome of a distance computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    NotComputed,
    Exact(usize),
    /// Zero code (for d_min) or no nonempty stopping set (for s_min).
    None,
    /// Budget ran out; the value is at least this.
    AtLeast(usize),
    /// Budget ran out before any bound was established.
    Unknown,
}

impl Distance {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            Distance::Exact(d) => Some(d),
            _ => None,
        }
    }

    fn from_result(r: Result<Option<usize>, AnalysisError>) -> Self {
        match r {
            Ok(Some(d)) => Distance::Exact(d),
            Ok(None) => Distance::None,
            Err(e) => e.lower_bound().map_or(Distance::Unknown, Distance::AtLeast),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::NotComputed => f.write_str("not_computed"),
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::None => f.write_str("none"),
            Distance::AtLeast(d) => write!(f, ">={d}"),
            Distance::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParameters {
    pub n: usize,
    pub rank: usize,
    pub dimension: usize,
    pub rate: Ratio<i64>,
    pub rate_lower_bound: Option<Ratio<i64>>,
    pub d_min: Distance,
    pub s_min: Distance,
}

/// Length, rank, dimension and exact rate of `C(m)`, plus the distances
/// when requested. Distance searches share `budget` each.
pub fn code_parameters(
    m: &BitMatrix,
    rate_lower_bound: Option<Ratio<i64>>,
    want_d_min: bool,
    want_s_min: bool,
    budget: u64,
) -> CodeParameters {
    let n = m.cols();
    let rank = rank_gf2(m);
    let dimension = n - rank;
    let rate = if n == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(dimension as i64, n as i64)
    };
    let d_min = if want_d_min {
        Distance::from_result(min_distance(m, budget))
    } else {
        Distance::NotComputed
    };
    let s_min = if want_s_min {
        Distance::from_result(stopping_distance(m, budget, None).map(|s| match s {
            StoppingDistance::Found { size, .. } => Some(size),
            StoppingDistance::NoneWithinCap => None,
        }))
    } else {
        Distance::NotComputed
    };
    CodeParameters {
        n,
        rank,
        dimension,
        rate,
        rate_lower_bound,
        d_min,
        s_min,
    }
}

/// `1 - (D+1)/(N-D)` for `M(D, D+1, N)`.
pub fn macula_rate_bound(d: usize, n: usize) -> Ratio<i64> {
    Ratio::from_integer(1) - Ratio::new(d as i64 + 1, n as i64 - d as i64)
}

/// `1 - t(t+1)/(v-t+1)` for `M_{t-1}` of an S(t, t+1, v).
pub fn fu_hwang_rate_bound(t: usize, v: usize) -> Ratio<i64> {
    let t = t as i64;
    Ratio::from_integer(1) - Ratio::new(t * (t + 1), v as i64 - t + 1)
}

/// `1 - n/q^(k-1)` for the expansion of an `[n, k]_q` code.
pub fn ks_rate_bound(n: usize, q: u64, k: usize) -> Ratio<i64> {
    Ratio::from_integer(1) - Ratio::new(n as i64, q.pow(k as u32 - 1) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert_eq!(macula_rate_bound(2, 5), Ratio::new(0, 1));
        assert_eq!(fu_hwang_rate_bound(3, 10), Ratio::new(-1, 2));
        assert_eq!(ks_rate_bound(3, 4, 2), Ratio::new(1, 4));
    }

    #[test]
    fn hamming_parameters() {
        let h = BitMatrix::from_rows(&[
            [0, 0, 0, 1, 1, 1, 1],
            [0, 1, 1, 0, 0, 1, 1],
            [1, 0, 1, 0, 1, 0, 1],
        ]);
        let p = code_parameters(&h, None, true, true, 1 << 20);
        assert_eq!((p.n, p.rank, p.dimension), (7, 3, 4));
        assert_eq!(p.rate, Ratio::new(4, 7));
        assert_eq!(p.d_min, Distance::Exact(3));
        assert_eq!(p.s_min, Distance::Exact(3));
        let p = code_parameters(&h, None, false, false, 1);
        assert_eq!(p.d_min, Distance::NotComputed);
    }

    #[test]
    fn identity_parameters() {
        let p = code_parameters(&BitMatrix::identity(3), None, true, true, 100);
        assert_eq!(p.d_min, Distance::None);
        assert_eq!(p.s_min, Distance::None);
    }
}
