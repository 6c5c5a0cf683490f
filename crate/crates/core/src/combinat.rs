//! Subset enumeration and ranking in lexicographic order.

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Rank of a sorted `k`-subset of `0..n` among all `k`-subsets in
/// lexicographic order of their sorted tuples.
pub fn lex_rank(subset: &[usize], n: usize) -> usize {
    let k = subset.len();
    let mut rank = 0u64;
    let mut next = 0;
    for (i, &s) in subset.iter().enumerate() {
        for x in next..s {
            rank += binomial(n - 1 - x, k - 1 - i);
        }
        next = s + 1;
    }
    rank as usize
}

/// Lexicographic walk over the `k`-subsets of `0..n` without allocating
/// per step.
///
/// ```
/// use disjunct_codes::combinat::Subsets;
/// let mut s = Subsets::new(4, 2);
/// let mut seen = Vec::new();
/// while let Some(c) = s.next_subset() {
///     seen.push(c.to_vec());
/// }
/// assert_eq!(seen.len(), 6);
/// assert_eq!(seen[0], vec![0, 1]);
/// assert_eq!(seen[5], vec![2, 3]);
/// ```
#[derive(Debug, Clone)]
pub struct Subsets {
    n: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Subsets {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            idx: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    pub fn next_subset(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let k = self.idx.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        self.done = true;
        None
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn all_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, k).min(1 << 24) as usize);
    let mut s = Subsets::new(n, k);
    while let Some(c) = s.next_subset() {
        out.push(c.to_vec());
    }
    out
}

/// True when sorted slice `a` is contained in sorted slice `b`.
pub fn sorted_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Size of the intersection of two sorted slices.
pub fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(14, 3), 364);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(200, 100), u64::MAX);
    }

    #[test]
    fn rank_matches_enumeration_order() {
        for (n, k) in [(5, 2), (7, 3), (8, 4), (6, 0), (6, 6)] {
            for (i, s) in all_subsets(n, k).iter().enumerate() {
                assert_eq!(lex_rank(s, n), i, "n={n} k={k} s={s:?}");
            }
            assert_eq!(all_subsets(n, k).len() as u64, binomial(n, k));
        }
    }

    #[test]
    fn empty_and_oversized() {
        assert_eq!(all_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(all_subsets(2, 3).is_empty());
    }

    #[test]
    fn sorted_set_ops() {
        assert!(sorted_subset(&[1, 3], &[0, 1, 2, 3]));
        assert!(!sorted_subset(&[1, 4], &[0, 1, 2, 3]));
        assert_eq!(sorted_intersection_len(&[0, 1, 2, 3], &[1, 3, 5]), 2);
    }
}
