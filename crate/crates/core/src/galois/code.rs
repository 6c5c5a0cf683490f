use super::{FieldTable, GaloisError};

/// Default cap on codeword enumeration.
pub const ENUMERATION_CAP: u64 = 1 << 20;

/// A linear code over GF(q) given by a full-rank generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaryCode {
    field: FieldTable,
    generator: Vec<Vec<u32>>,
    n: usize,
}

/// A codeword together with its rank in the canonical message order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaryCodeword {
    pub symbols: Vec<u32>,
    pub message_index: u64,
}

impl QaryCode {
    /// Validates that `generator` is a `k x n` full-rank matrix of field
    /// elements (given as encodings).
    pub fn new(field: FieldTable, generator: Vec<Vec<u32>>) -> Result<Self, GaloisError> {
        let n = generator.first().map_or(0, |r| r.len());
        if generator.is_empty() || n == 0 {
            return Err(GaloisError::InvalidDimension {
                n,
                k: generator.len(),
            });
        }
        if generator.iter().any(|r| r.len() != n) {
            return Err(GaloisError::RaggedGenerator);
        }
        if let Some(&bad) = generator.iter().flatten().find(|&&s| !field.contains(s)) {
            return Err(GaloisError::InvalidSymbol {
                symbol: bad,
                q: field.order(),
            });
        }
        if field.rank(&generator) != generator.len() {
            return Err(GaloisError::DependentRows);
        }
        Ok(Self {
            field,
            generator,
            n,
        })
    }

    /// Like [`QaryCode::new`] but with entries given as positions in the
    /// field's element order.
    pub fn from_element_indices(
        field: FieldTable,
        rows: &[Vec<usize>],
    ) -> Result<Self, GaloisError> {
        let q = field.order();
        let generator = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&i| {
                        if i < q as usize {
                            Ok(field.element(i))
                        } else {
                            Err(GaloisError::InvalidSymbol {
                                symbol: i as u32,
                                q,
                            })
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(field, generator)
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn generator(&self) -> &[Vec<u32>] {
        &self.generator
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    /// `q^k`, saturating.
    pub fn codeword_count(&self) -> u64 {
        (self.field.order() as u64)
            .checked_pow(self.dimension() as u32)
            .unwrap_or(u64::MAX)
    }

    /// `message * generator`.
    pub fn encode(&self, message: &[u32]) -> Vec<u32> {
        assert_eq!(message.len(), self.dimension());
        let f = &self.field;
        let mut out = vec![0u32; self.n];
        for (&c, row) in message.iter().zip(&self.generator) {
            if c == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(c, g));
            }
        }
        out
    }

    /// Message for a given rank in the canonical order: base-q digits with
    /// the first message coordinate varying fastest, each digit read through
    /// the element order.
    pub fn message(&self, index: u64) -> Vec<u32> {
        let q = self.field.order() as u64;
        let mut rest = index;
        (0..self.dimension())
            .map(|_| {
                let d = rest % q;
                rest /= q;
                self.field.element(d as usize)
            })
            .collect()
    }

    /// Minimum Hamming distance by exhaustive weight scan.
    pub fn minimum_distance(&self) -> Result<usize, GaloisError> {
        let d = enumerate_codewords(self)?
            .filter(|c| c.message_index != 0)
            .map(|c| c.symbols.iter().filter(|&&s| s != 0).count())
            .min()
            .unwrap_or(self.n);
        Ok(d)
    }
}

/// Reed-Solomon code: row `i` of the generator holds the `i`-th powers of
/// the evaluation points. Without explicit points the first `n` elements of
/// the element order are used (`0, 1, g, g^2, ...`).
pub fn reed_solomon(
    field: &FieldTable,
    n: usize,
    k: usize,
    eval_points: Option<&[u32]>,
) -> Result<QaryCode, GaloisError> {
    let q = field.order();
    if n > q as usize {
        return Err(GaloisError::TooManyPoints { n, q });
    }
    if k == 0 || k > n {
        return Err(GaloisError::InvalidDimension { n, k });
    }
    let points: Vec<u32> = match eval_points {
        Some(pts) => {
            if pts.len() != n {
                return Err(GaloisError::TooManyPoints { n: pts.len(), q });
            }
            if let Some(&bad) = pts.iter().find(|&&s| !field.contains(s)) {
                return Err(GaloisError::InvalidSymbol { symbol: bad, q });
            }
            let mut sorted = pts.to_vec();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(GaloisError::DuplicatePoints);
            }
            pts.to_vec()
        }
        None => field.element_order()[..n].to_vec(),
    };
    let generator = (0..k)
        .map(|i| points.iter().map(|&x| field.pow(x, i as u32)).collect())
        .collect();
    QaryCode::new(field.clone(), generator)
}

/// All `q^k` codewords in canonical message order.
pub fn enumerate_codewords(code: &QaryCode) -> Result<CodewordIter<'_>, GaloisError> {
    let count = code.codeword_count();
    if count > ENUMERATION_CAP {
        return Err(GaloisError::CapExceeded {
            count,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(CodewordIter {
        code,
        next: 0,
        total: count,
    })
}

#[derive(Debug, Clone)]
pub struct CodewordIter<'a> {
    code: &'a QaryCode,
    next: u64,
    total: u64,
}

impl Iterator for CodewordIter<'_> {
    type Item = QaryCodeword;

    fn next(&mut self) -> Option<QaryCodeword> {
        if self.next >= self.total {
            return None;
        }
        let index = self.next;
        self.next += 1;
        Some(QaryCodeword {
            symbols: self.code.encode(&self.code.message(index)),
            message_index: index,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> FieldTable {
        FieldTable::new(2, 2).unwrap()
    }

    #[test]
    fn rs_3_2_over_gf4_generator() {
        let f = gf4();
        let code = reed_solomon(&f, 3, 2, None).unwrap();
        let alpha = f.primitive();
        assert_eq!(code.generator(), &[vec![1, 1, 1], vec![0, 1, alpha]]);
    }

    #[test]
    fn polynomial_order_matches_worked_example() {
        // Order 0, 1, a, a^2, x, x+1, ...: the constant coefficient (first
        // message coordinate) varies fastest.
        let f = gf4();
        let code = reed_solomon(&f, 3, 2, None).unwrap();
        let words: Vec<QaryCodeword> = enumerate_codewords(&code).unwrap().collect();
        assert_eq!(words.len(), 16);
        let alpha = f.primitive();
        let a2 = f.mul(alpha, alpha);
        assert_eq!(words[0].symbols, vec![0, 0, 0]);
        assert_eq!(words[1].symbols, vec![1, 1, 1]);
        assert_eq!(words[2].symbols, vec![alpha, alpha, alpha]);
        assert_eq!(words[3].symbols, vec![a2, a2, a2]);
        assert_eq!(words[4].symbols, vec![0, 1, alpha]);
        assert_eq!(words[5].symbols, vec![1, 0, f.add(alpha, 1)]);
        // Last: a^2 x + a^2.
        let last = &words[15].symbols;
        assert_eq!(last[0], a2);
        assert_eq!(last[1], f.add(a2, a2));
        assert_eq!(last[2], f.add(f.mul(a2, alpha), a2));
    }

    #[test]
    fn constants_code_has_full_distance() {
        for (p, m) in [(2, 2), (3, 1), (5, 1)] {
            let f = FieldTable::new(p, m).unwrap();
            let q = f.order() as usize;
            let code = reed_solomon(&f, q, 1, None).unwrap();
            assert_eq!(code.minimum_distance().unwrap(), q);
        }
    }

    #[test]
    fn gf5_4_2_is_mds() {
        let f = FieldTable::new(5, 1).unwrap();
        let code = reed_solomon(&f, 4, 2, None).unwrap();
        assert_eq!(enumerate_codewords(&code).unwrap().count(), 25);
        assert_eq!(code.minimum_distance().unwrap(), 3);
    }

    #[test]
    fn identity_generator_order_over_gf3() {
        let f = FieldTable::new(3, 1).unwrap();
        let code = QaryCode::new(f, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let words: Vec<Vec<u32>> = enumerate_codewords(&code)
            .unwrap()
            .map(|c| c.symbols)
            .collect();
        assert_eq!(words.len(), 9);
        assert_eq!(words[0], vec![0, 0]);
        assert_eq!(words[1], vec![1, 0]);
        assert_eq!(words[2], vec![2, 0]);
        assert_eq!(words[3], vec![0, 1]);
        assert_eq!(words[8], vec![2, 2]);
    }

    #[test]
    fn rs_errors() {
        let f = gf4();
        assert_eq!(
            reed_solomon(&f, 5, 2, None).unwrap_err(),
            GaloisError::TooManyPoints { n: 5, q: 4 }
        );
        assert_eq!(
            reed_solomon(&f, 3, 2, Some(&[0, 1, 1])).unwrap_err(),
            GaloisError::DuplicatePoints
        );
        assert_eq!(
            reed_solomon(&f, 3, 4, None).unwrap_err(),
            GaloisError::InvalidDimension { n: 3, k: 4 }
        );
    }

    #[test]
    fn dependent_generator_rejected() {
        let f = gf4();
        assert_eq!(
            QaryCode::new(f, vec![vec![1, 1], vec![2, 2]]).unwrap_err(),
            GaloisError::DependentRows
        );
    }

    #[test]
    fn element_index_rows() {
        let f = gf4();
        let code = QaryCode::from_element_indices(f, &[vec![1, 1, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(code.generator()[1], vec![0, 1, 2]);
    }

    #[test]
    fn enumeration_cap() {
        let f = FieldTable::new(2, 8).unwrap();
        let code = reed_solomon(&f, 4, 3, None).unwrap();
        assert!(matches!(
            enumerate_codewords(&code),
            Err(GaloisError::CapExceeded { .. })
        ));
    }
}
