//! Arithmetic in GF(p^m) through log/antilog tables.
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`,
//! the coefficient vector of their polynomial representative. The field
//! also carries an *element order*: `0`, `1`, then ascending powers of the
//! primitive element. The binary expansion of q-ary codewords indexes unit
//! vectors by position in this order.

mod code;

pub use code::{enumerate_codewords, reed_solomon, CodewordIter, QaryCode, QaryCodeword};

use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaloisError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("field order {p}^{m} exceeds {MAX_ORDER}")]
    OrderTooLarge { p: u32, m: u32 },
    #[error("length {n} needs {n} distinct evaluation points but the field has {q} elements")]
    TooManyPoints { n: usize, q: u32 },
    #[error("evaluation points must be distinct")]
    DuplicatePoints,
    #[error("invalid dimension k={k} for length n={n}")]
    InvalidDimension { n: usize, k: usize },
    #[error("{count} codewords exceed the enumeration cap {cap}")]
    CapExceeded { count: u64, cap: u64 },
    #[error("generator rows are linearly dependent")]
    DependentRows,
    #[error("symbol {symbol} is not an element of GF({q})")]
    InvalidSymbol { symbol: u32, q: u32 },
    #[error("generator rows have unequal lengths")]
    RaggedGenerator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, coefficients from degree 0 upward.
    modulus: Vec<u32>,
    primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    order: Vec<u32>,
    position: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Polynomials over GF(p), coefficients low to high, no trailing zeros
// except that the zero polynomial is empty.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = r[r.len() - 1] * lead_inv % p;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // Fermat; p is prime and small.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn decode_poly(mut e: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push(e % p);
        e /= p;
    }
    out
}

fn encode_poly(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        // Monic candidates of degree d.
        for low in 0..p.pow(d as u32) {
            let mut g = decode_poly(low, p, d as u32);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldTable {
    /// Builds GF(p^m). For `m > 1` the modulus is the smallest monic
    /// irreducible of degree `m`, comparing coefficient vectors from the
    /// highest degree down; the primitive element is the smallest encoding
    /// of multiplicative order `q - 1`.
    pub fn new(p: u32, m: u32) -> Result<Self, GaloisError> {
        if !is_prime(p) {
            return Err(GaloisError::NotPrime(p));
        }
        if m == 0 {
            return Err(GaloisError::InvalidDegree);
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER);
        let Some(q) = q else {
            return Err(GaloisError::OrderTooLarge { p, m });
        };
        let q = q as u32;

        let modulus = (0..p.pow(m))
            .map(|low| {
                let mut f = decode_poly(low, p, m);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial exists for every degree");

        let mut table = FieldTable {
            p,
            m,
            q,
            modulus,
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
            order: Vec::new(),
            position: Vec::new(),
        };

        let factors = prime_factors(q - 1);
        let primitive = (1..q)
            .find(|&g| q == 2 || factors.iter().all(|&r| table.pow_slow(g, (q - 1) / r) != 1))
            .expect("the multiplicative group is cyclic");
        table.primitive = primitive;

        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..q - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = table.mul_slow(x, primitive);
        }
        table.exp = exp;
        table.log = log;

        let mut order = vec![0u32];
        order.extend(table.exp.iter().copied());
        let mut position = vec![0u32; q as usize];
        for (i, &e) in order.iter().enumerate() {
            position[e as usize] = i as u32;
        }
        table.order = order;
        table.position = position;
        Ok(table)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (p, m) = (self.p, self.m);
        let pa = decode_poly(a, p, m);
        let pb = decode_poly(b, p, m);
        let mut prod = vec![0u32; pa.len() + pb.len()];
        for (i, &x) in pa.iter().enumerate() {
            for (j, &y) in pb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        encode_poly(&poly_rem(&prod, &self.modulus, p), p)
    }

    fn pow_slow(&self, a: u32, mut e: u32) -> u32 {
        let mut result = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_slow(result, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        result
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the modulus, degree 0 first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive(&self) -> u32 {
        self.primitive
    }

    /// Elements as `0, 1, g, g^2, ..., g^{q-2}`.
    pub fn element_order(&self) -> &[u32] {
        &self.order
    }

    /// The element at `index` in the element order.
    pub fn element(&self, index: usize) -> u32 {
        self.order[index]
    }

    /// Index of `element` in the element order.
    pub fn position(&self, element: u32) -> usize {
        self.position[element as usize] as usize
    }

    pub fn contains(&self, element: u32) -> bool {
        element < self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.m {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut a = a;
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.m {
            out += ((p - a % p) % p) * scale;
            a /= p;
            scale *= p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(s % (self.q - 1)) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: u32, e: u32) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * e as u64;
        self.exp[(l % (self.q - 1) as u64) as usize]
    }

    /// Rank of a matrix over this field (rows of element encodings).
    pub fn rank(&self, rows: &[Vec<u32>]) -> usize {
        let mut work: Vec<Vec<u32>> = rows.to_vec();
        let cols = work.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for col in 0..cols {
            let Some(piv) = (rank..work.len()).find(|&r| work[r][col] != 0) else {
                continue;
            };
            work.swap(rank, piv);
            let inv = self.inv(work[rank][col]).unwrap();
            let pivot: Vec<u32> = work[rank].iter().map(|&x| self.mul(x, inv)).collect();
            for (r, row) in work.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let f = row[col];
                    for (x, &y) in row.iter_mut().zip(&pivot) {
                        *x = self.sub(*x, self.mul(f, y));
                    }
                }
            }
            work[rank] = pivot;
            rank += 1;
        }
        rank
    }
}
