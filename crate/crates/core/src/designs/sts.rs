//! Steiner triple systems by the Bose (v = 6n+3) and Skolem (v = 6n+1)
//! constructions.

use super::{validate_packing, Classification, Design, DesignError};

/// An S(2,3,v). Exists iff `v ≡ 1` or `3 (mod 6)`.
pub fn steiner_triple_system(v: usize) -> Result<Design, DesignError> {
    let blocks = match v % 6 {
        3 if v >= 3 => bose(v),
        1 if v >= 7 => skolem(v),
        _ => {
            return Err(DesignError::NoSuchDesign {
                t: 2,
                k: 3,
                v,
                reason: "v must be 1 or 3 mod 6 (and at least 3)".into(),
            })
        }
    };
    let d = Design::new(v, 3, 2, blocks)?;
    debug_assert_eq!(validate_packing(&d), Classification::Steiner);
    Ok(d)
}

// Points (x, i) with x in the quasigroup and i in Z_3 map to x + i * order.

fn bose(v: usize) -> Vec<Vec<usize>> {
    let order = v / 3; // 2n + 1
    let half = order.div_ceil(2); // inverse of 2 modulo 2n + 1
    let op = |x: usize, y: usize| (x + y) * half % order;
    let pt = |x: usize, i: usize| x + (i % 3) * order;
    let mut blocks = Vec::new();
    for x in 0..order {
        blocks.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..order {
            for y in x + 1..order {
                blocks.push(vec![pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}

fn skolem(v: usize) -> Vec<Vec<usize>> {
    let n = (v - 1) / 6;
    let order = 2 * n;
    // Half-idempotent commutative quasigroup on Z_{2n}.
    let op = |x: usize, y: usize| {
        let s = (x + y) % order;
        if s.is_multiple_of(2) {
            s / 2
        } else {
            (s + order - 1) / 2
        }
    };
    let pt = |x: usize, i: usize| x + (i % 3) * order;
    let inf = 3 * order;
    let mut blocks = Vec::new();
    for x in 0..n {
        blocks.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for x in 0..n {
        for i in 0..3 {
            blocks.push(vec![inf, pt(x + n, i), pt(x, i + 1)]);
        }
    }
    for i in 0..3 {
        for x in 0..order {
            for y in x + 1..order {
                blocks.push(vec![pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}
