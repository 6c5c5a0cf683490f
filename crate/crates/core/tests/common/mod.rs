#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use disjunct_codes::binmat::{alist_read, BitMatrix};
use disjunct_codes::constructions::{
    fu_hwang_matrix, kautz_singleton_matrix, macula_matrix, FuHwangSpec, KautzSingletonSpec,
    MaculaSpec,
};
use disjunct_codes::designs::{design_read, Design};
use disjunct_codes::galois::{reed_solomon, FieldTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn alist(name: &str) -> BitMatrix {
    let text = fs::read_to_string(fixture_path(name)).unwrap();
    alist_read(&text).unwrap()
}

pub fn design(name: &str) -> Design {
    let text = fs::read_to_string(fixture_path(name)).unwrap();
    design_read(&text).unwrap()
}

pub fn macula(d: usize, k: usize, n: usize) -> BitMatrix {
    macula_matrix(&MaculaSpec::new(d, k, n).unwrap())
}

pub fn fu_hwang(d: &Design) -> BitMatrix {
    fu_hwang_matrix(&FuHwangSpec::new(d.clone(), d.t() - 1).unwrap(), None).unwrap()
}

pub fn ks_spec(p: u32, m: u32, n: usize, k: usize) -> KautzSingletonSpec {
    let f = FieldTable::new(p, m).unwrap();
    KautzSingletonSpec::new(reed_solomon(&f, n, k, None).unwrap()).unwrap()
}

/// Expansion of the [3,2] Reed-Solomon code over GF(4).
pub fn rs_example() -> BitMatrix {
    kautz_singleton_matrix(&ks_spec(2, 2, 3, 2)).unwrap()
}

/// Seeded Bernoulli matrix.
pub fn random_matrix(rows: usize, cols: usize, density: f64, seed: u64) -> BitMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    BitMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(density))
}

/// The fixture and constructed matrices from the worked examples, by name.
pub fn example_matrices() -> Vec<(&'static str, BitMatrix)> {
    vec![
        ("example1", alist("example1.alist")),
        ("example2", alist("example2.alist")),
        ("hamming", alist("hamming743.alist")),
        ("rs_example", rs_example()),
        ("M(2,3,5)", macula(2, 3, 5)),
        ("M(2,4,7)", macula(2, 4, 7)),
        ("M(3,4,7)", macula(3, 4, 7)),
        (
            "S(3,4,8)",
            fu_hwang(&disjunct_codes::designs::sqs_backtrack(8, 1 << 20).unwrap()),
        ),
        ("sqs10", fu_hwang(&design("sqs10.design"))),
    ]
}
