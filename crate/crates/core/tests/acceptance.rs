//! Acceptance suite, one status line per criterion.
//!
//! Each check compares a computed value against the value the worked
//! examples state. Where a stated value is provably unattainable the check
//! carries the independently confirmed value as well: the criterion line
//! then reads FAIL, but the run only aborts when the computation disagrees
//! with both.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use disjunct_codes::analysis::{
    check_disjunct_witness, code_parameters, disjunct_profile, find_generalized_pasch, girth,
    girth_report, is_disjunct, is_separable, macula_rate_bound, min_distance, six_cycles,
    stopping_distance, DisjunctOutcome, FormulaD, Girth, VerifiedD,
};
use disjunct_codes::binmat::{null_space_enumerate, BitMatrix};
use disjunct_codes::bits::BitVec;
use disjunct_codes::cli;
use disjunct_codes::combinat::binomial;
use disjunct_codes::decode::{
    bsc_campaign, verify_tillich_guarantee, CampaignConfig, TillichOutcome,
};
use disjunct_codes::designs::{sqs_backtrack, validate_packing, Classification};
use disjunct_codes::reproduce::{render_table, reproduce};

const BUDGET: u64 = 100_000_000;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    notes: Vec<String>,
    /// Stated values that did not reproduce but match the confirmed value.
    deviations: Vec<String>,
    /// Values matching neither.
    errors: Vec<String>,
}

impl Criterion {
    fn new(id: u32, title: &'static str, limit_secs: u64) -> Self {
        Self {
            id,
            title,
            limit: Duration::from_secs(limit_secs),
            notes: Vec::new(),
            deviations: Vec::new(),
            errors: Vec::new(),
        }
    }

    fn expect(&mut self, what: impl Into<String>, expected: impl ToString, got: impl ToString) {
        let (what, expected, got) = (what.into(), expected.to_string(), got.to_string());
        if expected != got {
            self.errors
                .push(format!("{what}: expected {expected}, got {got}"));
        }
    }

    fn truth(&mut self, what: impl Into<String>, ok: bool) {
        if !ok {
            self.errors.push(format!("{}: does not hold", what.into()));
        }
    }

    /// `stated` is what the examples claim, `confirmed` the value obtained
    /// by independent brute force.
    fn stated(
        &mut self,
        what: impl Into<String>,
        stated: impl ToString,
        confirmed: impl ToString,
        got: impl ToString,
    ) {
        let (what, stated, confirmed, got) = (
            what.into(),
            stated.to_string(),
            confirmed.to_string(),
            got.to_string(),
        );
        if got == stated {
            return;
        }
        if got == confirmed {
            self.deviations
                .push(format!("{what}: stated {stated}, computed {got}"));
        } else {
            self.errors.push(format!(
                "{what}: stated {stated}, confirmed {confirmed}, got {got}"
            ));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Prints the status line and details; returns false on a hard failure.
    fn report(&self, elapsed: Duration) -> bool {
        let slow = elapsed > self.limit;
        let pass = self.errors.is_empty() && self.deviations.is_empty() && !slow;
        println!(
            "criterion {}: {} {} ({:.2}s, limit {}s)",
            self.id,
            if pass { "PASS" } else { "FAIL" },
            self.title,
            elapsed.as_secs_f64(),
            self.limit.as_secs()
        );
        for n in &self.notes {
            println!("    {n}");
        }
        for d in &self.deviations {
            println!("    not reproduced: {d}");
        }
        for e in &self.errors {
            println!("    ERROR {e}");
        }
        if slow {
            println!("    ERROR time limit exceeded");
        }
        self.errors.is_empty() && !slow
    }
}

fn triple(m: &BitMatrix) -> String {
    let p = code_parameters(m, None, true, false, BUDGET);
    format!("[{},{},{}]", p.n, p.dimension, p.d_min)
}

fn c1() -> Criterion {
    let mut c = Criterion::new(1, "example 1: 2-disjunct, not 3-disjunct", 1);
    let m = alist("example1.alist");
    c.expect("10x10", "10x10", format!("{}x{}", m.rows(), m.cols()));
    c.expect(
        "2-disjunct",
        true,
        is_disjunct(&m, 2, BUDGET).unwrap().holds(),
    );
    match is_disjunct(&m, 3, BUDGET).unwrap() {
        DisjunctOutcome::Disjunct => c.truth("3-disjunct fails", false),
        DisjunctOutcome::NotDisjunct { designated, others } => {
            c.truth(
                "witness valid",
                check_disjunct_witness(&m, 3, designated, &others),
            );
            c.note(format!(
                "witness: column {designated} covered by {others:?}"
            ));
        }
    }
    c.truth(
        "stated witness c3 vs {c1,c6,c8}",
        check_disjunct_witness(&m, 3, 2, &[0, 5, 7]),
    );
    c
}

fn c2() -> Criterion {
    let mut c = Criterion::new(2, "KS expansion of RS[3,2] over GF(4)", 1);
    let m = rs_example();
    c.expect(
        "bit-exact printed matrix",
        true,
        m == alist("rs_example.alist"),
    );
    c.stated("code parameters", "[16,4,8]", "[16,8,4]", triple(&m));
    let g = girth_report(&m);
    c.expect("girth", Girth::Cycle(6), g.girth);
    let prof = disjunct_profile(&m, BUDGET);
    c.expect("a_max", 1, prof.a_max);
    c.expect(
        "disjunct formula",
        format!("{:?}", FormulaD::Value(2)),
        format!("{:?}", prof.formula),
    );
    c.expect(
        "verified disjunct",
        "Exact(2)",
        format!("{:?}", prof.verified),
    );
    c
}

fn c3() -> Criterion {
    let mut c = Criterion::new(3, "Macula sweep D in 1..=3, N in D+2..=8", 60);
    let mut cells = 0;
    for d in 1..=3usize {
        for n in d + 2..=8 {
            let m = macula(d, d + 1, n);
            let tag = format!("M({d},{},{n})", d + 1);
            c.expect(format!("{tag} girth"), Girth::Cycle(6), girth(&m));
            let cycles = six_cycles(&m, 1 << 20).unwrap().len() as u64;
            c.expect(
                format!("{tag} six-cycles"),
                binomial(n, d + 2) * binomial(d + 2, 3),
                cycles,
            );
            c.expect(
                format!("{tag} d_min"),
                d + 2,
                min_distance(&m, BUDGET).unwrap().unwrap(),
            );
            c.expect(
                format!("{tag} s_min"),
                format!("{:?}", Some(d + 2)),
                format!("{:?}", stopping_distance(&m, BUDGET, None).unwrap().size()),
            );
            let p = code_parameters(&m, None, false, false, BUDGET);
            c.truth(
                format!("{tag} rate bound"),
                p.rate >= macula_rate_bound(d, n),
            );
            cells += 1;
        }
    }
    c.note(format!("{cells} cells"));
    c
}

fn c4() -> Criterion {
    let mut c = Criterion::new(4, "M(2,4,7) has girth 4", 1);
    c.expect("girth", Girth::Cycle(4), girth(&macula(2, 4, 7)));
    c
}

fn c5() -> Criterion {
    let mut c = Criterion::new(5, "packing matrix of S(3,4,8)", 5);
    let d = sqs_backtrack(8, 1 << 20).unwrap();
    c.expect(
        "Steiner",
        true,
        validate_packing(&d) == Classification::Steiner,
    );
    let m = fu_hwang(&d);
    c.expect("shape", "28x14", format!("{}x{}", m.rows(), m.cols()));
    c.expect("column weights", "[6]", dedup(m.column_weights()));
    c.expect("row weights", "[3]", dedup(m.row_weights()));
    let g = girth_report(&m);
    c.expect("girth", Girth::Cycle(6), g.girth);
    c.stated(
        "six-cycles",
        280,
        252,
        six_cycles(&m, 1 << 20).unwrap().len(),
    );
    let v = disjunct_profile(&m, BUDGET).verified;
    c.truth("verified disjunct >= 5", v.value().is_some_and(|x| x >= 5));
    c.note(format!(
        "generated by backtracking; verified disjunct value {v:?}"
    ));
    c
}

fn dedup(mut v: Vec<usize>) -> String {
    v.sort_unstable();
    v.dedup();
    format!("{v:?}")
}

fn c6() -> Criterion {
    let mut c = Criterion::new(6, "packing codes from S(3,4,10) and S(3,4,14)", 30);
    let d10 = design("sqs10.design");
    let m10 = fu_hwang(&d10);
    let t10 = triple(&m10);
    c.stated("sqs10.design code", "[30,2,11]", "[30,2,15]", &t10);
    let found = find_generalized_pasch(&d10, BUDGET).unwrap();
    c.expect(
        "sqs10.design Pasch",
        "none",
        found.map_or("none".into(), |b| format!("{b:?}")),
    );

    let d14 = design("sqs14.design");
    let m14 = fu_hwang(&d14);
    let t14 = triple(&m14);
    c.expect("sqs14.design code", "[91,7,7]", &t14);
    match find_generalized_pasch(&d14, BUDGET).unwrap() {
        None => c.truth("sqs14.design Pasch found", false),
        Some(cfg) => {
            c.expect("Pasch blocks", 7, cfg.len());
            let b = d14.blocks();
            let pairwise = cfg.iter().enumerate().all(|(x, &i)| {
                cfg[x + 1..]
                    .iter()
                    .all(|&j| disjunct_codes::combinat::sorted_intersection_len(&b[i], &b[j]) == 2)
            });
            c.truth("pairwise intersections of size 2", pairwise);
            let word = BitVec::from_support(m14.cols(), &cfg);
            c.truth("configuration is a codeword", m14.mul_vec(&word).is_zero());
            c.note(format!("sqs14.design Pasch blocks {cfg:?}"));
        }
    }
    let t14u = triple(&fu_hwang(&design("sqs14_unseeded.design")));
    c.note(format!(
        "fixtures: sqs10.design -> {t10}, sqs14.design -> {t14}, sqs14_unseeded.design -> {t14u}"
    ));
    c
}

fn c7() -> Criterion {
    let mut c = Criterion::new(7, "one-round correction guarantee", 10);
    let cases = [
        ("M(2,3,5)", macula(2, 3, 5), 1, None),
        ("RS example", rs_example(), 1, None),
        (
            "sqs10.design",
            fu_hwang(&design("sqs10.design")),
            3,
            Some(4525u64),
        ),
    ];
    for (name, m, radius, patterns) in cases {
        match verify_tillich_guarantee(&m, BUDGET).unwrap() {
            TillichOutcome::Holds {
                radius: r,
                patterns: n,
            } => {
                c.expect(format!("{name} radius"), radius, r);
                if let Some(p) = patterns {
                    c.expect(format!("{name} patterns"), p, n);
                }
                c.note(format!("{name}: holds (radius {r}, {n} patterns)"));
            }
            TillichOutcome::Counterexample { error, .. } => {
                c.truth(format!("{name}: counterexample {error:?}"), false)
            }
        }
    }
    c
}

fn c8() -> Criterion {
    let mut c = Criterion::new(8, "property suites", 120);
    let mut matrices = example_matrices();
    let densities = [0.15, 0.25, 0.35, 0.5];
    for seed in 0..200u64 {
        matrices.push((
            "random",
            random_matrix(12, 20, densities[seed as usize % 4], seed),
        ));
    }
    let (mut chains, mut distance_checks) = (0, 0);
    for (name, m) in &matrices {
        let prof = disjunct_profile(m, BUDGET);
        let top = prof.verified.value().map_or(1, |d| d + 1);
        for d in 1..=top.min(m.cols()) {
            let Ok(dis) = is_disjunct(m, d, BUDGET) else {
                break;
            };
            let Ok(sep) = is_separable(m, d, true, BUDGET) else {
                break;
            };
            if dis.holds() {
                c.truth(
                    format!("{name}: {d}-disjunct implies separable"),
                    sep.holds(),
                );
            }
            if sep.holds() {
                c.truth(
                    format!("{name}: {d}-separable implies {}-disjunct", d - 1),
                    is_disjunct(m, d - 1, BUDGET).unwrap().holds(),
                );
            }
            chains += 1;
        }
        if let VerifiedD::Exact(d) | VerifiedD::AtLeast(d) | VerifiedD::Capped(d) = prof.verified {
            if d >= 1 {
                let p = code_parameters(m, None, true, true, BUDGET);
                if let Some(x) = p.d_min.exact() {
                    c.truth(format!("{name}: d_min {x} >= {}", d + 2), x >= d + 2);
                }
                if let Some(x) = p.s_min.exact() {
                    c.truth(format!("{name}: s_min {x} >= {}", d + 2), x >= d + 2);
                }
                distance_checks += 1;
            }
        }
    }
    c.note(format!(
        "{} matrices, {chains} chain steps, {distance_checks} distance checks",
        matrices.len()
    ));

    let spec = ks_spec(2, 2, 3, 2);
    let m = rs_example();
    let code = spec.code();
    let f = code.field();
    let mut min_words = 0;
    for w in null_space_enumerate(&m, 1 << 20).unwrap() {
        if w.weight() != 4 {
            continue;
        }
        min_words += 1;
        let mut sum = vec![0u32; code.len()];
        for j in w.support() {
            for (s, x) in sum.iter_mut().zip(code.encode(&code.message(j as u64))) {
                *s = f.add(*s, x);
            }
        }
        c.truth(
            format!("codeword {:?} sums to zero over GF(4)", w.support()),
            sum.iter().all(|&s| s == 0),
        );
    }
    c.expect("minimum-weight codewords", 12, min_words);
    let mut qsum = vec![0u32; code.len()];
    let mut bsum = BitVec::zeros(m.rows());
    for j in 0..4u64 {
        for (s, x) in qsum.iter_mut().zip(code.encode(&code.message(j))) {
            *s = f.add(*s, x);
        }
        bsum.xor_assign(&m.column_vec(j as usize));
    }
    c.truth(
        "constant codewords sum to zero over GF(4)",
        qsum.iter().all(|&s| s == 0),
    );
    c.truth("their binary columns do not sum to zero", !bsum.is_zero());
    c
}

fn c9() -> Criterion {
    let mut c = Criterion::new(9, "determinism", 120);
    let dir = cli::default_fixtures();
    let a = render_table(&reproduce(&dir, BUDGET).unwrap());
    let b = render_table(&reproduce(&dir, BUDGET).unwrap());
    c.expect("reproduce table identical", true, a == b);
    let run = || {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(["disjunct", "reproduce"], &mut out, &mut err);
        (code, out)
    };
    let (x, y) = (run(), run());
    c.expect("reproduce command output identical", true, x == y);
    c.note(format!("reproduce exit code {}", x.0));

    let m = fu_hwang(&design("sqs10.design"));
    let summary = |workers: usize| {
        let cfg = CampaignConfig {
            p: 0.08,
            trials: 3000,
            seed: 2024,
            max_rounds: 10,
            workers,
            max_error_weight: None,
        };
        let s = bsc_campaign(&m, &cfg).unwrap();
        format!("{}\n{:?}", s.csv_row(), s.failure_weights)
    };
    let base = summary(1);
    c.expect("campaign rerun", &base, summary(1));
    for w in [2, 4, 8] {
        c.expect(format!("campaign with {w} workers"), &base, summary(w));
    }
    c.note(format!(
        "campaign row {}",
        base.lines().next().unwrap_or("")
    ));
    c
}

fn main() -> ExitCode {
    let criteria: [fn() -> Criterion; 9] = [c1, c2, c3, c4, c5, c6, c7, c8, c9];
    let mut ok = true;
    for f in criteria {
        let start = Instant::now();
        let c = f();
        ok &= c.report(start.elapsed());
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
