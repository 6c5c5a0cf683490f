//! Reproduction table: every worked example and closed-form parameter claim,
//! recomputed from fixtures and constructions, one row per claim.

use std::fmt::{self, Display, Write as _};
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::analysis::{
    check_disjunct_witness, code_parameters, disjunct_profile, enumerate_generalized_pasch,
    find_generalized_pasch, fu_hwang_rate_bound, girth_report, is_disjunct, ks_rate_bound,
    macula_rate_bound, CodeParameters, DisjunctOutcome, VerifiedD,
};
use crate::binmat::{alist_read, null_space_enumerate, BitMatrix};
use crate::combinat::binomial;
use crate::constructions::{
    fu_hwang_matrix, kautz_singleton_matrix, macula_matrix, FuHwangSpec, KautzSingletonSpec,
    MaculaSpec,
};
use crate::decode::{verify_tillich_guarantee, TillichOutcome};
use crate::designs::{design_read, sqs_backtrack, Design};
use crate::galois::{reed_solomon, FieldTable};

pub const FIXTURES: [&str; 6] = [
    "example1.alist",
    "example2.alist",
    "hamming743.alist",
    "rs_example.alist",
    "sqs10.design",
    "sqs14.design",
];

#[derive(Debug, Error)]
pub enum ReproduceError {
    #[error("missing fixture: {0}")]
    MissingFixture(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimRow {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

impl ClaimRow {
    fn compare(claim: impl Into<String>, expected: impl Display, computed: impl Display) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            claim: claim.into(),
            expected,
            computed,
            status,
        }
    }

    fn check(
        claim: impl Into<String>,
        expected: impl Display,
        computed: impl Display,
        ok: bool,
    ) -> Self {
        Self {
            claim: claim.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    fn error(claim: impl Into<String>, expected: impl Display, err: impl Display) -> Self {
        Self {
            claim: claim.into(),
            expected: expected.to_string(),
            computed: format!("error: {err}"),
            status: Status::Error,
        }
    }
}

/// Full table. Fails only when a fixture file is absent; unreadable or
/// invalid fixtures become `ERROR` rows.
pub fn reproduce(fixtures: &Path, budget: u64) -> Result<Vec<ClaimRow>, ReproduceError> {
    let mut texts = Vec::new();
    for name in FIXTURES {
        let path = fixtures.join(name);
        if !path.is_file() {
            return Err(ReproduceError::MissingFixture(path));
        }
        texts.push(fs::read_to_string(&path).map_err(|e| e.to_string()));
    }
    let mut rows = Vec::new();
    let alist = |i: usize| -> Result<BitMatrix, String> {
        texts[i]
            .clone()
            .and_then(|t| alist_read(&t).map_err(|e| e.to_string()))
    };
    let design = |i: usize| -> Result<Design, String> {
        texts[i]
            .clone()
            .and_then(|t| design_read(&t).map_err(|e| e.to_string()))
    };

    example1(&mut rows, alist(0), budget);
    example2(&mut rows, alist(1), budget);
    hamming(&mut rows, alist(2), budget);
    rs_example(&mut rows, alist(3), budget);
    macula(&mut rows, budget);
    fu_hwang_sqs8(&mut rows, budget);
    sqs10(&mut rows, design(4), budget);
    sqs14(&mut rows, design(5), budget);
    pasch_tables(&mut rows, budget);
    Ok(rows)
}

/// Aligned text table followed by a one-line tally.
pub fn render_table(rows: &[ClaimRow]) -> String {
    let header = ["STATUS", "CLAIM", "EXPECTED", "COMPUTED"];
    let cells: Vec<[String; 4]> = rows
        .iter()
        .map(|r| {
            [
                r.status.to_string(),
                r.claim.clone(),
                r.expected.clone(),
                r.computed.clone(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for c in &cells {
        for (w, s) in widths.iter_mut().zip(c) {
            *w = (*w).max(s.len());
        }
    }
    let mut out = String::new();
    let mut line = |c: [&str; 4]| {
        let s = format!(
            "{:<w0$}  {:<w1$}  {:<w2$}  {}",
            c[0],
            c[1],
            c[2],
            c[3],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2]
        );
        writeln!(out, "{}", s.trim_end()).unwrap();
    };
    line(header);
    for c in &cells {
        line([&c[0], &c[1], &c[2], &c[3]]);
    }
    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    writeln!(
        out,
        "{} claims: {} passed, {} failed, {} errors",
        rows.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Error)
    )
    .unwrap();
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn triple(p: &CodeParameters) -> String {
    format!("[{},{},{}]", p.n, p.dimension, p.d_min)
}

fn verified_text(v: VerifiedD) -> String {
    crate::report::format_verified(v)
}

/// No row meets the set in exactly one position.
pub fn is_stopping_set(m: &BitMatrix, cols: &[usize]) -> bool {
    (0..m.rows()).all(|i| cols.iter().filter(|&&j| m.get(i, j)).count() != 1)
}

fn example1(rows: &mut Vec<ClaimRow>, m: Result<BitMatrix, String>, budget: u64) {
    const P: &str = "example 1: ";
    let m = match m {
        Ok(m) => m,
        Err(e) => {
            rows.push(ClaimRow::error(
                format!("{P}fixture example1.alist"),
                "valid",
                e,
            ));
            return;
        }
    };
    match is_disjunct(&m, 2, budget) {
        Ok(o) => rows.push(ClaimRow::compare(
            format!("{P}2-disjunct"),
            "yes",
            yes_no(o == DisjunctOutcome::Disjunct),
        )),
        Err(e) => rows.push(ClaimRow::error(format!("{P}2-disjunct"), "yes", e)),
    }
    match is_disjunct(&m, 3, budget) {
        Ok(DisjunctOutcome::Disjunct) => {
            rows.push(ClaimRow::compare(format!("{P}3-disjunct"), "no", "yes"))
        }
        Ok(DisjunctOutcome::NotDisjunct { designated, others }) => {
            let valid = check_disjunct_witness(&m, 3, designated, &others);
            rows.push(ClaimRow::check(
                format!("{P}3-disjunct"),
                "no, with a valid witness",
                format!("no, column {designated} covered by {others:?}"),
                valid,
            ));
        }
        Err(e) => rows.push(ClaimRow::error(format!("{P}3-disjunct"), "no", e)),
    }
    rows.push(ClaimRow::compare(
        format!("{P}c3 covered by c1,c6,c8"),
        "yes",
        yes_no(check_disjunct_witness(&m, 3, 2, &[0, 5, 7])),
    ));
}

fn example2(rows: &mut Vec<ClaimRow>, m: Result<BitMatrix, String>, budget: u64) {
    const P: &str = "example 2: ";
    let m = match m {
        Ok(m) => m,
        Err(e) => {
            rows.push(ClaimRow::error(
                format!("{P}fixture example2.alist"),
                "valid",
                e,
            ));
            return;
        }
    };
    let p = code_parameters(&m, None, true, false, budget);
    rows.push(ClaimRow::compare(format!("{P}d_min"), 4, p.d_min));
    let prof = disjunct_profile(&m, budget);
    rows.push(ClaimRow::compare(
        format!("{P}disjunct value"),
        0,
        verified_text(prof.verified),
    ));
}

fn hamming(rows: &mut Vec<ClaimRow>, m: Result<BitMatrix, String>, budget: u64) {
    const P: &str = "hamming [7,4,3]: ";
    let m = match m {
        Ok(m) => m,
        Err(e) => {
            rows.push(ClaimRow::error(
                format!("{P}fixture hamming743.alist"),
                "valid",
                e,
            ));
            return;
        }
    };
    let p = code_parameters(&m, None, true, true, budget);
    rows.push(ClaimRow::compare(
        format!("{P}parameters"),
        "[7,4,3]",
        triple(&p),
    ));
    rows.push(ClaimRow::compare(
        format!("{P}{{v1,v4,v5}} is a stopping set"),
        "yes",
        yes_no(is_stopping_set(&m, &[0, 3, 4])),
    ));
    rows.push(ClaimRow::compare(format!("{P}s_min"), 3, p.s_min));
}

fn rs_example(rows: &mut Vec<ClaimRow>, printed: Result<BitMatrix, String>, budget: u64) {
    const P: &str = "KS from RS[3,2] over GF(4): ";
    let built = FieldTable::new(2, 2)
        .map_err(|e| e.to_string())
        .and_then(|f| reed_solomon(&f, 3, 2, None).map_err(|e| e.to_string()))
        .and_then(|c| KautzSingletonSpec::new(c).map_err(|e| e.to_string()))
        .and_then(|s| {
            kautz_singleton_matrix(&s)
                .map(|m| (s, m))
                .map_err(|e| e.to_string())
        });
    let (spec, m) = match built {
        Ok(x) => x,
        Err(e) => {
            rows.push(ClaimRow::error(
                format!("{P}construction"),
                "12x16 matrix",
                e,
            ));
            return;
        }
    };
    match printed {
        Ok(p) => rows.push(ClaimRow::compare(
            format!("{P}matches printed matrix"),
            "yes",
            yes_no(p == m),
        )),
        Err(e) => rows.push(ClaimRow::error(
            format!("{P}fixture rs_example.alist"),
            "valid",
            e,
        )),
    }
    let bound = ks_rate_bound(3, 4, 2);
    let p = code_parameters(&m, Some(bound), true, false, budget);
    rows.push(ClaimRow::compare(
        format!("{P}code parameters"),
        "[16,4,8]",
        triple(&p),
    ));
    rows.push(rate_row(format!("{P}rate"), &p));
    let g = girth_report(&m);
    rows.push(ClaimRow::compare(format!("{P}girth"), 6, g.girth));
    let prof = disjunct_profile(&m, budget);
    rows.push(ClaimRow::compare(format!("{P}a_max"), 1, prof.a_max));
    rows.push(ClaimRow::compare(
        format!("{P}disjunct value"),
        2,
        verified_text(prof.verified),
    ));
    rows.push(tillich_row(
        format!("{P}one-round guarantee"),
        &m,
        1,
        None,
        budget,
    ));
    rows.push(zero_sum_row(
        format!("{P}min-weight codewords sum to zero over GF(4)"),
        &spec,
        &m,
        &p,
    ));
    rows.push(constant_columns_row(
        format!("{P}constant codewords: q-ary sum zero, binary sum not"),
        &spec,
        &m,
    ));
}

fn rate_row(claim: String, p: &CodeParameters) -> ClaimRow {
    match p.rate_lower_bound {
        Some(b) => ClaimRow::check(claim, format!(">= {b}"), p.rate, p.rate >= b),
        None => ClaimRow::error(claim, "bound", "no bound"),
    }
}

fn tillich_row(
    claim: String,
    m: &BitMatrix,
    radius: usize,
    patterns: Option<u64>,
    budget: u64,
) -> ClaimRow {
    let expected = match patterns {
        Some(n) => format!("holds (radius {radius}, {n} patterns)"),
        None => format!("holds (radius {radius})"),
    };
    match verify_tillich_guarantee(m, budget) {
        Ok(TillichOutcome::Holds {
            radius: r,
            patterns: n,
        }) => {
            let computed = match patterns {
                Some(_) => format!("holds (radius {r}, {n} patterns)"),
                None => format!("holds (radius {r})"),
            };
            ClaimRow::compare(claim, expected, computed)
        }
        Ok(TillichOutcome::Counterexample { radius, error }) => ClaimRow::compare(
            claim,
            expected,
            format!("fails (radius {radius}) on {error:?}"),
        ),
        Err(e) => ClaimRow::error(claim, expected, e),
    }
}

/// Over characteristic 2, the q-ary codewords behind any binary codeword
/// of the expansion must sum to zero.
fn zero_sum_row(
    claim: String,
    spec: &KautzSingletonSpec,
    m: &BitMatrix,
    p: &CodeParameters,
) -> ClaimRow {
    let Some(d) = p.d_min.exact() else {
        return ClaimRow::error(claim, "holds", "d_min unknown");
    };
    let code = spec.code();
    let field = code.field();
    let iter = match null_space_enumerate(m, 1 << 20) {
        Ok(it) => it,
        Err(e) => return ClaimRow::error(claim, "holds", e),
    };
    let (mut checked, mut ok) = (0usize, true);
    for w in iter.filter(|w| w.weight() == d) {
        checked += 1;
        let mut sum = vec![0u32; code.len()];
        for j in w.support() {
            let c = code.encode(&code.message(j as u64));
            for (s, x) in sum.iter_mut().zip(c) {
                *s = field.add(*s, x);
            }
        }
        ok &= sum.iter().all(|&s| s == 0);
    }
    ClaimRow::check(
        claim,
        "holds",
        format!(
            "{} on {checked} codewords",
            if ok { "holds" } else { "fails" }
        ),
        ok && checked > 0,
    )
}

/// The `q` constant polynomials evaluate to `(c, c, c)`; their sum is zero
/// in GF(4)^3, yet each row block of the expansion sums to all ones.
fn constant_columns_row(claim: String, spec: &KautzSingletonSpec, m: &BitMatrix) -> ClaimRow {
    let code = spec.code();
    let field = code.field();
    let q = field.order() as u64;
    let columns: Vec<u64> = (0..q).collect();
    let mut qsum = vec![0u32; code.len()];
    let mut binary = crate::bits::BitVec::zeros(m.rows());
    for &j in &columns {
        let c = code.encode(&code.message(j));
        debug_assert!(c.windows(2).all(|w| w[0] == w[1]));
        for (s, x) in qsum.iter_mut().zip(c) {
            *s = field.add(*s, x);
        }
        binary.xor_assign(&m.column_vec(j as usize));
    }
    let q_zero = qsum.iter().all(|&s| s == 0);
    let b_zero = binary.is_zero();
    ClaimRow::compare(
        claim,
        "q-ary zero, binary weight 12",
        format!(
            "q-ary {}, binary weight {}",
            if q_zero { "zero" } else { "nonzero" },
            if b_zero { 0 } else { binary.weight() }
        ),
    )
}

fn macula(rows: &mut Vec<ClaimRow>, budget: u64) {
    for d in 1..=3usize {
        for n in d + 2..=8 {
            let spec = MaculaSpec::standard(d, n).expect("valid Macula parameters");
            let m = macula_matrix(&spec);
            let p = format!("M({d},{},{n}): ", d + 1);
            rows.push(ClaimRow::compare(
                format!("{p}shape, column and row weight"),
                format!(
                    "{}x{}, {}, {}",
                    binomial(n, d),
                    binomial(n, d + 1),
                    d + 1,
                    n - d
                ),
                shape(&m),
            ));
            let g = girth_report(&m);
            rows.push(ClaimRow::compare(format!("{p}girth"), 6, g.girth));
            rows.push(ClaimRow::compare(
                format!("{p}six-cycles"),
                binomial(n, d + 2) * binomial(d + 2, 3),
                g.six_cycles,
            ));
            let prof = disjunct_profile(&m, 0);
            rows.push(ClaimRow::compare(
                format!("{p}disjunct value from weights"),
                d,
                crate::report::format_formula(prof.formula),
            ));
            let c = code_parameters(&m, Some(macula_rate_bound(d, n)), true, true, budget);
            rows.push(ClaimRow::compare(format!("{p}d_min"), d + 2, c.d_min));
            rows.push(ClaimRow::compare(format!("{p}s_min"), d + 2, c.s_min));
            rows.push(rate_row(format!("{p}rate"), &c));
        }
    }
    let m = macula_matrix(&MaculaSpec::standard(2, 5).expect("valid"));
    rows.push(tillich_row(
        "M(2,3,5): one-round guarantee".into(),
        &m,
        1,
        None,
        budget,
    ));
    let m = macula_matrix(&MaculaSpec::new(2, 4, 7).expect("valid"));
    rows.push(ClaimRow::compare(
        "M(2,4,7): girth",
        4,
        girth_report(&m).girth,
    ));
}

/// `RxC, column weight, row weight`, or `irregular` when weights vary.
fn shape(m: &BitMatrix) -> String {
    let constant = |w: Vec<usize>| -> String {
        match w.first() {
            Some(&f) if w.iter().all(|&x| x == f) => f.to_string(),
            _ => "irregular".into(),
        }
    };
    format!(
        "{}x{}, {}, {}",
        m.rows(),
        m.cols(),
        constant(m.column_weights()),
        constant(m.row_weights())
    )
}

/// Rows, six-cycles and disjunct value shared by every S(t,t+1,v).
/// `verify` adds the exhaustive disjunct check.
fn steiner_rows(
    rows: &mut Vec<ClaimRow>,
    p: &str,
    d: &Design,
    m: &BitMatrix,
    verify: bool,
    budget: u64,
) {
    let (t, v) = (d.t(), d.v());
    rows.push(ClaimRow::compare(
        format!("{p}shape, column and row weight"),
        format!(
            "{}x{}, {}, {}",
            binomial(v, t - 1),
            binomial(v, t) / (t as u64 + 1),
            binomial(t + 1, t - 1),
            (v - t).div_ceil(2)
        ),
        shape(m),
    ));
    let g = girth_report(m);
    rows.push(ClaimRow::compare(format!("{p}girth"), 6, g.girth));
    rows.push(ClaimRow::compare(
        format!("{p}six-cycles"),
        binomial(v, t + 1) * binomial(t + 1, 3),
        g.six_cycles,
    ));
    let want = binomial(t + 1, 2) as usize - 1;
    let prof = disjunct_profile(m, if verify { budget } else { 0 });
    rows.push(ClaimRow::compare(
        format!("{p}disjunct value from weights"),
        want,
        crate::report::format_formula(prof.formula),
    ));
    if verify {
        rows.push(ClaimRow::check(
            format!("{p}verified disjunct value"),
            format!(">= {want}"),
            verified_text(prof.verified),
            prof.verified.value().is_some_and(|x| x >= want),
        ));
    }
}

fn fu_hwang_sqs8(rows: &mut Vec<ClaimRow>, budget: u64) {
    const P: &str = "Fu-Hwang on S(3,4,8): ";
    let built = sqs_backtrack(8, budget).map_err(|e| e.to_string());
    let Some((d, m)) = fu_hwang_from(rows, P, built) else {
        return;
    };
    steiner_rows(rows, P, &d, &m, true, budget);
    let p = code_parameters(&m, Some(fu_hwang_rate_bound(3, 8)), false, false, budget);
    rows.push(rate_row(format!("{P}rate"), &p));
}

fn fu_hwang_from(
    rows: &mut Vec<ClaimRow>,
    p: &str,
    d: Result<Design, String>,
) -> Option<(Design, BitMatrix)> {
    let built = d.and_then(|d| {
        FuHwangSpec::new(d.clone(), d.t() - 1)
            .and_then(|s| fu_hwang_matrix(&s, None))
            .map(|m| (d, m))
            .map_err(|e| e.to_string())
    });
    match built {
        Ok(x) => Some(x),
        Err(e) => {
            rows.push(ClaimRow::error(format!("{p}fixture"), "valid S(3,4,v)", e));
            None
        }
    }
}

fn sqs10(rows: &mut Vec<ClaimRow>, d: Result<Design, String>, budget: u64) {
    const P: &str = "Fu-Hwang on sqs10.design: ";
    let Some((d, m)) = fu_hwang_from(rows, P, d) else {
        return;
    };
    let p = code_parameters(&m, Some(fu_hwang_rate_bound(3, 10)), true, false, budget);
    rows.push(ClaimRow::compare(
        format!("{P}code parameters"),
        "[30,2,11]",
        triple(&p),
    ));
    rows.push(rate_row(format!("{P}rate"), &p));
    steiner_rows(rows, P, &d, &m, true, budget);
    match find_generalized_pasch(&d, budget) {
        Ok(found) => rows.push(ClaimRow::compare(
            format!("{P}generalized Pasch configuration"),
            "none",
            found.map_or("none".to_string(), |c| format!("{c:?}")),
        )),
        Err(e) => rows.push(ClaimRow::error(
            format!("{P}generalized Pasch configuration"),
            "none",
            e,
        )),
    }
    rows.push(tillich_row(
        format!("{P}one-round guarantee"),
        &m,
        3,
        Some(4525),
        budget,
    ));
}

fn sqs14(rows: &mut Vec<ClaimRow>, d: Result<Design, String>, budget: u64) {
    const P: &str = "Fu-Hwang on sqs14.design: ";
    let Some((d, m)) = fu_hwang_from(rows, P, d) else {
        return;
    };
    let p = code_parameters(&m, Some(fu_hwang_rate_bound(3, 14)), true, false, budget);
    rows.push(ClaimRow::compare(
        format!("{P}code parameters"),
        "[91,7,7]",
        triple(&p),
    ));
    rows.push(rate_row(format!("{P}rate"), &p));
    steiner_rows(rows, P, &d, &m, false, budget);
    let claim = format!("{P}generalized Pasch configuration");
    let expected = "7 blocks, pairwise intersections of size 2, a codeword";
    match find_generalized_pasch(&d, budget) {
        Ok(Some(cfg)) => {
            let blocks = d.blocks();
            let pairwise = cfg.iter().enumerate().all(|(x, &a)| {
                cfg[x + 1..]
                    .iter()
                    .all(|&b| crate::combinat::sorted_intersection_len(&blocks[a], &blocks[b]) == 2)
            });
            let word = crate::bits::BitVec::from_support(m.cols(), &cfg);
            let codeword = m.mul_vec(&word).is_zero();
            let computed = format!(
                "{} blocks{}{} {cfg:?}",
                cfg.len(),
                if pairwise {
                    ", pairwise intersections of size 2"
                } else {
                    ""
                },
                if codeword { ", a codeword" } else { "" },
            );
            rows.push(ClaimRow::check(
                claim,
                expected,
                computed,
                cfg.len() == 7 && pairwise && codeword,
            ));
        }
        Ok(None) => rows.push(ClaimRow::compare(claim, expected, "none")),
        Err(e) => rows.push(ClaimRow::error(claim, expected, e)),
    }
}

/// The two tabulated configurations, each taken as a packing on its own.
fn pasch_tables(rows: &mut Vec<ClaimRow>, budget: u64) {
    let t2 = Design::new(
        6,
        3,
        2,
        vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 4, 5], vec![2, 3, 5]],
    );
    let t3 = Design::new(
        7,
        4,
        3,
        vec![
            vec![0, 1, 2, 3],
            vec![0, 1, 5, 6],
            vec![0, 2, 4, 6],
            vec![0, 3, 4, 5],
            vec![1, 2, 4, 5],
            vec![1, 3, 4, 6],
            vec![2, 3, 5, 6],
        ],
    );
    for (t, d) in [(2usize, t2), (3, t3)] {
        let claim = format!("generalized Pasch table, t={t}");
        let size = binomial(t + 1, 2) as usize + 1;
        let expected = format!("one configuration of {size} blocks");
        let result = d
            .map_err(|e| e.to_string())
            .and_then(|d| enumerate_generalized_pasch(&d, budget).map_err(|e| e.to_string()));
        match result {
            Ok(all) => {
                let computed = match all.as_slice() {
                    [one] => format!("one configuration of {} blocks", one.len()),
                    _ => format!("{} configurations", all.len()),
                };
                rows.push(ClaimRow::compare(claim, expected, computed));
            }
            Err(e) => rows.push(ClaimRow::error(claim, expected, e)),
        }
    }
}
