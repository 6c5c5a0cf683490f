//! Command-line front end. [`run`] parses arguments, writes all normal
//! output through one writer and returns the process exit code.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use thiserror::Error;

use crate::analysis::{
    disjunct_profile, fu_hwang_rate_bound, ks_rate_bound, macula_rate_bound, DEFAULT_BUDGET,
};
use crate::binmat::{alist_read, alist_write, BitMatrix};
use crate::bits::BitVec;
use crate::constructions::{
    fu_hwang_matrix, kautz_singleton_matrix, macula_matrix, FuHwangSpec, KautzSingletonSpec,
    MaculaSpec,
};
use crate::decode::{
    bsc_campaign, iterate_bit_flip, verify_tillich_guarantee, CampaignConfig, CampaignSummary,
    TillichOutcome,
};
use crate::designs::design_read;
use crate::galois::{reed_solomon, FieldTable, QaryCode};
use crate::report::{format_formula, format_verified, AnalysisReport, ReportOptions};
use crate::reproduce::{render_table, reproduce, ReproduceError, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failure(String),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
            CliError::Mismatch(_) => EXIT_MISMATCH,
        }
    }
}

fn failure(e: impl std::fmt::Display) -> CliError {
    CliError::Failure(e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "disjunct",
    version,
    about = "Parity-check codes from disjunct matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a matrix and write it in alist format.
    Generate(GenerateArgs),
    /// Print the parameter report of a matrix.
    Analyze(AnalyzeArgs),
    /// Run the bit-flipping decoder on one received word.
    Decode(DecodeArgs),
    /// Binary symmetric channel campaign, one CSV row per crossover
    /// probability.
    Simulate(SimulateArgs),
    /// Check the one-round correction radius on every error pattern.
    VerifyGuarantee(VerifyArgs),
    /// Recompute every worked example and print a pass/fail table.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub family: Family,
    /// Write the alist here; without it the alist goes to standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Subset-inclusion matrix M(D, K, N).
    Macula {
        #[arg(long)]
        d: usize,
        /// Defaults to D+1.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: usize,
    },
    /// Packing matrix: r-subsets against the blocks of a design file.
    Fuhwang {
        #[arg(long)]
        design: PathBuf,
        /// Defaults to t-1.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Unit-vector expansion of a q-ary code.
    Ks {
        #[arg(long)]
        q: u32,
        /// Reed-Solomon length.
        #[arg(long, requires = "rs_k", conflicts_with = "generator")]
        rs_n: Option<usize>,
        /// Reed-Solomon dimension.
        #[arg(long, requires = "rs_n")]
        rs_k: Option<usize>,
        /// Generator matrix file: rows of element indices.
        #[arg(long)]
        generator: Option<PathBuf>,
    },
}

/// Exactly one matrix source.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Matrix in alist format.
    #[arg(long)]
    pub alist: Option<PathBuf>,
    /// `D,N` or `D,K,N`.
    #[arg(long, value_name = "D,K,N")]
    pub macula: Option<String>,
    /// Design file for the packing construction (r = t-1).
    #[arg(long)]
    pub fuhwang: Option<PathBuf>,
    /// Reed-Solomon expansion `Q,N,K`.
    #[arg(long, value_name = "Q,N,K")]
    pub ks: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Kv,
    Csv,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: Source,
    /// Compute the minimum distance.
    #[arg(long)]
    pub dmin: bool,
    /// Compute the stopping distance.
    #[arg(long)]
    pub smin: bool,
    /// Compute girth and short-cycle counts.
    #[arg(long)]
    pub girth: bool,
    /// Compute the disjunct profile.
    #[arg(long)]
    pub disjunct: bool,
    /// Work budget per search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Kv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    #[command(flatten)]
    pub source: Source,
    /// Received word as a string of 0 and 1.
    #[arg(long)]
    pub word: String,
    #[arg(long, default_value_t = 1)]
    pub max_rounds: usize,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub source: Source,
    /// Crossover probabilities.
    #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
    pub p: Vec<f64>,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long, default_value_t = 10)]
    pub max_rounds: usize,
    /// Discard trials whose error weight exceeds this.
    #[arg(long)]
    pub max_error_weight: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: Source,
    /// Maximum number of error patterns.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Directory holding the fixture files.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Fixture directory shipped with the crate.
pub fn default_fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Parses `args` (program name first) and runs the command. Normal output
/// goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Generate(a) => cmd_generate(a, out, err),
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::Decode(a) => cmd_decode(a, out),
        Command::Simulate(a) => cmd_simulate(a, out),
        Command::VerifyGuarantee(a) => cmd_verify(a, out),
        Command::Reproduce(a) => cmd_reproduce(a, out),
    }
}

/// A built matrix with the family's rate bound, when it has one.
pub struct Built {
    pub matrix: BitMatrix,
    pub rate_bound: Option<Ratio<i64>>,
    pub warning: Option<String>,
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| failure(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(failure),
    }
}

fn read_file(p: &Path) -> Result<String, CliError> {
    fs::read_to_string(p).map_err(|e| failure(format!("{}: {e}", p.display())))
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            CliError::Usage(format!(
                "--{what} expects comma-separated integers, got {s:?}"
            ))
        })
}

/// `q = p^m` for a prime `p`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

fn field_for(q: u32) -> Result<FieldTable, CliError> {
    let (p, m) =
        prime_power(q).ok_or_else(|| CliError::Usage(format!("q={q} is not a prime power")))?;
    FieldTable::new(p, m).map_err(failure)
}

pub fn build_macula(d: usize, k: Option<usize>, n: usize) -> Result<Built, CliError> {
    let k = k.unwrap_or(d + 1);
    let spec = MaculaSpec::new(d, k, n).map_err(failure)?;
    Ok(Built {
        matrix: macula_matrix(&spec),
        rate_bound: (k == d + 1).then(|| macula_rate_bound(d, n)),
        warning: spec.warning(),
    })
}

pub fn build_fuhwang(design: &Path, r: Option<usize>) -> Result<Built, CliError> {
    let d = design_read(&read_file(design)?).map_err(failure)?;
    let r = r.unwrap_or(d.t().saturating_sub(1));
    let (t, k, v, steiner) = (d.t(), d.k(), d.v(), d.is_steiner());
    let spec = FuHwangSpec::new(d, r).map_err(failure)?;
    Ok(Built {
        matrix: fu_hwang_matrix(&spec, None).map_err(failure)?,
        rate_bound: (steiner && k == t + 1 && r + 1 == t).then(|| fu_hwang_rate_bound(t, v)),
        warning: None,
    })
}

fn build_code(code: QaryCode) -> Result<Built, CliError> {
    let (n, k, q) = (code.len(), code.dimension(), code.field().order() as u64);
    let spec = KautzSingletonSpec::new(code).map_err(failure)?;
    Ok(Built {
        matrix: kautz_singleton_matrix(&spec).map_err(failure)?,
        rate_bound: Some(ks_rate_bound(n, q, k)),
        warning: None,
    })
}

pub fn build_ks(q: u32, n: usize, k: usize) -> Result<Built, CliError> {
    let f = field_for(q)?;
    build_code(reed_solomon(&f, n, k, None).map_err(failure)?)
}

/// Generator text: one row per line, element indices separated by spaces.
pub fn build_ks_generator(q: u32, path: &Path) -> Result<Built, CliError> {
    let f = field_for(q)?;
    let text = read_file(path)?;
    let rows: Vec<Vec<usize>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_ascii_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()
        .map_err(|_| {
            failure(format!(
                "{}: generator entries must be integers",
                path.display()
            ))
        })?;
    build_code(QaryCode::from_element_indices(f, &rows).map_err(failure)?)
}

pub fn load_source(s: &Source) -> Result<Built, CliError> {
    if let Some(p) = &s.alist {
        let m = alist_read(&read_file(p)?).map_err(failure)?;
        return Ok(Built {
            matrix: m,
            rate_bound: None,
            warning: None,
        });
    }
    if let Some(spec) = &s.macula {
        return match *parse_list(spec, "macula")?.as_slice() {
            [d, n] => build_macula(d, None, n),
            [d, k, n] => build_macula(d, Some(k), n),
            _ => Err(CliError::Usage(format!(
                "--macula expects D,N or D,K,N, got {spec:?}"
            ))),
        };
    }
    if let Some(p) = &s.fuhwang {
        return build_fuhwang(p, None);
    }
    if let Some(spec) = &s.ks {
        return match parse_list(spec, "ks")?.as_slice() {
            &[q, n, k] => build_ks(
                u32::try_from(q).map_err(|_| CliError::Usage(format!("q={q} is too large")))?,
                n,
                k,
            ),
            _ => Err(CliError::Usage(format!("--ks expects Q,N,K, got {spec:?}"))),
        };
    }
    Err(CliError::Usage("no matrix source given".into()))
}

fn cmd_generate(a: GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let built = match &a.family {
        Family::Macula { d, k, n } => build_macula(*d, *k, *n)?,
        Family::Fuhwang { design, r } => build_fuhwang(design, *r)?,
        Family::Ks {
            q,
            rs_n,
            rs_k,
            generator,
        } => match (rs_n, rs_k, generator) {
            (Some(n), Some(k), None) => build_ks(*q, *n, *k)?,
            (None, None, Some(g)) => build_ks_generator(*q, g)?,
            _ => {
                return Err(CliError::Usage(
                    "ks needs either --rs-n and --rs-k or --generator".into(),
                ))
            }
        },
    };
    if let Some(w) = &built.warning {
        let _ = writeln!(err, "warning: {w}");
    }
    let m = &built.matrix;
    let prof = disjunct_profile(m, a.budget);
    let summary = format!(
        "rows={}\ncols={}\nones={}\nw_min={}\na_max={}\ndisjunct_formula={}\ndisjunct_verified={}\n",
        m.rows(),
        m.cols(),
        m.ones_count(),
        prof.w_min,
        prof.a_max,
        format_formula(prof.formula),
        format_verified(prof.verified),
    );
    match &a.out {
        Some(p) => {
            emit(out, Some(p), &alist_write(m))?;
            emit(out, None, &summary)
        }
        None => {
            emit(out, None, &alist_write(m))?;
            err.write_all(summary.as_bytes()).map_err(failure)
        }
    }
}

fn cmd_analyze(a: AnalyzeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let built = load_source(&a.source)?;
    let any = a.dmin || a.smin || a.girth || a.disjunct;
    let opts = ReportOptions {
        d_min: !any || a.dmin,
        s_min: !any || a.smin,
        girth: !any || a.girth,
        disjunct: !any || a.disjunct,
        budget: a.budget,
    };
    let report = AnalysisReport::build(&built.matrix, built.rate_bound, &opts);
    let text = match a.format {
        Format::Kv => report.to_kv(),
        Format::Csv => report.to_csv(),
    };
    emit(out, a.out.as_deref(), &text)
}

fn cmd_decode(a: DecodeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let built = load_source(&a.source)?;
    let word = BitVec::parse_binary(&a.word).ok_or_else(|| {
        CliError::Usage(format!(
            "--word must contain only 0 and 1, got {:?}",
            a.word
        ))
    })?;
    let r = iterate_bit_flip(&built.matrix, &word, a.max_rounds).map_err(failure)?;
    let flipped: Vec<String> = r.flipped.iter().map(|j| j.to_string()).collect();
    let text = format!(
        "output={}\nflipped={}\nflips={}\nrounds={}\nsyndrome_weight_before={}\nsyndrome_weight_after={}\ncodeword={}\n",
        r.output,
        flipped.join(","),
        r.flipped.len(),
        r.rounds,
        r.syndrome_weight_before,
        r.syndrome_weight_after,
        r.is_codeword(),
    );
    emit(out, None, &text)
}

fn cmd_simulate(a: SimulateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let built = load_source(&a.source)?;
    let mut text = format!("{}\n", CampaignSummary::CSV_HEADER);
    for &p in &a.p {
        let cfg = CampaignConfig {
            p,
            trials: a.trials,
            seed: a.seed,
            max_rounds: a.max_rounds,
            workers: a.workers,
            max_error_weight: a.max_error_weight,
        };
        let s = bsc_campaign(&built.matrix, &cfg).map_err(failure)?;
        text.push_str(&s.csv_row());
        text.push('\n');
    }
    emit(out, a.out.as_deref(), &text)
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let built = load_source(&a.source)?;
    match verify_tillich_guarantee(&built.matrix, a.budget).map_err(failure)? {
        TillichOutcome::Holds { radius, patterns } => emit(
            out,
            None,
            &format!("holds (radius {radius})\npatterns={patterns}\n"),
        ),
        TillichOutcome::Counterexample { radius, error } => {
            emit(
                out,
                None,
                &format!("fails (radius {radius})\ncounterexample={error:?}\n"),
            )?;
            Err(CliError::Mismatch(format!(
                "error pattern {error:?} is not corrected in one round"
            )))
        }
    }
}

fn cmd_reproduce(a: ReproduceArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let dir = a.fixtures.unwrap_or_else(default_fixtures);
    let rows = reproduce(&dir, a.budget).map_err(|e| match e {
        ReproduceError::MissingFixture(_) => failure(e),
    })?;
    emit(out, a.out.as_deref(), &render_table(&rows))?;
    let errors = rows.iter().filter(|r| r.status == Status::Error).count();
    let fails = rows.iter().filter(|r| r.status == Status::Fail).count();
    if errors > 0 {
        Err(CliError::Failure(format!(
            "{errors} claims could not be computed"
        )))
    } else if fails > 0 {
        Err(CliError::Mismatch(format!(
            "{fails} claims did not reproduce"
        )))
    } else {
        Ok(())
    }
}
