//! The `cyclorex` command line.
//!
//! Each subcommand is a thin adapter over one library analysis. Exit codes
//! are a stable contract for scripts:
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success / affirmative verdict             |
//! | 1    | negative verdict (not periodic, no cover) |
//! | 2    | usage or parameter error                  |
//! | 3    | I/O or parse error                        |

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bench::{self, Family, Operation};
use crate::cover::{self, CoverReport, Interval};
use crate::error::Error;
use crate::oracle;
use crate::period::{self, CyclicPeriod};
use crate::runs::{self, Run, Witness};
use crate::text::{self, RotationShift, Text};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Inputs longer than this are refused by `--naive`.
pub const NAIVE_MAX_LEN: usize = 2000;

#[derive(Debug, Parser)]
#[command(
    name = "cyclorex",
    version,
    about = "Cyclic periodicity, runs and covers of strings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test k-cyclic periodicity and print the decomposition (needs --k).
    Period(AnalysisArgs),
    /// List every cyclic period (k, l) with k * l = n.
    Periods(AnalysisArgs),
    /// Cyclic-periodic array over all prefixes.
    PeriodArray(AnalysisArgs),
    /// Maximal cyclic periodic factors, optionally for one block length.
    Runs(AnalysisArgs),
    /// Cover report for the prefix of length --k.
    Cover(AnalysisArgs),
    /// List every proper cyclic cover length.
    Covers(AnalysisArgs),
    /// Least rotation of the input.
    Canonical(AnalysisArgs),
    /// Time analyses on generated inputs and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Literal input string.
    #[arg(value_name = "STRING")]
    pub string: Option<String>,

    /// Plain-text file holding the string (one trailing newline allowed).
    #[arg(long, value_name = "FILE", conflicts_with_all = ["string", "fasta"])]
    pub input: Option<PathBuf>,

    /// FASTA file; the first record is used unless --record is given.
    #[arg(long, value_name = "FILE", conflicts_with = "string")]
    pub fasta: Option<PathBuf>,

    /// Identifier of the FASTA record to analyse.
    #[arg(long, value_name = "ID", requires = "fasta")]
    pub record: Option<String>,

    /// Keep FASTA sequence case as written.
    #[arg(long)]
    pub no_uppercase: bool,

    /// Reject FASTA sequences containing symbols other than ACGT.
    #[arg(long)]
    pub strict_dna: bool,

    /// Longest accepted sequence.
    #[arg(long, value_name = "N", default_value_t = 10_000_000)]
    pub max_len: usize,
}

#[derive(Debug, Clone, Args)]
pub struct AnalysisArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Block length (period, runs) or cover length (cover).
    #[arg(long, short)]
    pub k: Option<usize>,

    /// Emit one JSON document instead of text.
    #[arg(long)]
    pub json: bool,

    /// Re-run the analysis with the brute-force oracle and report agreement.
    #[arg(long)]
    pub naive: bool,

    /// Drop trivial results (single-block periods).
    #[arg(long)]
    pub nontrivial: bool,

    /// Rotate the input by this shift (1 = unchanged) before analysis.
    #[arg(long, value_name = "D")]
    pub rotate: Option<usize>,

    /// Fill `elapsed_ms` with the measured wall time.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Comma-separated input lengths.
    #[arg(long, value_delimiter = ',', default_values_t = [1000usize, 2000, 4000])]
    pub sizes: Vec<usize>,

    /// Comma-separated families: random, unary, k-periodic, de-bruijn.
    #[arg(long, value_delimiter = ',', default_value = "random")]
    pub family: Vec<Family>,

    /// Comma-separated operations (default: all).
    #[arg(long, value_delimiter = ',')]
    pub ops: Vec<Operation>,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Block length for the k-periodic family and the k_period operation.
    #[arg(long, short, default_value_t = 4)]
    pub k: usize,

    /// Alphabet size for random families.
    #[arg(long, default_value_t = 2)]
    pub alphabet: u8,

    /// Repetitions per measurement; the median is reported.
    #[arg(long, default_value_t = 1)]
    pub repeat: usize,

    /// Skip quadratic operations above this length.
    #[arg(long, default_value_t = 10_000)]
    pub max_quadratic: usize,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("input is empty")]
    Empty,
    #[error("whitespace at position {position} inside the input")]
    InteriorWhitespace { position: usize },
    #[error("malformed FASTA at line {line}: {reason}")]
    MalformedFasta { line: usize, reason: String },
    #[error("no FASTA record with identifier `{0}`")]
    RecordNotFound(String),
    #[error("sequence of length {len} exceeds the limit of {max}")]
    TooLong { len: usize, max: usize },
    #[error("symbol {symbol:?} at position {position} is not A, C, G or T")]
    NonDna { position: usize, symbol: char },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parameter(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parameter(_) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) | CliError::Output(_) => EXIT_INPUT,
        }
    }
}

/// One FASTA record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    pub id: String,
    pub description: String,
    pub sequence: Vec<u8>,
}

/// Parses `>`-headed records with line-folded sequences. Blank lines and
/// `;` comment lines are skipped.
pub fn parse_fasta(data: &[u8]) -> Result<Vec<FastaRecord>, InputError> {
    let mut records: Vec<FastaRecord> = Vec::new();
    for (idx, raw) in data.split(|&b| b == b'\n').enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix(b"\r").unwrap_or(raw);
        if line.iter().all(u8::is_ascii_whitespace) || line.starts_with(b";") {
            continue;
        }
        if let Some(header) = line.strip_prefix(b">") {
            let header = String::from_utf8_lossy(header).trim().to_string();
            let (id, description) = match header.split_once(char::is_whitespace) {
                Some((id, rest)) => (id.to_string(), rest.trim().to_string()),
                None => (header.clone(), String::new()),
            };
            if id.is_empty() {
                return Err(InputError::MalformedFasta {
                    line: line_no,
                    reason: "header without identifier".into(),
                });
            }
            records.push(FastaRecord {
                id,
                description,
                sequence: Vec::new(),
            });
            continue;
        }
        let Some(record) = records.last_mut() else {
            return Err(InputError::MalformedFasta {
                line: line_no,
                reason: "sequence data before the first '>' header".into(),
            });
        };
        let seq = line.trim_ascii();
        if seq.iter().any(u8::is_ascii_whitespace) {
            return Err(InputError::MalformedFasta {
                line: line_no,
                reason: "whitespace inside a sequence line".into(),
            });
        }
        record.sequence.extend_from_slice(seq);
    }
    if records.is_empty() {
        return Err(InputError::MalformedFasta {
            line: 1,
            reason: "no records".into(),
        });
    }
    if let Some(empty) = records.iter().find(|r| r.sequence.is_empty()) {
        return Err(InputError::MalformedFasta {
            line: 0,
            reason: format!("record `{}` has no sequence", empty.id),
        });
    }
    Ok(records)
}

/// Plain-text input: strips one trailing line terminator and rejects any
/// other whitespace.
pub fn parse_plain(data: &[u8]) -> Result<Vec<u8>, InputError> {
    let body = data
        .strip_suffix(b"\r\n")
        .or_else(|| data.strip_suffix(b"\n"))
        .unwrap_or(data);
    if body.is_empty() {
        return Err(InputError::Empty);
    }
    if let Some(p) = body.iter().position(u8::is_ascii_whitespace) {
        return Err(InputError::InteriorWhitespace { position: p + 1 });
    }
    Ok(body.to_vec())
}

fn read(path: &Path) -> Result<Vec<u8>, InputError> {
    std::fs::read(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Resolves the input arguments to a text.
pub fn load_input(args: &InputArgs) -> Result<Text, CliError> {
    let bytes = if let Some(path) = &args.fasta {
        let records = parse_fasta(&read(path)?)?;
        let record = match &args.record {
            Some(id) => records
                .into_iter()
                .find(|r| &r.id == id)
                .ok_or_else(|| InputError::RecordNotFound(id.clone()))?,
            None => records.into_iter().next().expect("at least one record"),
        };
        let mut seq = record.sequence;
        if !args.no_uppercase {
            seq.make_ascii_uppercase();
        }
        if args.strict_dna {
            if let Some(p) = seq.iter().position(|c| !b"ACGTacgt".contains(c)) {
                return Err(InputError::NonDna {
                    position: p + 1,
                    symbol: seq[p] as char,
                }
                .into());
            }
        }
        seq
    } else if let Some(path) = &args.input {
        parse_plain(&read(path)?)?
    } else if let Some(s) = &args.string {
        s.as_bytes().to_vec()
    } else {
        return Err(CliError::Usage(
            "no input: pass a STRING, --input FILE or --fasta FILE".into(),
        ));
    };
    if bytes.len() > args.max_len {
        return Err(InputError::TooLong {
            len: bytes.len(),
            max: args.max_len,
        }
        .into());
    }
    Ok(Text::new(bytes)?)
}

/// The structured document printed by `--json`.
#[derive(Debug, Serialize)]
pub struct Report {
    pub analysis: &'static str,
    pub n: usize,
    pub alphabet_size: usize,
    pub result: Outcome,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Period(PeriodResult),
    Periods(PeriodsResult),
    PeriodArray(PeriodArrayResult),
    Runs(RunsResult),
    Cover(CoverResult),
    Covers(CoversResult),
    Canonical(CanonicalResult),
}

#[derive(Debug, Serialize)]
pub struct PeriodResult {
    pub k: usize,
    pub periodic: bool,
    pub decomposition: Option<DecompositionView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct DecompositionView {
    pub block_len: usize,
    pub block_count: usize,
    pub shifts: Vec<RotationShift>,
    pub blocks: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct PeriodsResult {
    pub periods: Vec<CyclicPeriod>,
    pub smallest: CyclicPeriod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct PeriodArrayResult {
    pub array: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct RunView {
    pub interval: Interval,
    pub witnesses: Vec<Witness>,
}

impl From<&Run> for RunView {
    fn from(r: &Run) -> Self {
        RunView {
            interval: Interval::new(r.start, r.end),
            witnesses: r.witnesses.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunsResult {
    pub k: Option<usize>,
    pub runs: Vec<RunView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct CoverResult {
    #[serde(flatten)]
    pub report: CoverReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct CoversResult {
    pub covers: Vec<usize>,
    pub smallest: Option<usize>,
    /// The whole string, always a cover of itself.
    pub trivial_cover: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct CanonicalResult {
    pub canonical: String,
    pub shift: RotationShift,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

impl Outcome {
    /// Exit status implied by the result.
    pub fn verdict(&self) -> i32 {
        let affirmative = match self {
            Outcome::Period(r) => r.periodic,
            Outcome::Periods(r) => !r.periods.is_empty(),
            Outcome::PeriodArray(_) | Outcome::Canonical(_) => true,
            Outcome::Runs(r) => !r.runs.is_empty(),
            Outcome::Cover(r) => r.report.is_cover,
            Outcome::Covers(r) => !r.covers.is_empty(),
        };
        if affirmative {
            EXIT_OK
        } else {
            EXIT_NEGATIVE
        }
    }

    fn oracle_agrees(&self) -> Option<bool> {
        match self {
            Outcome::Period(r) => r.oracle_agrees,
            Outcome::Periods(r) => r.oracle_agrees,
            Outcome::PeriodArray(r) => r.oracle_agrees,
            Outcome::Runs(r) => r.oracle_agrees,
            Outcome::Cover(r) => r.oracle_agrees,
            Outcome::Covers(r) => r.oracle_agrees,
            Outcome::Canonical(r) => r.oracle_agrees,
        }
    }
}

fn lossy(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

fn require_k(k: Option<usize>, what: &str) -> Result<usize, CliError> {
    k.ok_or_else(|| CliError::Usage(format!("{what} needs --k")))
}

/// Runs one analysis subcommand on an already loaded text.
pub fn analyse(name: &'static str, x: &Text, args: &AnalysisArgs) -> Result<Outcome, CliError> {
    if args.naive && x.len() > NAIVE_MAX_LEN {
        return Err(CliError::Usage(format!(
            "--naive refuses inputs longer than {NAIVE_MAX_LEN} (got {})",
            x.len()
        )));
    }
    let naive = args.naive;
    let outcome = match name {
        "period" => {
            let k = require_k(args.k, "period")?;
            let d = period::k_cyclic_decompose(x, k)?;
            let oracle_agrees =
                naive.then(|| oracle::naive_k_cyclic(x, k).ok() == Some(d.is_some()));
            Outcome::Period(PeriodResult {
                k,
                periodic: d.is_some(),
                decomposition: d.map(|d| DecompositionView {
                    block_len: d.block_len,
                    block_count: d.block_count,
                    blocks: d.blocks(x).map(lossy).collect(),
                    shifts: d.shifts,
                }),
                oracle_agrees,
            })
        }
        "periods" => {
            let all = period::all_cyclic_periods(x);
            let oracle_agrees = naive.then(|| {
                let pairs: Vec<(usize, usize)> = all.iter().map(|&p| p.into()).collect();
                pairs == oracle::naive_all_cyclic_periods(x)
            });
            let smallest = all[0];
            let periods = all
                .into_iter()
                .filter(|p| !args.nontrivial || p.block_count >= 2)
                .collect();
            Outcome::Periods(PeriodsResult {
                periods,
                smallest,
                oracle_agrees,
            })
        }
        "period-array" => {
            let array = period::cyclic_period_array(x).into_vec();
            let oracle_agrees = naive.then(|| array == oracle::naive_cyclic_period_array(x));
            Outcome::PeriodArray(PeriodArrayResult {
                array,
                oracle_agrees,
            })
        }
        "runs" => {
            let found = match args.k {
                Some(k) => runs::maximal_k_cyclic_runs(x, k)?,
                None => runs::maximal_cyclic_runs(x),
            };
            let oracle_agrees = naive.then(|| {
                let got: Vec<(usize, usize)> = found.iter().map(Run::interval).collect();
                let want = match args.k {
                    Some(k) => oracle::naive_maximal_k_runs(x, k),
                    None => oracle::naive_maximal_runs(x),
                };
                got == want
            });
            Outcome::Runs(RunsResult {
                k: args.k,
                runs: found.iter().map(RunView::from).collect(),
                oracle_agrees,
            })
        }
        "cover" => {
            let k = require_k(args.k, "cover")?;
            let report = cover::k_cyclic_cover_report(x, k)?;
            let oracle_agrees = naive.then(|| {
                let (occ, mask) = oracle::naive_cover_windows(x, k);
                occ == report.occurrences && mask.iter().all(|&c| c) == report.is_cover
            });
            Outcome::Cover(CoverResult {
                report,
                oracle_agrees,
            })
        }
        "covers" => {
            let covers = cover::all_cyclic_covers(x);
            let oracle_agrees = naive.then(|| covers == oracle::naive_covers(x));
            Outcome::Covers(CoversResult {
                smallest: covers.first().copied(),
                covers,
                trivial_cover: x.len(),
                oracle_agrees,
            })
        }
        "canonical" => {
            let (canonical, shift) = text::canonical_rotation(x)?;
            let oracle_agrees = naive.then(|| {
                oracle::naive_canonical_rotation(x).ok() == Some((canonical.clone(), shift.get()))
            });
            Outcome::Canonical(CanonicalResult {
                canonical: lossy(&canonical),
                shift,
                oracle_agrees,
            })
        }
        other => return Err(CliError::Usage(format!("unknown analysis `{other}`"))),
    };
    Ok(outcome)
}

fn render_human(report: &Report, out: &mut impl Write) -> std::io::Result<()> {
    writeln!(
        out,
        "{}: n = {}, alphabet size = {}",
        report.analysis, report.n, report.alphabet_size
    )?;
    match &report.result {
        Outcome::Period(r) => match &r.decomposition {
            Some(d) => {
                writeln!(out, "{}-cyclic periodic with {} blocks", r.k, d.block_count)?;
                for (i, (b, s)) in d.blocks.iter().zip(&d.shifts).enumerate() {
                    writeln!(out, "  u{} = {b} (shift {s})", i + 1)?;
                }
            }
            None => writeln!(out, "not {}-cyclic periodic", r.k)?,
        },
        Outcome::Periods(r) => {
            for p in &r.periods {
                writeln!(out, "  k = {}, l = {}", p.block_len, p.block_count)?;
            }
            writeln!(
                out,
                "smallest cyclic period: k = {}, l = {}",
                r.smallest.block_len, r.smallest.block_count
            )?;
        }
        Outcome::PeriodArray(r) => {
            let cells: Vec<String> = r.array.iter().map(usize::to_string).collect();
            writeln!(out, "A = [{}]", cells.join(", "))?;
        }
        Outcome::Runs(r) => {
            if r.runs.is_empty() {
                writeln!(out, "no cyclic periodic factors")?;
            }
            for run in &r.runs {
                let ws: Vec<String> = run
                    .witnesses
                    .iter()
                    .map(|w| format!("k={} x{}", w.block_len, w.block_count))
                    .collect();
                writeln!(
                    out,
                    "  [{}, {}] {}",
                    run.interval.start,
                    run.interval.end,
                    ws.join(", ")
                )?;
            }
        }
        Outcome::Cover(r) => {
            let rep = &r.report;
            let verdict = if rep.is_cover {
                "covers"
            } else {
                "does not cover"
            };
            writeln!(
                out,
                "{} (k' = {}) {verdict} the input",
                lossy(&rep.cover_string),
                rep.cover_len
            )?;
            writeln!(out, "  occurrences: {:?}", rep.occurrences)?;
            for g in &rep.gaps {
                writeln!(out, "  gap: [{}, {}]", g.start, g.end)?;
            }
        }
        Outcome::Covers(r) => {
            writeln!(out, "proper cyclic covers: {:?}", r.covers)?;
            match r.smallest {
                Some(k) => writeln!(out, "smallest: {k}")?,
                None => writeln!(out, "smallest: none (only the trivial cover)")?,
            }
        }
        Outcome::Canonical(r) => {
            writeln!(out, "{} (shift {})", r.canonical, r.shift)?;
        }
    }
    if let Some(agrees) = report.result.oracle_agrees() {
        writeln!(out, "oracle agrees: {agrees}")?;
    }
    if let Some(ms) = report.elapsed_ms {
        writeln!(out, "elapsed: {ms:.3} ms")?;
    }
    Ok(())
}

fn run_analysis(
    name: &'static str,
    args: &AnalysisArgs,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<i32, CliError> {
    let mut x = load_input(&args.input)?;
    if let Some(d) = args.rotate {
        let shift = RotationShift::new(d)?;
        x = Text::new(text::rotate(&x, shift)?)?;
    }
    let started = Instant::now();
    let result = analyse(name, &x, args)?;
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    if result.oracle_agrees() == Some(false) {
        writeln!(err, "warning: oracle disagrees with the fast analysis")?;
    }
    let code = result.verdict();
    let report = Report {
        analysis: name,
        n: x.len(),
        alphabet_size: x.alphabet_size(),
        result,
        elapsed_ms: args.timing.then_some(elapsed),
    };
    if args.json {
        serde_json::to_writer(&mut *out, &report).map_err(std::io::Error::from)?;
        writeln!(out)?;
    } else {
        render_human(&report, out)?;
    }
    Ok(code)
}

fn run_bench(
    args: &BenchArgs,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<i32, CliError> {
    if args.sizes.contains(&0) {
        return Err(CliError::Usage("sizes must be positive".into()));
    }
    let ops: Vec<Operation> = if args.ops.is_empty() {
        Operation::ALL.to_vec()
    } else {
        args.ops.clone()
    };
    writeln!(out, "family,n,operation,wall_ms")?;
    for &family in &args.family {
        for &n in &args.sizes {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let x = bench::generate(family, n, args.k, args.alphabet, &mut rng);
            for &op in &ops {
                if op.is_quadratic() && n > args.max_quadratic {
                    writeln!(err, "skipping {op} at n = {n} (above --max-quadratic)")?;
                    continue;
                }
                let ms = bench::median_time_ms(op, &x, args.k, args.repeat);
                writeln!(out, "{family},{n},{op},{ms:.3}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `argv` and runs the command; returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Period(a) => run_analysis("period", a, out, err),
        Command::Periods(a) => run_analysis("periods", a, out, err),
        Command::PeriodArray(a) => run_analysis("period-array", a, out, err),
        Command::Runs(a) => run_analysis("runs", a, out, err),
        Command::Cover(a) => run_analysis("cover", a, out, err),
        Command::Covers(a) => run_analysis("covers", a, out, err),
        Command::Canonical(a) => run_analysis("canonical", a, out, err),
        Command::Bench(b) => run_bench(b, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("cyclorex").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, lossy(&out), lossy(&err))
    }

    #[test]
    fn fasta_parsing() {
        let recs = parse_fasta(b">seq1 first\nACGT\nacgt\n\n>seq2\r\nTT\r\n").unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].id, "seq1");
        assert_eq!(recs[0].description, "first");
        assert_eq!(recs[0].sequence, b"ACGTacgt");
        assert_eq!(recs[1].sequence, b"TT");

        assert!(matches!(
            parse_fasta(b"ACGT\n>x\nA\n"),
            Err(InputError::MalformedFasta { line: 1, .. })
        ));
        assert!(parse_fasta(b"").is_err());
        assert!(parse_fasta(b">x\n>y\nA\n").is_err());
        assert!(parse_fasta(b">x\nAC GT\n").is_err());
    }

    #[test]
    fn plain_parsing() {
        assert_eq!(parse_plain(b"abc\n").unwrap(), b"abc");
        assert_eq!(parse_plain(b"abc\r\n").unwrap(), b"abc");
        assert_eq!(parse_plain(b"abc").unwrap(), b"abc");
        assert!(matches!(
            parse_plain(b"abc\n\n"),
            Err(InputError::InteriorWhitespace { .. })
        ));
        assert!(matches!(
            parse_plain(b"ab c"),
            Err(InputError::InteriorWhitespace { position: 3 })
        ));
        assert!(matches!(parse_plain(b"\n"), Err(InputError::Empty)));
    }

    #[test]
    fn period_command() {
        let (code, out, _) = run_str(&["period", "aaabaabaabaabaaa", "--k", "4"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("4-cyclic periodic with 4 blocks"), "{out}");
        assert_eq!(run_str(&["period", "a", "--k", "1"]).0, EXIT_OK);
        assert_eq!(run_str(&["period", "aababa", "--k", "2"]).0, EXIT_NEGATIVE);
        assert_eq!(run_str(&["period", "aababa", "--k", "9"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["period", "aababa"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["period", "", "--k", "1"]).0, EXIT_USAGE);
    }

    #[test]
    fn other_commands() {
        let (code, out, _) = run_str(&["covers", "ababbaba", "--json"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains(r#""covers":[2,4,5,7]"#), "{out}");
        assert_eq!(run_str(&["covers", "abc"]).0, EXIT_NEGATIVE);

        let (_, out, _) = run_str(&["period-array", "aababa", "--json", "--naive"]);
        assert!(out.contains(r#""array":[1,2,1,1,1,2]"#), "{out}");
        assert!(out.contains(r#""oracle_agrees":true"#), "{out}");

        let (code, out, _) = run_str(&["runs", "aaaabababaaa", "--json"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains(r#""interval":[3,11]"#), "{out}");
        assert_eq!(run_str(&["runs", "abcd"]).0, EXIT_NEGATIVE);

        let (code, out, _) = run_str(&["periods", "aaaa", "--json", "--nontrivial"]);
        assert_eq!(code, EXIT_OK);
        assert!(
            !out.contains(r#"{"block_len":4,"block_count":1}]"#),
            "{out}"
        );
        assert_eq!(
            run_str(&["periods", "abc", "--nontrivial"]).0,
            EXIT_NEGATIVE
        );

        let (_, out, _) = run_str(&["canonical", "baaa"]);
        assert!(out.contains("aaab (shift 2)"), "{out}");
    }

    #[test]
    fn rotate_flag() {
        // c_2(aaabaaba) = aabaabaa, least rotation aaaabaab starts at 7
        let (code, out, _) = run_str(&["canonical", "aaabaaba", "--rotate", "2", "--json"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains(r#""canonical":"aaaabaab","shift":7"#), "{out}");
        assert_eq!(
            run_str(&["canonical", "abc", "--rotate", "4"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_str(&["canonical", "abc", "--rotate", "0"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn json_has_stable_keys() {
        let (_, out, _) = run_str(&["cover", "aababaa", "--k", "4", "--json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(
            keys,
            ["alphabet_size", "analysis", "elapsed_ms", "n", "result"]
        );
        assert_eq!(v["result"]["occurrences"], serde_json::json!([1, 4]));
        assert!(v["elapsed_ms"].is_null());
    }

    #[test]
    fn naive_guard() {
        let long = "a".repeat(NAIVE_MAX_LEN + 1);
        assert_eq!(run_str(&["covers", &long, "--naive"]).0, EXIT_USAGE);
    }
}
