use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use arithper::permanent::{det_divfree, det_field, per};
use arithper::ring::Ring;
use arithper::sequences::{evaluate, SeqName};
use arithper::verifier::{self, find_check, Ctx, Kind, Params, Report, Tier};
use arithper::zoo::{build, Built, FamilySpec};
use arithper::Error;
use arithper_cli::output::{
    report_line, write_reports_csv, write_seq_csv, Output, ReportRow, SeqRow, Summary,
};
use arithper_cli::{parse_key_value, parse_range};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact permanents of structured matrices and a verification suite for
/// their closed forms and congruences.
#[derive(Parser)]
#[command(name = "arithper", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// Emit one JSON object.
    #[arg(long, conflicts_with = "csv", global = true)]
    json: bool,
    /// Emit CSV with a header row.
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run one check (or `all`) and report PASS/FAIL/SKIP per instance.
    Verify(VerifyArgs),
    /// Tabulate a sequence: T, c, cprime, d, s, sprime, t, tprime.
    Seq(SeqArgs),
    /// Collect evidence for a conjecture over a parameter range.
    Explore(ExploreArgs),
    /// Cross-check the permanent and determinant engines on random matrices.
    Selftest(SelftestArgs),
    /// Build a matrix from `family:key=value,...` and print it with its permanent.
    Matrix(MatrixArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id, a prefix such as `thper`, or `all`.
    id: String,
    #[arg(long, default_value = "fast")]
    tier: Tier,
    /// Conjecture failures also make the exit status nonzero.
    #[arg(long)]
    strict: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Any other parameter, e.g. `--param matrix=floor`.
    #[arg(long = "param", value_name = "KEY=VALUE", value_parser = parse_key_value)]
    params: Vec<(String, String)>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct SeqArgs {
    name: String,
    /// Inclusive index range `lo..hi`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    range: std::ops::RangeInclusive<i64>,
    /// Only odd indices.
    #[arg(long)]
    odd: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ExploreArgs {
    id: String,
    #[arg(long)]
    pmax: Option<i64>,
    #[arg(long)]
    nmax: Option<i64>,
    /// Inclusive range for the parameter `a`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    a: Option<std::ops::RangeInclusive<i64>>,
    #[arg(long)]
    strict: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random matrices per ring.
    #[arg(long, default_value_t = 200)]
    cases: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct MatrixArgs {
    spec: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let result = match cli.command {
        Command::Verify(a) => with_threads(a.common, || verify(&a, command)),
        Command::Seq(a) => with_threads(a.common, || seq(&a, command)),
        Command::Explore(a) => with_threads(a.common, || explore(&a, command)),
        Command::Selftest(a) => with_threads(a.common, || selftest(&a, command)),
        Command::Matrix(a) => matrix(&a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Run = Result<u8, Failure>;

fn with_threads(common: Common, f: impl FnOnce() -> Run + Send) -> Run {
    match common.threads {
        Some(0) => Err(Failure::Usage("--threads must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?
            .install(f),
        None => f(),
    }
}

fn stdout() -> BufWriter<io::StdoutLock<'static>> {
    BufWriter::new(io::stdout().lock())
}

fn emit_reports(common: Common, command: Vec<String>, reports: &[Report]) -> io::Result<Summary> {
    let rows: Vec<ReportRow> = reports.iter().map(ReportRow::from).collect();
    let ms: Vec<u64> = reports.iter().map(|r| r.elapsed_ms).collect();
    let summary = Summary::of(rows.iter().map(|r| r.status.as_str()));
    let mut out = stdout();
    if common.json {
        let mut o = Output::new(command, rows, ms);
        o.summary = Some(summary.clone());
        o.write_json(&mut out)?;
    } else if common.csv {
        write_reports_csv(&mut out, &rows, &ms)?;
    } else {
        for row in &rows {
            writeln!(out, "{}", report_line(row))?;
        }
    }
    out.flush()?;
    Ok(summary)
}

fn summary_line(s: &Summary, blocking: usize) -> String {
    format!(
        "{} instances: {} PASS, {} FAIL ({} blocking), {} SKIP",
        s.total, s.pass, s.fail, blocking, s.skip
    )
}

fn exit_status(reports: &[Report], strict: bool) -> (u8, usize) {
    let blocking = reports.iter().filter(|r| r.is_blocking(strict)).count();
    (if blocking > 0 { EXIT_FAIL } else { 0 }, blocking)
}

fn verify(a: &VerifyArgs, command: Vec<String>) -> Run {
    let ctx = Ctx::new(a.seed);
    let mut params = Params::new();
    for (key, value) in [("p", a.p), ("n", a.n), ("d", a.d)] {
        if let Some(v) = value {
            params.insert(key, v);
        }
    }
    if let Some(v) = &a.a {
        params.insert("a", v);
    }
    if let Some(v) = &a.x {
        params.insert("x", v);
    }
    for (k, v) in &a.params {
        params.insert(k, v);
    }
    let reports = if a.id == "all" {
        if !params.is_empty() {
            return Err(Failure::Usage(
                "`verify all` takes no check parameters".into(),
            ));
        }
        verifier::run_suite(a.tier, &ctx)
    } else if find_check(&a.id).is_ok() {
        verifier::run_check(&a.id, &params, a.tier, &ctx)?
    } else {
        let prefix = format!("{}.", a.id.trim_end_matches('.'));
        if !verifier::registry()
            .iter()
            .any(|c| c.id.starts_with(&prefix))
            || !params.is_empty()
        {
            return Err(Error::UnknownCheck(a.id.clone()).into());
        }
        verifier::run_ids(a.tier, &ctx, |c| c.id.starts_with(&prefix))
    };
    let summary = emit_reports(a.common, command, &reports)?;
    let (code, blocking) = exit_status(&reports, a.strict);
    if !a.common.json && !a.common.csv {
        println!("{}", summary_line(&summary, blocking));
    }
    Ok(code)
}

fn seq(a: &SeqArgs, command: Vec<String>) -> Run {
    let name: SeqName = a.name.parse()?;
    let indices: Vec<i64> = a.range.clone().filter(|n| !a.odd || n % 2 != 0).collect();
    let rows: Vec<(SeqRow, u64)> = indices
        .par_iter()
        .map(|&n| {
            let start = Instant::now();
            let row = match evaluate(name, n) {
                Ok(v) => Ok(SeqRow::value(&v)),
                Err(e @ (Error::InvalidArgument(_) | Error::SingularFamily { .. })) => {
                    Ok(SeqRow::skipped(name.as_str(), n, e.to_string()))
                }
                Err(e) => Err(e),
            };
            row.map(|r| (r, start.elapsed().as_millis() as u64))
        })
        .collect::<Result<_, Error>>()
        .map_err(|e| Failure::Io(io::Error::other(e.to_string())))?;
    let (rows, ms): (Vec<SeqRow>, Vec<u64>) = rows.into_iter().unzip();
    let mut out = stdout();
    if a.common.json {
        Output::new(command, rows, ms).write_json(&mut out)?;
    } else if a.common.csv {
        write_seq_csv(&mut out, &rows, &ms)?;
    } else {
        for r in &rows {
            match (&r.value, &r.reason) {
                (Some(v), _) => {
                    let tag = if r.is_integer == Some(true) {
                        ""
                    } else {
                        "  (not an integer)"
                    };
                    writeln!(out, "{}({}) = {v}{tag}", r.name, r.index)?
                }
                (None, reason) => writeln!(
                    out,
                    "{}({}) SKIP {}",
                    r.name,
                    r.index,
                    reason.as_deref().unwrap_or("")
                )?,
            }
        }
    }
    out.flush()?;
    Ok(0)
}

fn explore(a: &ExploreArgs, command: Vec<String>) -> Run {
    let check = find_check(&a.id)?;
    if !matches!(check.kind, Kind::Conjecture | Kind::Remark) {
        return Err(Failure::Usage(format!(
            "`{}` is a {}; explore takes a conjecture or remark id",
            a.id, check.kind
        )));
    }
    let below = |p: &Params, key: &str, max: Option<i64>| match (max, p.int(key)) {
        (Some(max), Ok(v)) => v <= max,
        _ => true,
    };
    let instances: Vec<Params> = (check.instances)(Tier::Full)
        .into_iter()
        .filter(|p| below(p, "p", a.pmax) && below(p, "n", a.nmax))
        .filter(|p| match (&a.a, p.int("a")) {
            (Some(range), Ok(v)) => range.contains(&v),
            _ => true,
        })
        .collect();
    let ctx = Ctx::new(a.seed);
    let reports: Vec<Report> = instances
        .par_iter()
        .map(|p| verifier::run_check(check.id, p, Tier::Full, &ctx))
        .collect::<Result<Vec<_>, Error>>()?
        .into_iter()
        .flatten()
        .collect();
    let summary = emit_reports(a.common, command, &reports)?;
    if !a.common.json && !a.common.csv {
        println!(
            "{}: {} instances, {} consistent, {} inconsistent, {} skipped",
            check.id, summary.total, summary.pass, summary.fail, summary.skip
        );
    }
    Ok(if a.strict && summary.fail > 0 {
        EXIT_FAIL
    } else {
        0
    })
}

fn selftest(a: &SelftestArgs, command: Vec<String>) -> Run {
    let reports = verifier::selftest(a.seed, a.cases);
    let summary = emit_reports(a.common, command, &reports)?;
    let (code, blocking) = exit_status(&reports, true);
    if !a.common.json && !a.common.csv {
        println!("{}", summary_line(&summary, blocking));
    }
    Ok(code)
}

fn matrix(a: &MatrixArgs) -> Run {
    let spec: FamilySpec = a.spec.parse()?;
    let built = build(&spec)?;
    let mut out = stdout();
    writeln!(out, "{spec} ({}x{})", built.n(), built.n())?;
    writeln!(out, "{}", built.render())?;
    let (p, d) = match &built {
        Built::Integer(m) => (render(m.ring(), per(m)?), render(m.ring(), det_divfree(m)?)),
        Built::QPoly(m) => (render(m.ring(), per(m)?), render(m.ring(), det_divfree(m)?)),
        Built::Rational(m) => (render(m.ring(), per(m)?), render(m.ring(), det_field(m)?)),
        Built::Cyclotomic(m, scale) => {
            writeln!(out, "scale: 2^{} * i^{}", scale.two, scale.i_pow)?;
            (render(m.ring(), per(m)?), render(m.ring(), det_field(m)?))
        }
    };
    writeln!(out, "per = {p}")?;
    writeln!(out, "det = {d}")?;
    out.flush()?;
    Ok(0)
}

fn render<R: Ring>(ring: &R, v: R::Elem) -> String {
    ring.render(&v)
}
