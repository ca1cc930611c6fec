use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use trilat_core::contfrac::{convergent_series, CfSpec};
use trilat_core::formulas::{centre_side_gf, corner_gf, line_boundary_gfs, line_total_gf, triangle_total_gf};
use trilat_core::lattice::{count_walks_with, CountTable, DomainSpec, StepSet, DEFAULT_GUARD};
use trilat_core::series::json::{parse_rational, rational_to_string, series_from_json, series_to_json};
use trilat_core::series::pade::to_rational_series;
use trilat_core::series::{line_kernel_root, pade_reconstruct, triangle_kernel_root, CoeffRing, TruncSeries};
use trilat_core::suites::{run_suite, Grid, Suite};
use trilat_core::{Bivar, Error};

const GUARD_ENV: &str = "TRILAT_GUARD_LIMIT";

#[derive(Parser)]
#[command(name = "trilat", version, about = "Exact counts and generating functions for walks on simplices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count walks by dynamic programming
    Count(CountArgs),
    /// Expand a closed-form generating function
    Series(SeriesArgs),
    /// Run verification suites
    Verify(VerifyArgs),
    /// Recover a rational function from a series
    Reconstruct(ReconstructArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    d: usize,
    #[arg(long = "L")]
    side: u32,
    /// Comma-separated coordinates summing to L
    #[arg(long, value_delimiter = ',')]
    start: Vec<u32>,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    LineTotal,
    LineBoundary,
    TriangleTotal,
    Corner,
    CentreSide,
    CfConvergent,
    KernelRoot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Line,
    Triangle,
}

#[derive(Args)]
struct SeriesSource {
    #[arg(value_enum)]
    kind: SeriesKind,
    #[arg(long)]
    u: Option<u32>,
    #[arg(long)]
    v: Option<u32>,
    #[arg(long)]
    w: Option<u32>,
    #[arg(long = "L")]
    side: Option<u32>,
    #[arg(long, value_enum)]
    model: Option<ModelArg>,
    /// Exact rational weight, e.g. 1 or 3/2
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
}

#[derive(Args)]
struct SeriesArgs {
    #[command(flatten)]
    source: SeriesSource,
    #[arg(long, default_value_t = 10)]
    order: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    suite: String,
    #[arg(long = "Hmax")]
    h_max: Option<u32>,
    #[arg(long = "nmax")]
    n_max: Option<usize>,
    #[arg(long = "Lmax")]
    l_max: Option<u32>,
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ReconstructArgs {
    #[command(flatten)]
    source: SeriesSource,
    #[arg(long, default_value_t = 8)]
    deg_num: usize,
    #[arg(long, default_value_t = 8)]
    deg_den: usize,
    /// Defaults to deg_num + deg_den + 8
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Failure {
    Check(String),
    Usage(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceGuard { .. } => Failure::Guard(e.to_string()),
            Error::NoRationalMatch { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn guard_limit() -> Result<u128, Failure> {
    match std::env::var(GUARD_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| usage(format!("{GUARD_ENV} must be a non-negative integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| usage(e.to_string()))
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

fn count_csv(table: &CountTable) -> String {
    let mut s = String::from("n,p,q,count\n");
    for n in 0..=table.n_max() {
        for (p, c) in table.total_by_p(n).iter().enumerate() {
            if !c.is_zero() {
                s.push_str(&format!("{n},{p},{},{c}\n", n - p));
            }
        }
    }
    s
}

fn cmd_count(args: CountArgs) -> Outcome {
    let domain = DomainSpec::new(args.d, args.side)?;
    let start = domain.point(&args.start)?;
    let table = count_walks_with(domain, &StepSet::standard(args.d), &start, args.n, guard_limit()?)?;
    let text = match args.format {
        Format::Json => pretty(&table.to_json()),
        Format::Csv => count_csv(&table),
        Format::Plain => format!("{}\n", join(table.totals())),
    };
    emit(&text, &args.output)?;
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

/// `α+β`: symbolic, or a numeric value.
enum WeightSum {
    Symbolic,
    Int(BigInt),
    Rat(BigRational),
}

fn weight_sum(src: &SeriesSource, default_numeric: bool) -> Result<WeightSum, Failure> {
    let sum = match (&src.alpha, &src.beta) {
        (None, None) if default_numeric => BigRational::from_integer(BigInt::from(2)),
        (None, None) => return Ok(WeightSum::Symbolic),
        (Some(a), Some(b)) => parse_rational(a)? + parse_rational(b)?,
        _ => return Err(usage("--alpha and --beta must be given together")),
    };
    Ok(if sum.is_integer() {
        WeightSum::Int(sum.to_integer())
    } else {
        WeightSum::Rat(sum)
    })
}

fn need(v: Option<u32>, flag: &str) -> Result<u32, Failure> {
    v.ok_or_else(|| usage(format!("--{flag} is required")))
}

fn is_line(src: &SeriesSource) -> bool {
    matches!(src.kind, SeriesKind::LineTotal | SeriesKind::LineBoundary)
        || (src.kind == SeriesKind::KernelRoot && src.model == Some(ModelArg::Line))
}

/// Triangle-model series with `α+β = ws`.
fn triangle_series<R: CoeffRing>(src: &SeriesSource, order: usize, ws: &R) -> Result<TruncSeries<R>, Failure> {
    Ok(match src.kind {
        SeriesKind::TriangleTotal => {
            triangle_total_gf(need(src.u, "u")?, need(src.v, "v")?, need(src.w, "w")?, order, ws)
        }
        SeriesKind::Corner => corner_gf(need(src.side, "L")?, order, ws),
        SeriesKind::CentreSide => centre_side_gf(need(src.u, "u")?, order, ws),
        SeriesKind::CfConvergent => convergent_series(CfSpec::new(need(src.side, "L")?), order, ws),
        SeriesKind::KernelRoot => match src.model {
            Some(ModelArg::Triangle) => triangle_kernel_root(ws, order),
            _ => return Err(usage("--model line|triangle is required")),
        },
        SeriesKind::LineTotal | SeriesKind::LineBoundary => unreachable!("handled as line series"),
    })
}

fn line_series(src: &SeriesSource, order: usize) -> Result<Value, Failure> {
    if src.alpha.is_some() || src.beta.is_some() {
        return Err(usage("the line model takes no weights"));
    }
    Ok(match src.kind {
        SeriesKind::LineTotal => series_to_json(&line_total_gf::<BigInt>(need(src.u, "u")?, need(src.v, "v")?, order)),
        SeriesKind::LineBoundary => {
            let b = line_boundary_gfs::<BigInt>(need(src.u, "u")?, need(src.v, "v")?, order);
            json!({"g10": series_to_json(&b.g10), "g01": series_to_json(&b.g01)})
        }
        _ => series_to_json(&line_kernel_root::<BigInt>(order)),
    })
}

fn series_json(src: &SeriesSource, order: usize) -> Result<Value, Failure> {
    if is_line(src) {
        return line_series(src, order);
    }
    Ok(match weight_sum(src, false)? {
        WeightSum::Symbolic => series_to_json(&triangle_series(src, order, &Bivar::weight_sum())?),
        WeightSum::Int(ws) => series_to_json(&triangle_series(src, order, &ws)?),
        WeightSum::Rat(ws) => series_to_json(&triangle_series(src, order, &ws)?),
    })
}

fn plain_series(v: &Value) -> String {
    let line = |s: &Value| {
        let coeffs = s["coeffs"].as_array().expect("series json has coeffs");
        match s["ring"].as_str() {
            Some("bivar") => coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            _ => join(coeffs.iter().map(|c| c.as_str().unwrap_or_default().to_string())),
        }
    };
    match v.get("g10") {
        Some(g10) => format!("g10: {}\ng01: {}\n", line(g10), line(&v["g01"])),
        None => format!("{}\n", line(v)),
    }
}

fn cmd_series(args: SeriesArgs) -> Outcome {
    let v = series_json(&args.source, args.order)?;
    let text = match args.format {
        Format::Json => pretty(&v),
        Format::Plain => plain_series(&v),
        Format::Csv => return Err(usage("csv output is only available for count")),
    };
    emit(&text, &args.output)?;
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> Outcome {
    let suite: Suite = args.suite.parse()?;
    let grid = Grid {
        h_max: args.h_max,
        n_max: args.n_max,
        l_max: args.l_max,
        order: args.order,
    };
    let reports = run_suite(suite, &grid, guard_limit()?)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let bundle = json!({
        "suite": suite.name(),
        "status": if failed == 0 { "pass" } else { "fail" },
        "checks": reports.len(),
        "failed": failed,
        "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    });
    emit(&pretty(&bundle), &args.output)?;
    if failed == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(Failure::Check(format!("{failed} of {} checks failed", reports.len())))
    }
}

// ---------------------------------------------------------------------------
// reconstruct
// ---------------------------------------------------------------------------

fn rational_series(src: &SeriesSource, order: usize) -> Result<TruncSeries<BigRational>, Failure> {
    if is_line(src) {
        let v = line_series(src, order)?;
        if v.get("g10").is_some() {
            return Err(usage("line-boundary yields two series and cannot be reconstructed"));
        }
        let s: TruncSeries<BigInt> = series_from_json(&v)?;
        return Ok(to_rational_series(&s));
    }
    Ok(match weight_sum(src, true)? {
        WeightSum::Int(ws) => to_rational_series(&triangle_series(src, order, &ws)?),
        WeightSum::Rat(ws) => triangle_series(src, order, &ws)?,
        WeightSum::Symbolic => unreachable!("numeric weights are defaulted"),
    })
}

fn cmd_reconstruct(args: ReconstructArgs) -> Outcome {
    let order = args.order.unwrap_or(args.deg_num + args.deg_den + 8);
    let a = rational_series(&args.source, order)?;
    let f = pade_reconstruct(&a, args.deg_num, args.deg_den)?;
    let poly = |c: &[BigRational]| c.iter().map(|q| Value::String(show_q(q))).collect::<Vec<_>>();
    let out = json!({
        "numerator": poly(f.numerator()),
        "denominator": poly(f.denominator()),
        "deg_num": f.deg_num(),
        "deg_den": f.deg_den(),
        "order": order,
        "display": f.to_string(),
    });
    emit(&pretty(&out), &args.output)?;
    Ok(ExitCode::SUCCESS)
}

fn show_q(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        rational_to_string(q)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count(a) => cmd_count(a),
        Command::Series(a) => cmd_series(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Reconstruct(a) => cmd_reconstruct(a),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Check(msg)) => {
            eprintln!("trilat: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("trilat: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("trilat: {msg}");
            ExitCode::from(3)
        }
    }
}
