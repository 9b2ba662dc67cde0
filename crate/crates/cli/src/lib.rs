//! Command-line front end: table generation, verification suites, the
//! conjecture scan, and raw enumeration dumps.
//!
//! All output is buffered and byte-deterministic. Exit codes: 0 ok,
//! 1 verification failure, 2 usage error, 3 capacity exceeded.

mod table;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use fibcube::{
    build_graph, build_hasse, conjecture_boundary, conjecture_scan, h_edges_conv, h_edges_via_t,
    h_edges_weighted, h_fibonacci, h_lucas, m_edges_closed, m_edges_conjecture, m_edges_weighted,
    p_count, p_total, p_total_rec, q_count, q_total, q_total_rec, t_coeff,
    verify::{verify_all, verify_cubes, verify_cycle, verify_path},
    Enumerator, Error, ExactInt, GraphSpec, VerificationReport, DEFAULT_ENUM_LIMIT,
};
use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::str::FromStr;
use table::TableData;

pub mod exit_code {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CAPACITY: i32 = 3;
}

/// Runs the CLI against `args` (including argv[0]), writing to the given
/// streams, and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    exit_code::OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    exit_code::USAGE
                }
            }
        }
    };

    match dispatch(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Capacity(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit_code::USAGE,
            CliError::Capacity(_) => exit_code::CAPACITY,
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Capacity(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapacityExceeded { .. } => CliError::Capacity(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// An inclusive integer range: `a..b`, `..b` (from 0), or a single `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct RangeArg {
    start: u32,
    end: u32,
}

impl RangeArg {
    fn iter(&self) -> std::ops::RangeInclusive<u32> {
        self.start..=self.end
    }

    fn singleton(&self) -> Option<u32> {
        (self.start == self.end).then_some(self.start)
    }
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |part: &str| {
            part.parse::<u32>()
                .map_err(|_| format!("`{part}` is not a nonnegative integer"))
        };
        let (start, end) = match s.split_once("..") {
            Some((lo, hi)) => {
                if hi.is_empty() {
                    return Err("range needs an upper bound (use `a..b` or `..b`)".into());
                }
                let start = if lo.is_empty() { 0 } else { parse(lo)? };
                (start, parse(hi)?)
            }
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range: {start} > {end}"));
        }
        Ok(RangeArg { start, end })
    }
}

#[derive(Parser)]
#[command(
    name = "fibcube",
    version,
    about = "Exact counts and enumeration of independent subsets of powers of paths and cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of one counting quantity over h/n (or k/i) ranges.
    Table(TableArgs),
    /// Run the cross-checking suites and report failures.
    Verify(VerifyArgs),
    /// Scan for counterexamples to the M-edge convolution identity.
    Conjecture(ConjectureArgs),
    /// Enumerate one graph explicitly: subsets, census, Hasse diagram, or
    /// edge list.
    Enum(EnumArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Quantity to tabulate.
    #[arg(long, short = 'q', value_enum)]
    quantity: Quantity,
    /// Computation route; `auto` picks the quantity's primary route.
    #[arg(long, value_enum, default_value_t = Route::Auto)]
    route: Route,
    /// Row range of h (single value for by-size and T tables).
    #[arg(long = "h", value_name = "RANGE")]
    h: RangeArg,
    /// Column range of n (single value for T tables).
    #[arg(long = "n", value_name = "RANGE")]
    n: RangeArg,
    /// Subset-size range (by-size and T tables only).
    #[arg(long = "k", value_name = "RANGE")]
    k: Option<RangeArg>,
    /// Vertex-index range (T tables only).
    #[arg(long = "i", value_name = "RANGE")]
    i: Option<RangeArg>,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// h range to verify over (must start at 0).
    #[arg(long = "h", value_name = "RANGE", default_value = "0..10")]
    h: RangeArg,
    /// n range to verify over (must start at 0).
    #[arg(long = "n", value_name = "RANGE", default_value = "0..30")]
    n: RangeArg,
    /// Enumeration capacity for the brute-force oracle.
    #[arg(long, default_value_t = DEFAULT_ENUM_LIMIT)]
    limit: u32,
}

#[derive(Args)]
struct ConjectureArgs {
    /// h range to scan (must start at 0).
    #[arg(long = "h", value_name = "RANGE", default_value = "0..10")]
    h: RangeArg,
    /// n range to scan (must start at 0); cells with n > h are compared.
    #[arg(long = "n", value_name = "RANGE", default_value = "0..15")]
    n: RangeArg,
    /// Also list the excluded n = h boundary cells (informational; they
    /// are expected to disagree and never fail the scan).
    #[arg(long)]
    include_boundary: bool,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Vertex count.
    #[arg(long = "n")]
    n: u32,
    /// Power.
    #[arg(long = "h")]
    h: u32,
    #[arg(long, value_enum, default_value_t = Output::Subsets)]
    output: Output,
    /// Enumeration capacity limit.
    #[arg(long, default_value_t = DEFAULT_ENUM_LIMIT)]
    limit: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quantity {
    /// p_{n,k}: independent k-subsets of the path power.
    #[value(name = "p-nk")]
    PBySize,
    /// p_n: all independent subsets of the path power.
    #[value(name = "p-total")]
    PTotal,
    /// T_{k,i}: independent k-subsets through vertex i.
    #[value(name = "t")]
    TCoeff,
    /// H_n: Hasse-diagram edges for the path power.
    #[value(name = "h")]
    HEdges,
    /// q_{n,k}: independent k-subsets of the cycle power.
    #[value(name = "q-nk")]
    QBySize,
    /// q_n: all independent subsets of the cycle power.
    #[value(name = "q-total")]
    QTotal,
    /// M_n: Hasse-diagram edges for the cycle power.
    #[value(name = "m")]
    MEdges,
    /// The h-Fibonacci sequences.
    #[value(name = "h-fib")]
    HFib,
    /// The h-Lucas sequences.
    #[value(name = "h-lucas")]
    HLucas,
    /// The conjectured M-edge convolution table (0 at n <= h).
    #[value(name = "conjecture-m")]
    ConjectureM,
}

impl Quantity {
    fn name(&self) -> &'static str {
        match self {
            Quantity::PBySize => "p-nk",
            Quantity::PTotal => "p-total",
            Quantity::TCoeff => "t",
            Quantity::HEdges => "h",
            Quantity::QBySize => "q-nk",
            Quantity::QTotal => "q-total",
            Quantity::MEdges => "m",
            Quantity::HFib => "h-fib",
            Quantity::HLucas => "h-lucas",
            Quantity::ConjectureM => "conjecture-m",
        }
    }

    fn routes(&self) -> &'static [Route] {
        match self {
            Quantity::PBySize | Quantity::QBySize | Quantity::TCoeff => &[Route::Closed],
            Quantity::PTotal | Quantity::QTotal => &[Route::Closed, Route::Recurrence],
            Quantity::HEdges => &[Route::Weighted, Route::ViaT, Route::Convolution],
            Quantity::MEdges => &[Route::Weighted, Route::Closed, Route::Convolution],
            Quantity::HFib | Quantity::HLucas => &[Route::Recurrence],
            Quantity::ConjectureM => &[Route::Convolution],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Closed,
    Recurrence,
    Weighted,
    #[value(name = "via-t")]
    ViaT,
    Convolution,
    Auto,
}

impl Route {
    fn name(&self) -> &'static str {
        match self {
            Route::Closed => "closed",
            Route::Recurrence => "recurrence",
            Route::Weighted => "weighted",
            Route::ViaT => "via-t",
            Route::Convolution => "convolution",
            Route::Auto => "auto",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Path,
    Cycle,
    Cubes,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Path,
    Cycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Subsets,
    Census,
    Hasse,
    Edgelist,
}

fn dispatch(cli: &Cli) -> Result<(String, i32), CliError> {
    match &cli.command {
        Command::Table(args) => cmd_table(args).map(|text| (text, exit_code::OK)),
        Command::Verify(args) => cmd_verify(args),
        Command::Conjecture(args) => cmd_conjecture(args),
        Command::Enum(args) => cmd_enum(args).map(|text| (text, exit_code::OK)),
    }
}

fn k_limit(h: u32, n: u32) -> u32 {
    (n + h) / (h + 1)
}

fn resolve_route(quantity: Quantity, requested: Route) -> Result<Route, CliError> {
    let allowed = quantity.routes();
    match requested {
        Route::Auto => Ok(allowed[0]),
        r if allowed.contains(&r) => Ok(r),
        r => Err(CliError::usage(format!(
            "route `{}` does not compute quantity `{}` (valid: {})",
            r.name(),
            quantity.name(),
            allowed
                .iter()
                .map(|a| a.name())
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

fn reject_flag(flag: Option<RangeArg>, name: char, quantity: Quantity) -> Result<(), CliError> {
    if flag.is_some() {
        return Err(CliError::usage(format!(
            "--{name} does not apply to quantity `{}`",
            quantity.name()
        )));
    }
    Ok(())
}

fn cmd_table(args: &TableArgs) -> Result<String, CliError> {
    let quantity = args.quantity;
    let route = resolve_route(quantity, args.route)?;

    let data = match quantity {
        Quantity::PBySize | Quantity::QBySize => {
            reject_flag(args.i, 'i', quantity)?;
            let h = args.h.singleton().ok_or_else(|| {
                CliError::usage("by-size tables need a single --h value")
            })?;
            let k_range = args.k.unwrap_or(RangeArg {
                start: 0,
                end: k_limit(h, args.n.end),
            });
            let cell: fn(u32, u32, u32) -> ExactInt = match quantity {
                Quantity::PBySize => p_count,
                _ => q_count,
            };
            grid(quantity, route, 'k', k_range, 'n', args.n, |k, n| {
                Ok(cell(h, n, k))
            })?
        }
        Quantity::TCoeff => {
            let h = args.h.singleton().ok_or_else(|| {
                CliError::usage("T tables need a single --h value")
            })?;
            let n = args.n.singleton().ok_or_else(|| {
                CliError::usage("T tables need a single --n value")
            })?;
            if n == 0 {
                return Err(CliError::usage("T tables need n >= 1"));
            }
            let k_range = args.k.unwrap_or(RangeArg {
                start: 0,
                end: k_limit(h, n),
            });
            let i_range = args.i.unwrap_or(RangeArg { start: 1, end: n });
            grid(quantity, route, 'k', k_range, 'i', i_range, |k, i| {
                t_coeff(h, n, k, i).map_err(CliError::from)
            })?
        }
        Quantity::PTotal | Quantity::QTotal => {
            reject_flag(args.k, 'k', quantity)?;
            reject_flag(args.i, 'i', quantity)?;
            let is_path = quantity == Quantity::PTotal;
            let cell: fn(u32, u32) -> ExactInt = match (is_path, route) {
                (true, Route::Closed) => p_total,
                (true, _) => p_total_rec,
                (false, Route::Closed) => q_total,
                (false, _) => q_total_rec,
            };
            grid(quantity, route, 'h', args.h, 'n', args.n, |h, n| {
                Ok(cell(h, n))
            })?
        }
        Quantity::HEdges => {
            reject_flag(args.k, 'k', quantity)?;
            reject_flag(args.i, 'i', quantity)?;
            if route == Route::ViaT && args.n.start == 0 {
                return Err(CliError::usage(
                    "route `via-t` is defined for n >= 1; use --n 1..N or another route",
                ));
            }
            grid(quantity, route, 'h', args.h, 'n', args.n, |h, n| {
                Ok(match route {
                    Route::Weighted => h_edges_weighted(h, n),
                    Route::ViaT => h_edges_via_t(h, n)?,
                    _ => h_edges_conv(h, n),
                })
            })?
        }
        Quantity::MEdges => {
            reject_flag(args.k, 'k', quantity)?;
            reject_flag(args.i, 'i', quantity)?;
            if route != Route::Weighted && args.n.start <= args.h.end {
                return Err(CliError::usage(format!(
                    "route `{}` is defined for n > h; the request includes n={} at h={} \
                     (use --n {}..N or the weighted route)",
                    route.name(),
                    args.n.start,
                    args.h.end,
                    args.h.end + 1,
                )));
            }
            grid(quantity, route, 'h', args.h, 'n', args.n, |h, n| {
                Ok(match route {
                    Route::Weighted => m_edges_weighted(h, n),
                    Route::Closed => m_edges_closed(h, n)?,
                    _ => m_edges_conjecture(h, n)?,
                })
            })?
        }
        Quantity::HFib | Quantity::HLucas => {
            reject_flag(args.k, 'k', quantity)?;
            reject_flag(args.i, 'i', quantity)?;
            if args.n.start == 0 {
                return Err(CliError::usage(
                    "sequences are 1-indexed; use --n 1..N",
                ));
            }
            grid(quantity, route, 'h', args.h, 'n', args.n, |h, n| {
                Ok(match quantity {
                    Quantity::HFib => h_fibonacci(h, n)?,
                    _ => h_lucas(h, n)?,
                })
            })?
        }
        Quantity::ConjectureM => {
            reject_flag(args.k, 'k', quantity)?;
            reject_flag(args.i, 'i', quantity)?;
            grid(quantity, route, 'h', args.h, 'n', args.n, |h, n| {
                Ok(if n <= h {
                    ExactInt::from(0)
                } else {
                    m_edges_conjecture(h, n)?
                })
            })?
        }
    };

    Ok(match args.format {
        Format::Ascii => data.render_ascii(),
        Format::Csv => data.render_csv(),
        Format::Json => data.render_json(),
    })
}

fn grid(
    quantity: Quantity,
    route: Route,
    row_axis: char,
    row_range: RangeArg,
    col_axis: char,
    col_range: RangeArg,
    cell: impl Fn(u32, u32) -> Result<ExactInt, CliError>,
) -> Result<TableData, CliError> {
    let mut rows = Vec::new();
    for row in row_range.iter() {
        let mut cells = Vec::new();
        for col in col_range.iter() {
            cells.push(cell(row, col)?);
        }
        rows.push((row, cells));
    }
    Ok(TableData {
        quantity: quantity.name().into(),
        route: route.name().into(),
        row_axis,
        col_axis,
        col_values: col_range.iter().collect(),
        rows,
    })
}

fn require_zero_start(range: &RangeArg, flag: char) -> Result<(), CliError> {
    if range.start != 0 {
        return Err(CliError::usage(format!(
            "scans always start at 0; use --{flag} ..{} instead of --{flag} {}..{}",
            range.end, range.start, range.end
        )));
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, i32), CliError> {
    require_zero_start(&args.h, 'h')?;
    require_zero_start(&args.n, 'n')?;
    let enumerator = Enumerator::new(args.limit);
    let (h_max, n_max) = (args.h.end, args.n.end);

    let reports: Vec<VerificationReport> = match args.suite {
        Suite::Path => vec![verify_path(h_max, n_max, enumerator)],
        Suite::Cycle => vec![verify_cycle(h_max, n_max, enumerator)],
        Suite::Cubes => vec![verify_cubes(n_max, enumerator)],
        Suite::All => verify_all(h_max, n_max, enumerator),
    };

    let mut text = String::new();
    for report in &reports {
        text.push_str(&report.to_string());
    }
    let cases: u64 = reports.iter().map(|r| r.cases).sum();
    let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    let passed = failures == 0;
    text.push_str(&format!(
        "verify: {cases} cases, {failures} failures: {}\n",
        if passed { "pass" } else { "FAIL" }
    ));
    Ok((
        text,
        if passed {
            exit_code::OK
        } else {
            exit_code::VERIFY_FAILED
        },
    ))
}

fn cmd_conjecture(args: &ConjectureArgs) -> Result<(String, i32), CliError> {
    require_zero_start(&args.h, 'h')?;
    require_zero_start(&args.n, 'n')?;
    let mut report = conjecture_scan(args.h.end, args.n.end);
    if args.include_boundary {
        report.informational = conjecture_boundary(args.h.end, args.n.end);
    }
    let code = if report.passed() {
        exit_code::OK
    } else {
        exit_code::VERIFY_FAILED
    };
    Ok((report.to_string(), code))
}

fn cmd_enum(args: &EnumArgs) -> Result<String, CliError> {
    let enumerator = Enumerator::new(args.limit);
    if args.n > enumerator.limit() {
        return Err(Error::CapacityExceeded {
            n: args.n,
            limit: enumerator.limit(),
        }
        .into());
    }
    let spec = match args.family {
        Family::Path => GraphSpec::path(args.n, args.h),
        Family::Cycle => GraphSpec::cycle(args.n, args.h),
    };
    let graph = build_graph(&spec);

    let mut text = String::new();
    match args.output {
        Output::Subsets => {
            for set in enumerator.independent_sets(&graph)? {
                text.push_str(&set.to_string());
                text.push('\n');
            }
        }
        Output::Census => {
            let census = enumerator.census(&graph)?;
            let parts: Vec<String> = census
                .sizes()
                .map(|(k, count)| format!("{k}:{count}"))
                .collect();
            text.push_str(&format!("{{{}}}\n", parts.join(", ")));
        }
        Output::Hasse => {
            let sets = enumerator.independent_sets(&graph)?;
            let hasse = build_hasse(&sets).expect("enumeration is downward closed");
            text.push_str(&format!("elements {}\n", hasse.elements().len()));
            for set in hasse.elements() {
                text.push_str(&set.to_string());
                text.push('\n');
            }
            text.push_str(&format!("covers {}\n", hasse.cover_count()));
            for (lower, upper) in hasse.cover_sets() {
                text.push_str(&format!("{lower} < {upper}\n"));
            }
        }
        Output::Edgelist => {
            text.push_str(&graph.edge_list_text());
        }
    }
    Ok(text)
}
