use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use circan_core::verify::SweepTarget;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "circan",
    version,
    about = "Circulant graphs, their complements and closed-form checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Relative tolerance for floating-point comparisons, in (0, 1e-3].
    #[arg(long, global = true, value_parser = parse_tolerance)]
    pub tol: Option<f64>,

    /// Worker threads for sweeps (0 = all cores).
    #[arg(long, global = true, env = "CIRCAN_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distances, spectrum, forwarding values and all 17 indices of one graph.
    Analyze(AnalyzeArgs),
    /// Compare closed forms against brute force over a parameter range.
    Verify(VerifyArgs),
    /// Distance eigenvalues of a circulant.
    Spectrum(GraphArgs),
    /// Vertex and edge loads of a routing.
    Routing(AnalyzeArgs),
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Order of the circulant.
    #[arg(long, requires = "jumps")]
    pub n: Option<usize>,

    /// Jump set, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        requires = "n"
    )]
    pub jumps: Option<Vec<i64>>,

    /// Base of the multiplicative circulant C_{m^h}(1, m, ..., m^{h-1}).
    #[arg(long, requires = "h", conflicts_with_all = ["n", "jumps"])]
    pub m: Option<usize>,

    /// Number of jumps of the multiplicative circulant.
    #[arg(long, requires = "m")]
    pub h: Option<u32>,

    /// Edge-list fixture: header "n [one-indexed|zero-indexed]", then "u v" lines.
    #[arg(long, conflicts_with_all = ["n", "jumps", "m", "h"])]
    pub fixture: Option<PathBuf>,

    /// Analyze the complement instead.
    #[arg(long)]
    pub complement: bool,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub graph: GraphArgs,

    /// Routing fixture: one path per line, labelled like the graph fixture.
    #[arg(long)]
    pub routing: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// double-loop-half, double-loop-gen, c7, mc-2h, mc-gen, mc-23 or mc.
    #[arg(long, value_parser = parse_target)]
    pub family: SweepTarget,

    /// Range of k for double-loop-half, as lo:hi.
    #[arg(long, value_parser = parse_range::<usize>)]
    pub k: Option<RangeInclusive<usize>>,

    /// Range of n for double-loop-gen.
    #[arg(long, value_parser = parse_range::<usize>)]
    pub n: Option<RangeInclusive<usize>>,

    /// Range of a for double-loop-gen and c7.
    #[arg(long, value_parser = parse_range::<usize>)]
    pub a: Option<RangeInclusive<usize>>,

    /// Range of m for mc-gen.
    #[arg(long, value_parser = parse_range::<usize>)]
    pub m: Option<RangeInclusive<usize>>,

    /// Range of h for mc-2h and mc-gen.
    #[arg(long, value_parser = parse_range::<u32>)]
    pub h: Option<RangeInclusive<u32>>,

    /// Largest order m^h for the mc sweep.
    #[arg(long)]
    pub max_order: Option<usize>,
}

fn parse_tolerance(text: &str) -> Result<f64, String> {
    let tol: f64 = text.parse().map_err(|_| format!("not a number: {text}"))?;
    if tol > 0.0 && tol <= 1e-3 {
        Ok(tol)
    } else {
        Err(format!("tolerance must lie in (0, 1e-3], got {text}"))
    }
}

fn parse_target(text: &str) -> Result<SweepTarget, String> {
    SweepTarget::from_name(text).ok_or_else(|| format!("unknown family {text:?}"))
}

/// `"lo:hi"` or a single value.
fn parse_range<T: FromStr + PartialOrd + Copy>(text: &str) -> Result<RangeInclusive<T>, String> {
    let num = |s: &str| {
        s.trim()
            .parse::<T>()
            .map_err(|_| format!("bad range bound {s:?}"))
    };
    let (lo, hi) = match text.split_once(':') {
        Some((lo, hi)) => (num(lo)?, num(hi)?),
        None => (num(text)?, num(text)?),
    };
    if lo > hi {
        return Err(format!("empty range {text}"));
    }
    Ok(lo..=hi)
}
