use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use umfb::MultiIndex;

fn parse_index(s: &str) -> Result<MultiIndex, String> {
    if s.contains(char::is_whitespace) {
        return Err("use comma-separated integers without spaces, e.g. 2,1".into());
    }
    s.parse().map_err(|e: umfb::Error| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "umfb", version, about = "Multivariate Faà di Bruno formulas in collected form")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the i-th derivative of F(G_1(t), ..., G_n(t)).
    Compute(ComputeArgs),
    /// List the partitions of a multi-index.
    Partitions(PartitionsArgs),
    /// Compare the partition formula with the repeated chain rule.
    Verify(VerifyArgs),
    /// Term counts and timings, as CSV.
    Bench(BenchArgs),
    /// Convert a moment table to cumulants.
    Cumulants(TableArgs),
    /// Convert a cumulant table to moments.
    Moments(TableArgs),
    /// Evaluate a multivariate Hermite polynomial.
    Hermite(HermiteArgs),
    /// Moments of a randomized compound Poisson sum.
    Poisson(PoissonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    General,
    SharedInner,
    Bell,
    UniOuter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Latex,
    Json,
}

impl From<OutputFormat> for umfb::Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => umfb::Format::Text,
            OutputFormat::Latex => umfb::Format::Latex,
            OutputFormat::Json => umfb::Format::Json,
        }
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Derivative order, e.g. 2,1.
    #[arg(short = 'i', long = "index", value_parser = parse_index)]
    pub i: MultiIndex,

    /// Number of inner functions (outer arity).
    #[arg(short = 'n', long)]
    pub n: Option<usize>,

    /// Number of inner variables; must match the length of the index.
    #[arg(short = 'm', long)]
    pub m: Option<usize>,

    #[arg(long, value_enum, default_value_t = Mode::General)]
    pub mode: Mode,

    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Write to this file instead of stdout.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PartitionsArgs {
    #[arg(short = 'i', long = "index", value_parser = parse_index)]
    pub i: MultiIndex,

    /// Print only the number of partitions.
    #[arg(long)]
    pub count_only: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 4)]
    pub max_order: u32,

    #[arg(long, default_value_t = 3)]
    pub max_n: usize,

    #[arg(long, default_value_t = 3)]
    pub max_m: usize,

    /// Corrupt one coefficient of the partition formula (self-test).
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Rows file, one `i;n` per line; defaults to the built-in set.
    #[arg(long)]
    pub rows: Option<PathBuf>,

    /// CSV destination; defaults to stdout.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Table in JSON form: {"n", "K", "values": [{"index", "value"}]}.
    #[arg(long)]
    pub table: PathBuf,

    /// Single index to evaluate; the whole table is converted otherwise.
    #[arg(short = 'i', long = "index", value_parser = parse_index)]
    pub i: Option<MultiIndex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HermiteKindArg {
    /// H_i(x, Σ).
    Standard,
    /// H̃_i(x, Σ).
    Scaled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HermiteRoute {
    Umbral,
    Bell,
    Series,
}

#[derive(Debug, Args)]
pub struct HermiteArgs {
    #[arg(short = 'i', long = "index", value_parser = parse_index)]
    pub i: MultiIndex,

    /// Σ by rows, e.g. "2,1;1,3".
    #[arg(long)]
    pub sigma: String,

    /// Evaluation point, e.g. "1,-1/2".
    #[arg(short = 'x', long, allow_hyphen_values = true)]
    pub x: String,

    #[arg(long, value_enum, default_value_t = HermiteKindArg::Standard)]
    pub kind: HermiteKindArg,

    #[arg(long, value_enum, default_value_t = HermiteRoute::Umbral)]
    pub route: HermiteRoute,

    /// Evaluate in floating point instead of exact rationals.
    #[arg(long)]
    pub float: bool,
}

#[derive(Debug, Args)]
pub struct PoissonArgs {
    /// Univariate moment table of the count.
    #[arg(long)]
    pub count: PathBuf,

    /// Moment table of the summands.
    #[arg(long)]
    pub summands: PathBuf,

    #[arg(short = 'i', long = "index", value_parser = parse_index)]
    pub i: Option<MultiIndex>,
}
