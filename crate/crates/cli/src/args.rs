use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "pslet", version, about = "Quasi-relativistic oscillator energies by shifted-l expansion, Padé resummation and Numerov integration", arg_required_else_help = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Partial sum of the energy series.
    Energy(EnergyArgs),
    /// [N, M] Padé approximant of the energy series.
    Pade(PadeArgs),
    /// Eigenvalue by direct Numerov integration.
    Oracle(OracleArgs),
    /// Regenerate one of the five reference tables.
    Table(TableArgs),
    /// Evaluate every (α, l) pair of the given lists in parallel.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct EnergyArgs {
    /// Anharmonicity; decimals or fractions such as 1/3.
    #[arg(long, value_parser = parse_alpha)]
    pub alpha: f64,
    #[arg(long)]
    pub l: u32,
    /// Number of series terms K.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=10))]
    pub terms: u32,
    #[arg(long)]
    pub with_oracle: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PadeArgs {
    #[arg(long, value_parser = parse_alpha)]
    pub alpha: f64,
    #[arg(long)]
    pub l: u32,
    /// Numerator degree.
    #[arg(long)]
    pub n: usize,
    /// Denominator degree, N or N + 1.
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub with_oracle: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[arg(long, value_parser = parse_alpha)]
    pub alpha: f64,
    #[arg(long)]
    pub l: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    pub id: u8,
    /// Add the integration value to columns that do not print one.
    #[arg(long)]
    pub with_oracle: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_parser = parse_alpha, value_delimiter = ',', required = true)]
    pub alpha: Vec<f64>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub l: Vec<u32>,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=10))]
    pub terms: u32,
    #[arg(long, requires = "m")]
    pub n: Option<usize>,
    #[arg(long, requires = "n")]
    pub m: Option<usize>,
    #[arg(long)]
    pub with_oracle: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Non-negative finite number, written as a decimal or as `p/q`.
pub fn parse_alpha(s: &str) -> Result<f64, String> {
    let value = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| format!("invalid numerator in {s:?}"))?;
            let q: f64 = q.trim().parse().map_err(|_| format!("invalid denominator in {s:?}"))?;
            if q == 0.0 {
                return Err(format!("zero denominator in {s:?}"));
            }
            p / q
        }
        None => s.trim().parse().map_err(|_| format!("invalid number {s:?}"))?,
    };
    if !value.is_finite() || value < 0.0 {
        return Err(format!("anharmonicity must be finite and >= 0, got {s}"));
    }
    Ok(value)
}
