//! Command-line surface: one binary, subcommand per operation.  Every
//! numeric parameter is validated here before anything runs; validation
//! failures exit with the usage code.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "bnspinor",
    version,
    about = "Exact tensor-power decomposition of the so(2n+1) spinor representation, \
             the induced probability measure, and its limit-density verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv, global = false)]
    pub format: Format,
    /// Output file (default: stdout).  Relative paths are joined to the
    /// OUTPUT_DIR environment variable when it is set.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Exact decomposition table: multiplicity, dimension and probability
    /// per support point
    Decompose {
        /// Algebra rank n >= 1
        #[arg(long)]
        rank: usize,
        /// Tensor power N >= 0
        #[arg(long)]
        power: u64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Cross-check the closed-form multiplicities against both oracles and
    /// the exact sum rules for every power up to N (exit 3 on any failure)
    Verify {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        power: u64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Evaluate the limit density at given rescaled points
    Density {
        #[arg(long)]
        rank: usize,
        /// Point "x1,x2,..." with n coordinates; repeatable
        #[arg(long = "point", value_name = "X1,X2,...", required = true)]
        points: Vec<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Maximum pointwise ratio error against the limit density inside the
    /// cutoff region, per power
    ConvergeLocal {
        #[arg(long)]
        rank: usize,
        /// Comma-separated tensor powers, e.g. "100,400,1600"
        #[arg(long)]
        powers: String,
        /// Region cutoff C: points with max(|a_i|+2n-1) < sqrt(N)*C
        #[arg(long, default_value_t = 2.0)]
        cutoff: f64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Exact box probability vs the integral of the limit density, per power
    ConvergeGlobal {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        powers: String,
        /// Half-open box "c1:d1,c2:d2,..." in rescaled coordinates
        #[arg(long = "box", value_name = "C1:D1,...")]
        orthotope: String,
        /// Absolute tolerance for the limit-side quadrature
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Seeded i.i.d. draws from the exact measure
    Sample {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        power: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Per-support-point data to reproduce the pmf-vs-density plot:
    /// a, x = a/sqrt(N), pmf, pmf*(sqrt(N)/2)^n and the density value
    PlotData {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        power: u64,
        #[command(flatten)]
        out: OutputOpts,
    },
}

/// Parse "x1,x2,..." into exactly `rank` floats.
pub fn parse_point(raw: &str, rank: usize) -> Result<Vec<f64>, String> {
    let coords: Result<Vec<f64>, _> = raw.split(',').map(|s| s.trim().parse::<f64>()).collect();
    let coords = coords.map_err(|e| format!("--point '{raw}': {e}"))?;
    if coords.len() != rank {
        return Err(format!(
            "--point '{raw}' has {} coordinates, expected rank {rank}",
            coords.len()
        ));
    }
    if coords.iter().any(|c| !c.is_finite()) {
        return Err(format!("--point '{raw}': coordinates must be finite"));
    }
    Ok(coords)
}

/// Parse "100,400,1600" into a non-empty power list.
pub fn parse_powers(raw: &str) -> Result<Vec<u64>, String> {
    let powers: Result<Vec<u64>, _> = raw.split(',').map(|s| s.trim().parse::<u64>()).collect();
    let powers = powers.map_err(|e| format!("--powers '{raw}': {e}"))?;
    if powers.is_empty() {
        return Err(format!("--powers '{raw}': need at least one power"));
    }
    Ok(powers)
}

/// Parse "c1:d1,c2:d2,..." into per-axis bounds with c_i < d_i
/// (`inf` accepted for upper endpoints).
pub fn parse_box(raw: &str, rank: usize) -> Result<(Vec<f64>, Vec<f64>), String> {
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for part in raw.split(',') {
        let (c, d) = part
            .split_once(':')
            .ok_or_else(|| format!("--box segment '{part}' must look like c:d"))?;
        let c: f64 = c
            .trim()
            .parse()
            .map_err(|e| format!("--box lower '{c}': {e}"))?;
        let d: f64 = d
            .trim()
            .parse()
            .map_err(|e| format!("--box upper '{d}': {e}"))?;
        if !c.is_finite() {
            return Err(format!("--box lower endpoint {c} must be finite"));
        }
        if !(c < d) {
            return Err(format!("--box segment '{part}': need c < d"));
        }
        lower.push(c);
        upper.push(d);
    }
    if lower.len() != rank {
        return Err(format!(
            "--box '{raw}' has {} axes, expected rank {rank}",
            lower.len()
        ));
    }
    Ok((lower, upper))
}
