//! Verb dispatch: each subcommand computes through the library, assembles a
//! [`Report`](crate::report::Report) and writes it to stdout or `--output`.
//!
//! Exit codes: 0 success, 2 usage, 3 verification failure, 4 numeric/budget
//! failure.  In JSON mode numeric failures are emitted as machine-readable
//! `{meta, error}` objects on stdout.

use crate::args::{self, Cli, Format, OutputOpts, Verb};
use crate::report::{error_json, Meta, Report, Value};
use bnspinor::asymptotics::LimitDensity;
use bnspinor::convergence::{
    local_error_scan, orthotope_prob_discrete, orthotope_prob_limit, sample, Orthotope,
};
use bnspinor::exact::{check_sum_rules, DecompositionTable};
use bnspinor::lattice::support_size;
use bnspinor::oracle::check_equivalence;
use bnspinor::Rank;
use num::ToPrimitive;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

/// Short machine-readable code for the JSON error object.
fn error_code(e: &bnspinor::Error) -> &'static str {
    use bnspinor::Error::*;
    match e {
        InvalidRank(_) => "invalid-rank",
        NotDominantRegular(_) => "not-dominant-regular",
        MixedParity(_) => "mixed-parity",
        ParityMismatch { .. } => "parity-mismatch",
        LengthMismatch { .. } => "length-mismatch",
        InvalidOrthotope { .. } => "invalid-orthotope",
        EmptyRegion { .. } => "empty-region",
        InsufficientNodes { .. } => "insufficient-nodes",
        RankTooLarge { .. } => "rank-too-large",
        QuadratureBudget { .. } => "quadrature-budget",
        SupportTooLarge { .. } => "support-too-large",
        InvalidTolerance(_) => "invalid-tolerance",
    }
}

/// Validation-class errors exit 2 (usage); everything else is a numeric or
/// budget failure, exit 4.
fn is_usage(e: &bnspinor::Error) -> bool {
    use bnspinor::Error::*;
    matches!(
        e,
        InvalidRank(_)
            | InvalidOrthotope { .. }
            | InvalidTolerance(_)
            | LengthMismatch { .. }
            | NotDominantRegular(_)
            | MixedParity(_)
    )
}

struct Ctx {
    meta: Meta,
    format: Format,
    output: Option<PathBuf>,
}

impl Ctx {
    fn new(out: &OutputOpts, seed: Option<u64>) -> Self {
        Ctx {
            meta: Meta::from_env(seed),
            format: out.format,
            output: out.output.clone(),
        }
    }

    fn usage(&self, message: &str) -> i32 {
        eprintln!("error: {message}");
        EXIT_USAGE
    }

    fn numeric(&self, e: &bnspinor::Error) -> i32 {
        if is_usage(e) {
            return self.usage(&e.to_string());
        }
        match self.format {
            Format::Json => print!("{}", error_json(&self.meta, error_code(e), &e.to_string())),
            Format::Csv => eprintln!("error: {e}"),
        }
        EXIT_NUMERIC
    }

    fn emit(&self, report: &Report) -> i32 {
        let text = report.render(self.format);
        match resolve_output(&self.output) {
            None => {
                print!("{text}");
                EXIT_OK
            }
            Some(path) => match std::fs::write(&path, &text) {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    EXIT_NUMERIC
                }
            },
        }
    }
}

/// Relative `--output` paths are joined to `OUTPUT_DIR` when that is set.
fn resolve_output(output: &Option<PathBuf>) -> Option<PathBuf> {
    let path = output.clone()?;
    if path.is_relative() {
        if let Ok(dir) = std::env::var("OUTPUT_DIR") {
            if !dir.is_empty() {
                return Some(PathBuf::from(dir).join(path));
            }
        }
    }
    Some(path)
}

fn rational_cells(prob: &bnspinor::exact::ExactProb) -> (Value, Value) {
    (
        Value::Rational(format!("{}/{}", prob.numer(), prob.denom())),
        Value::Float(prob.to_f64().expect("probability fits in f64")),
    )
}

fn coord_header(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn run(cli: Cli) -> i32 {
    match cli.verb {
        Verb::Decompose { rank, power, out } => {
            let ctx = Ctx::new(&out, None);
            let n = match Rank::new(rank) {
                Ok(n) => n,
                Err(e) => return ctx.usage(&e.to_string()),
            };
            let table = match DecompositionTable::compute(n, power) {
                Ok(t) => t,
                Err(e) => return ctx.numeric(&e),
            };
            let mut header = coord_header("a", rank);
            header.extend(["multiplicity", "dim", "prob", "prob_float"].map(String::from));
            let rows = table
                .rows
                .iter()
                .map(|row| {
                    let mut cells: Vec<Value> =
                        row.a.coords().iter().map(|&c| Value::Int(c)).collect();
                    cells.push(Value::Text(row.multiplicity.to_string()));
                    cells.push(Value::Text(row.dim.to_string()));
                    let (p, f) = rational_cells(&row.prob);
                    cells.push(p);
                    cells.push(f);
                    cells
                })
                .collect();
            ctx.emit(&Report::new(ctx.meta.clone(), header, rows))
        }

        Verb::Verify { rank, power, out } => {
            let ctx = Ctx::new(&out, None);
            let n = match Rank::new(rank) {
                Ok(n) => n,
                Err(e) => return ctx.usage(&e.to_string()),
            };
            let header: Vec<String> = [
                "power",
                "support_points",
                "equivalence_ok",
                "divergence",
                "sum_mult_dim_ok",
                "sum_pmf_ok",
            ]
            .map(String::from)
            .to_vec();
            let mut rows = Vec::new();
            let mut all_ok = true;
            for p in 0..=power {
                let equivalence = match check_equivalence(n, p) {
                    Ok(r) => r,
                    Err(e) => return ctx.numeric(&e),
                };
                let table = match DecompositionTable::compute(n, p) {
                    Ok(t) => t,
                    Err(e) => return ctx.numeric(&e),
                };
                let sums = check_sum_rules(&table);
                let divergence = equivalence
                    .first_divergence
                    .as_ref()
                    .map(|d| d.a.to_string())
                    .unwrap_or_default();
                all_ok &= equivalence.passed() && sums.passed();
                rows.push(vec![
                    Value::UInt(p),
                    Value::UInt(equivalence.points as u64),
                    Value::Bool(equivalence.passed()),
                    Value::Text(divergence),
                    Value::Bool(sums.mult_dim_ok()),
                    Value::Bool(sums.prob_ok()),
                ]);
            }
            let code = ctx.emit(&Report::new(ctx.meta.clone(), header, rows));
            if code != EXIT_OK {
                code
            } else if all_ok {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            }
        }

        Verb::Density { rank, points, out } => {
            let ctx = Ctx::new(&out, None);
            let n = match Rank::new(rank) {
                Ok(n) => n,
                Err(e) => return ctx.usage(&e.to_string()),
            };
            let density = LimitDensity::new(n);
            let mut header = coord_header("x", rank);
            header.push("phi".into());
            let mut rows = Vec::new();
            for raw in &points {
                let x = match args::parse_point(raw, rank) {
                    Ok(x) => x,
                    Err(msg) => return ctx.usage(&msg),
                };
                let mut cells: Vec<Value> = x.iter().map(|&v| Value::Float(v)).collect();
                cells.push(Value::Float(density.pdf(&x)));
                rows.push(cells);
            }
            ctx.emit(&Report::new(ctx.meta.clone(), header, rows))
        }

        Verb::ConvergeLocal {
            rank,
            powers,
            cutoff,
            out,
        } => {
            let ctx = Ctx::new(&out, None);
            let n = match Rank::new(rank) {
                Ok(n) => n,
                Err(e) => return ctx.usage(&e.to_string()),
            };
            let powers = match args::parse_powers(&powers) {
                Ok(p) => p,
                Err(msg) => return ctx.usage(&msg),
            };
            if !(cutoff > 0.0) {
                return ctx.usage(&format!("--cutoff must be positive, got {cutoff}"));
            }
            let scan = match local_error_scan(n, &powers, cutoff) {
                Ok(s) => s,
                Err(e) => return ctx.numeric(&e),
            };
            let mut header: Vec<String> =
                ["power", "cutoff", "max_rel_err"].map(String::from).to_vec();
            header.extend(coord_header("argmax_a", rank));
            let rows = scan
                .iter()
                .map(|row| {
                    let mut cells = vec![
                        Value::UInt(row.power),
                        Value::Float(row.cutoff),
                        Value::Float(row.max_rel_err),
                    ];
                    cells.extend(row.argmax.coords().iter().map(|&c| Value::Int(c)));
                    cells
                })
                .collect();
            ctx.emit(&Report::new(ctx.meta.clone(), header, rows))
        }

        Verb::ConvergeGlobal {
            rank,
            powers,
            orthotope,
            tol,
            out,
        } => {
            let ctx = Ctx::new(&out, None);
            let n = match Rank::new(rank) {
                Ok(n) => n,
                Err(e) => return ctx.usage(&e.to_string()),
            };
            let powers = match args::parse_powers(&powers) {
                Ok(p) => p,
                Err(msg) => return ctx.usage(&msg),
            };
            if !(tol > 0.0) {
                return ctx.usage(&format!("--tol must be positive, got {tol}"));
            }
            let (c, d) = match args::parse_box(&orthotope, rank) {
                Ok(cd) => cd,
                Err(msg) => return ctx.usage(&msg),
            };
            let h = match Orthotope::new(c, d) {
                Ok(h) => h,
                Err(e) => return ctx.usage(&e.to_string()),
            };
            let limit = match orthotope_prob_limit(n, &h, tol) {
                Ok(v) => v,
                Err(e) => return ctx.numeric(&e),
            };
            let header: Vec<String> = [
                "power",
                "discrete",
                "discrete_float",
                "limit",
                "gap",
            ]
            .map(String::from)
            .to_vec();
            let mut rows = Vec::new();
            for &p in &powers {
                let discrete = match orthotope_prob_discrete(n, p, &h) {
                    Ok(v) => v,
                    Err(e) => return ctx.numeric(&e),
                };
                let (exact, float) = rational_cells(&discrete);
                let gap = (discrete.to_f64().unwrap() - limit).abs();
                rows.push(vec![
                    Value::UInt(p),
                    exact,
                    float,
                    Value::Float(limit),
                    Value::Float(gap),
                ]);
            }
            ctx.emit(&Report::new(ctx.meta.clone(), header, rows))
        }

        Verb::Sample {
            rank,
            power,
            count,
            seed,
            out,
        } => {
            let ctx = Ctx::new(&out, Some(seed));
            let n = match Rank::new(rank) {
                Ok(n) => n,
                Err(e) => return ctx.usage(&e.to_string()),
            };
            let draws = match sample(n, power, count, seed) {
                Ok(d) => d,
                Err(e) => return ctx.numeric(&e),
            };
            let mut header = vec!["index".to_string()];
            header.extend(coord_header("a", rank));
            let rows = draws
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let mut cells = vec![Value::UInt(i as u64)];
                    cells.extend(p.coords().iter().map(|&c| Value::Int(c)));
                    cells
                })
                .collect();
            ctx.emit(&Report::new(ctx.meta.clone(), header, rows))
        }

        Verb::PlotData { rank, power, out } => {
            let ctx = Ctx::new(&out, None);
            let n = match Rank::new(rank) {
                Ok(n) => n,
                Err(e) => return ctx.usage(&e.to_string()),
            };
            if support_size(n, power) > bnspinor::convergence::MAX_SAMPLE_SUPPORT {
                return ctx.numeric(&bnspinor::Error::SupportTooLarge {
                    rank,
                    power,
                    points: support_size(n, power),
                    limit: bnspinor::convergence::MAX_SAMPLE_SUPPORT,
                });
            }
            let table = match DecompositionTable::compute(n, power) {
                Ok(t) => t,
                Err(e) => return ctx.numeric(&e),
            };
            let density = LimitDensity::new(n);
            let scale = ((power as f64).sqrt() / 2.0).powi(rank as i32);
            let mut header = coord_header("a", rank);
            header.extend(coord_header("x", rank));
            header.extend(["pmf", "pmf_float", "pmf_scaled", "phi"].map(String::from));
            let rows = table
                .rows
                .iter()
                .map(|row| {
                    let x = row.a.rescaled(power);
                    let mut cells: Vec<Value> =
                        row.a.coords().iter().map(|&c| Value::Int(c)).collect();
                    cells.extend(x.iter().map(|&v| Value::Float(v)));
                    let (exact, float) = rational_cells(&row.prob);
                    let pmf_float = row.prob.to_f64().unwrap();
                    cells.push(exact);
                    cells.push(float);
                    cells.push(Value::Float(pmf_float * scale));
                    cells.push(Value::Float(density.pdf(&x)));
                    cells
                })
                .collect();
            ctx.emit(&Report::new(ctx.meta.clone(), header, rows))
        }
    }
}
