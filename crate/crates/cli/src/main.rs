//! `qtrig`: synthesize, verify, apply and count trigonometric-transform circuits.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 invalid arguments or input,
//! 3 a verification check exceeded its tolerance.

use std::fmt;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use qtrig_core::circuit::{format_sig17, serialize, to_qasm3};
use qtrig_core::verification::{MAX_COUNT_N, MAX_VERIFY_N};
use qtrig_core::{
    apply_transform, scaling_table, trig_transform_circuit, verify_sweep, CostModel, Error,
    SynthesisParams, Tolerances, TransformKind, Variant,
};

#[derive(Parser, Debug)]
#[command(
    name = "qtrig",
    version,
    about = "Quantum circuits for the discrete cosine and sine transforms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the circuit for one transform and write it to a file.
    Synth {
        /// dct1..dct4 or dst1..dst4
        #[arg(long)]
        kind: TransformKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Qcirc)]
        format: Format,
    },
    /// Check the base-change identities and the synthesized circuits.
    Verify {
        /// I, II, III, IV, all, or a kind name; may be repeated
        #[arg(long, default_value = "all")]
        variant: Vec<VariantSelector>,
        /// Single size or inclusive range such as 1..6
        #[arg(long)]
        n: NRange,
        /// Tolerance for residuals that involve a simulated circuit
        #[arg(long, default_value_t = Tolerances::default().circuit)]
        tol: f64,
        /// Tolerance for the pure matrix identity
        #[arg(long, default_value_t = Tolerances::default().matrix)]
        matrix_tol: f64,
        /// Also write a JSON report to this path
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Apply a transform to a vector read from a file.
    Apply {
        #[arg(long)]
        kind: TransformKind,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print gate counts and a quadratic fit per variant.
    Count {
        #[arg(long, default_value = "all")]
        variant: Vec<VariantSelector>,
        #[arg(long)]
        n: NRange,
        #[arg(long, default_value_t = CostModel::Abstract)]
        cost_model: CostModel,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Qcirc,
    Qasm3,
}

/// A variant name, `all`, or a kind name standing for its variant.
#[derive(Clone, Debug)]
struct VariantSelector(Vec<Variant>);

impl FromStr for VariantSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(Self(Variant::ALL.to_vec()));
        }
        if let Ok(v) = s.parse::<Variant>() {
            return Ok(Self(vec![v]));
        }
        if let Ok(k) = s.parse::<TransformKind>() {
            return Ok(Self(vec![k.variant]));
        }
        Err(format!(
            "unknown variant '{s}' (expected I, II, III, IV, all, or dct1..dst4)"
        ))
    }
}

#[derive(Clone, Debug)]
struct NRange(RangeInclusive<u32>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid size '{t}'"))
        };
        let range = match s.split_once("..") {
            Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
            None => num(s)?..=num(s)?,
        };
        if range.is_empty() {
            return Err(format!("empty range '{s}'"));
        }
        Ok(Self(range))
    }
}

impl NRange {
    fn check(&self, limit: u32) -> Result<RangeInclusive<u32>, CliError> {
        let (a, b) = (*self.0.start(), *self.0.end());
        if a == 0 || b > limit {
            return Err(CliError::Usage(format!(
                "n must lie within 1..{limit}, got {a}..{b}"
            )));
        }
        Ok(self.0.clone())
    }
}

enum CliError {
    Usage(String),
    Io(String),
    Failed(usize),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
            CliError::Failed(k) => {
                write!(f, "verification failed: {k} check(s) exceeded tolerance")
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn merge(selectors: &[VariantSelector]) -> Vec<Variant> {
    let mut out: Vec<Variant> = selectors.iter().flat_map(|s| s.0.iter().copied()).collect();
    out.sort();
    out.dedup();
    out
}

fn parse_vector(text: &str) -> Result<Vec<f64>, CliError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let v: f64 = body
            .parse()
            .map_err(|_| CliError::Usage(format!("line {}: not a real number: '{body}'", i + 1)))?;
        out.push(v);
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Synth {
            kind,
            n,
            out,
            format,
        } => {
            let circuit = trig_transform_circuit(SynthesisParams::new(kind, n)?)?;
            let text = match format {
                Format::Qcirc => serialize(&circuit),
                Format::Qasm3 => to_qasm3(&circuit),
            };
            write(&out, &text)?;
            println!(
                "wrote {} ({} qubits, {} gates)",
                out.display(),
                circuit.qubits(),
                circuit.len()
            );
        }
        Command::Verify {
            variant,
            n,
            tol,
            matrix_tol,
            report,
        } => {
            let range = n.check(MAX_VERIFY_N)?;
            let tolerances = Tolerances {
                matrix: matrix_tol,
                circuit: tol,
            };
            let reports = verify_sweep(&merge(&variant), range, tolerances)?;
            for r in &reports {
                println!("{}", r.line());
            }
            if let Some(path) = report {
                let doc = serde_json::json!({ "tolerances": tolerances, "records": reports });
                let text = serde_json::to_string_pretty(&doc).expect("report serializes");
                write(&path, &(text + "\n"))?;
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            if failed > 0 {
                return Err(CliError::Failed(failed));
            }
        }
        Command::Apply { kind, input, out } => {
            let x = parse_vector(&read(&input)?)?;
            let y = apply_transform(kind, &x)?;
            let text: String = y.iter().map(|v| format_sig17(*v) + "\n").collect();
            write(&out, &text)?;
        }
        Command::Count {
            variant,
            n,
            cost_model,
        } => {
            let range = n.check(MAX_COUNT_N)?;
            let table = scaling_table(&merge(&variant), range, cost_model)?;
            println!(
                "{:<7} {:>3} {:>10} {:>12} {:>15}",
                "variant", "n", "abstract", "linear-mcx", "quadratic-mcx"
            );
            for r in &table.rows {
                println!(
                    "{:<7} {:>3} {:>10} {:>12} {:>15}",
                    r.variant.name(),
                    r.n,
                    r.abstract_count,
                    r.linear_count,
                    r.quadratic_count
                );
            }
            for f in &table.fits {
                println!(
                    "fit variant={} model={} count ~ {:.6} n^2 + {:.6} n + {:.6} max_rel_residual={:.4e}",
                    f.variant.name(),
                    f.model,
                    f.a,
                    f.b,
                    f.c,
                    f.max_relative_residual
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code())
        }
    }
}
