use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use super::{initial_density, parse_circuit, route};
use crate::circuits;
use crate::density::DensityMatrix;
use crate::laws;

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 2;
const EXIT_NUMERIC: i32 = 3;

const VALIDATE_TOL: f64 = 1e-6;
const DEMO_TOL: f64 = 1e-9;
const TEXT_PRECISION: usize = 4;

#[derive(Parser, Debug)]
#[command(
    name = "qarrow",
    version,
    about = "Density-matrix circuits as arrows over superoperators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse, route and run a circuit file on its declared initial state.
    Run {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Decimal places (text defaults to 4, JSON to full precision).
        #[arg(long)]
        precision: Option<usize>,
        /// Refuse to run unless the initial density is a valid state (tolerance 1e-6).
        #[arg(long)]
        validate_input: bool,
    },
    /// Run a catalog circuit on its default input.
    Demo {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(circuits::CATALOG))]
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        precision: Option<usize>,
    },
    /// Check the monad and arrow laws numerically.
    Laws {
        #[arg(long, default_value_t = laws::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = laws::DEFAULT_TOL)]
        tol: f64,
    },
}

fn emit(
    d: &DensityMatrix,
    format: Format,
    precision: Option<usize>,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        Format::Text => write!(out, "{}", d.to_table(precision.unwrap_or(TEXT_PRECISION))),
        Format::Json => {
            let json = serde_json::to_string_pretty(&d.to_json(precision))
                .map_err(std::io::Error::other)?;
            writeln!(out, "{json}")
        }
    }
}

/// Entry point shared by the binary and tests. Returns the process exit code:
/// 0 on success, 2 for usage, I/O and parse errors, 3 for numerical failures.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(
    cmd: Command,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Box<dyn std::error::Error>> {
    match cmd {
        Command::Run {
            file,
            format,
            precision,
            validate_input,
        } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    writeln!(err, "error: cannot read {}: {e}", file.display())?;
                    return Ok(EXIT_USAGE);
                }
            };
            let ir = match parse_circuit(&text) {
                Ok(ir) => ir,
                Err(e) => {
                    writeln!(err, "{}: {e}", file.display())?;
                    return Ok(EXIT_USAGE);
                }
            };
            let pipeline = route(&ir)?;
            let input = initial_density(&ir)?;
            if validate_input {
                let diag = input.diagnostics(VALIDATE_TOL);
                if !diag.is_physical() {
                    writeln!(
                        err,
                        "error: initial density is not a valid state (hermitian: {}, psd: {}, unit trace: {}, max violation {:.3e})",
                        diag.hermitian, diag.psd, diag.unit_trace, diag.max_violation
                    )?;
                    return Ok(EXIT_NUMERIC);
                }
            }
            let result = pipeline.apply(&input)?;
            if let Format::Text = format {
                writeln!(out, "wires: {}", pipeline.output_wires.join(" "))?;
            }
            emit(&result, format, precision, out)?;
            Ok(EXIT_OK)
        }
        Command::Demo {
            name,
            format,
            precision,
        } => {
            let entry = circuits::lookup(&name)?;
            let result = entry.circuit.apply(&entry.input)?;
            emit(&result, format, precision, out)?;
            let deviation = result.max_abs_diff(&entry.expected)?;
            writeln!(out, "max deviation: {deviation:.3e}")?;
            if deviation > DEMO_TOL {
                writeln!(
                    err,
                    "error: {name} deviates from its expected output by {deviation:.3e}"
                )?;
                return Ok(EXIT_NUMERIC);
            }
            Ok(EXIT_OK)
        }
        Command::Laws { seed, tol } => {
            let reports = laws::check_all(seed, tol)?;
            write!(out, "{}", laws::format_table(&reports))?;
            let failed = reports.iter().filter(|r| !r.pass).count();
            writeln!(
                out,
                "{} of {} laws hold (seed {seed}, tol {tol:e})",
                reports.len() - failed,
                reports.len()
            )?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_NUMERIC })
        }
    }
}
