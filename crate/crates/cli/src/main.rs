use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use emptyconv::rational::parse_rational;
use emptyconv::Rational;
use emptyconv_cli::commands::{self, CheckOptions, Mode, Problem};
use emptyconv_cli::error::{CliError, Result};
use emptyconv_cli::formats::{instance_to_json, parse_input, parse_instance, points_to_json, to_pretty, Input};
use emptyconv_cli::plot::cmd_plot;

/// Exact-arithmetic toolkit for empty convex sets, unit-disk independent sets
/// and the reduction between them.
#[derive(Parser)]
#[command(name = "emptyconv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input JSON file; `-` or absent reads stdin.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Output file; `-` or absent writes stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a unit-disk instance from the spacing-2 square lattice.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        n: usize,
        /// Fraction of lattice cells occupied, as p/q.
        #[arg(long, default_value = "1/2", value_parser = rational)]
        density: Rational,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Build the lifted point set P = L + B from an instance.
    Reduce {
        #[command(flatten)]
        io: Io,
    },
    /// Solve es / lecs on a points file or mis on an instance file.
    Solve {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        problem: Problem,
        /// Decide whether the optimum reaches k; exit 1 if not.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        no_timings: bool,
    },
    /// Run the checker battery and emit a report; exit 1 on any failure.
    Check {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value = "all")]
        mode: Mode,
        /// Largest |P| checked exhaustively.
        #[arg(long, default_value_t = 18)]
        cap: usize,
        /// Above the cap, sample this many subsets for the encoding check.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Omit wall times so repeated runs are byte-identical.
        #[arg(long)]
        no_timings: bool,
    },
    /// Decide whether B is a weak eps-net for L; exit 1 if not.
    Net {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_parser = rational)]
        eps: Rational,
    },
    /// Red-blue discrepancy of L (red) against B (blue) over convex ranges.
    Discrepancy {
        #[command(flatten)]
        io: Io,
    },
    /// Convex subset found by projecting to the plane and solving there.
    Approx {
        #[command(flatten)]
        io: Io,
    },
    /// Render an instance or points file as SVG.
    Plot {
        #[command(flatten)]
        io: Io,
    },
}

fn rational(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn is_std(p: &Option<PathBuf>) -> bool {
    p.as_deref().is_none_or(|p| p == Path::new("-"))
}

fn read_input(path: &Option<PathBuf>) -> Result<(String, String)> {
    if is_std(path) {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|source| CliError::Io {
            path: "<stdin>".into(),
            source,
        })?;
        return Ok((text, "<stdin>".into()));
    }
    let p = path.as_ref().expect("checked above");
    let name = p.display().to_string();
    let text = fs::read_to_string(p).map_err(|source| CliError::Io {
        path: name.clone(),
        source,
    })?;
    Ok((text, name))
}

/// Writes through a sibling temporary file so readers never see a partial result.
fn write_output(path: &Option<PathBuf>, text: &str) -> Result<()> {
    if is_std(path) {
        let mut out = io::stdout().lock();
        return out
            .write_all(text.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            });
    }
    let p = path.as_ref().expect("checked above");
    let err = |source| CliError::Io {
        path: p.display().to_string(),
        source,
    };
    let mut tmp = p.clone().into_os_string();
    tmp.push(".tmp");
    fs::write(&tmp, text).map_err(err)?;
    fs::rename(&tmp, p).map_err(err)
}

fn load(io: &Io) -> Result<Input> {
    let (text, name) = read_input(&io.input)?;
    parse_input(&text, &name)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen {
            seed,
            n,
            density,
            output,
        } => {
            let d = commands::cmd_gen(seed, n, &density)?;
            write_output(&output, &instance_to_json(&d))?;
            Ok(true)
        }
        Command::Reduce { io } => {
            let (text, name) = read_input(&io.input)?;
            let d = parse_instance(&text, &name)?;
            write_output(&io.output, &points_to_json(&commands::cmd_reduce(&d)?))?;
            Ok(true)
        }
        Command::Solve {
            io,
            problem,
            k,
            no_timings,
        } => {
            let report = commands::cmd_solve(&load(&io)?, problem, k, !no_timings)?;
            write_output(&io.output, &to_pretty(&report))?;
            Ok(report.decision != Some(false))
        }
        Command::Check {
            io,
            mode,
            cap,
            sample,
            seed,
            no_timings,
        } => {
            let opts = CheckOptions {
                mode,
                cap,
                sample,
                seed,
                timings: !no_timings,
            };
            let report = commands::cmd_check(&load(&io)?, &opts)?;
            write_output(&io.output, &to_pretty(&report))?;
            Ok(report.passed())
        }
        Command::Net { io, eps } => {
            let report = commands::cmd_net(&load(&io)?, &eps)?;
            write_output(&io.output, &to_pretty(&report))?;
            Ok(report.is_net)
        }
        Command::Discrepancy { io } => {
            let report = commands::cmd_discrepancy(&load(&io)?)?;
            write_output(&io.output, &to_pretty(&report))?;
            Ok(true)
        }
        Command::Approx { io } => {
            let report = commands::cmd_approx(&load(&io)?)?;
            write_output(&io.output, &to_pretty(&report))?;
            Ok(true)
        }
        Command::Plot { io } => {
            let svg = cmd_plot(&load(&io)?)?;
            write_output(&io.output, &svg)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("emptyconv: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
