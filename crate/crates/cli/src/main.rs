//! `mirror`: exact computations for the quintic threefold and its mirror.

mod commands;
mod error;
mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "mirror", version, about = "Exact mirror symmetry computations for the quintic threefold")]
struct Cli {
    /// Truncation order for power series.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    order: u32,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    #[value(alias = "structured")]
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Frobenius solutions at z = 0 and z = infinity, with the operator residual.
    Periods,
    /// Monodromy around z = 0 and z = infinity.
    Monodromy,
    /// Mirror map, normalized Yukawa coupling and instanton numbers.
    Gw {
        /// Highest degree to extract.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        dmax: u32,
    },
    /// Polar dual, lattice points and reflexivity of a lattice polytope.
    Polytope {
        /// JSON vertex list, or an object with `vertices` and optional `group_dimension`.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Exponent matrices and their charge factorizations.
    Glsm {
        #[command(subcommand)]
        command: GlsmCommand,
    },
    /// The twist and spherical matrices on the even cohomology of the quintic.
    Kontsevich,
    /// Vertex combinatorics of torus fibrations.
    Syz {
        #[command(subcommand)]
        command: SyzCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum GlsmCommand {
    /// Verifies P = S T, builds the transposed triple and both groups.
    Transpose {
        /// JSON object with integer row arrays `p`, `s`, `t`.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Kähler parameter from coefficient magnitudes and torus characters.
    Kahler {
        /// JSON object with `magnitudes`, and optional `charges` and `branches`.
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum SyzCommand {
    /// Classifies a vertex given as three 3x3 integer monodromies.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Vertex and edge counts of the quintic's discriminant graph.
    QuinticCounts,
    /// Semistable fibre sum and SL(2, Z) self-conjugacy of edge monodromies.
    K3 {
        /// Comma-separated fibre types `k_i` of `I_{k_i}` fibres.
        #[arg(long, value_delimiter = ',')]
        fibres: Option<Vec<u64>>,
        /// Largest `k` for the conjugacy check.
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(1..))]
        kmax: i64,
    },
}

fn parse() -> Result<Cli, ExitCode> {
    Cli::try_parse().map_err(|e| {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                let _ = e.print();
                ExitCode::SUCCESS
            }
            _ => {
                let text = e.to_string();
                let mut lines = text.lines();
                let first = lines.next().unwrap_or("invalid arguments").trim_start_matches("error: ");
                let err = CliError::Usage(first.to_string());
                eprintln!("{err}");
                for line in lines {
                    eprintln!("{line}");
                }
                ExitCode::from(err.exit_code() as u8)
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match parse() {
        Ok(cli) => cli,
        Err(code) => return code,
    };
    let order = cli.order as usize;
    let outcome = commands::run(&cli.command, order);
    let report = match outcome {
        Ok(report) => report,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    let text = match cli.format {
        Format::Table => report.table.clone(),
        Format::Json => render::envelope(report.name, order, &report.json),
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    match report.failure {
        Some(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
        None => ExitCode::SUCCESS,
    }
}
