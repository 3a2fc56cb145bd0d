use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use superhaar::cli::{self, exit, InvariantFlags, Outcome};

#[derive(Parser)]
#[command(
    name = "superhaar",
    version,
    about = "Invariants and left integrals for Lie superalgebras"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check parity, super antisymmetry and the super Jacobi identity.
    Validate { algebra: PathBuf },
    /// Compute the invariant z of U(g)/U(g)g0, or report why none exists.
    Invariant {
        algebra: PathBuf,
        /// Include the Frobenius matrix A and its right inverse.
        #[arg(long)]
        emit_matrix: bool,
        /// Include the dual free pair y_I.
        #[arg(long)]
        emit_dual_pair: bool,
        /// Cross-check against a direct nullspace computation.
        #[arg(long)]
        oracle: bool,
        /// Treat g0 as reductive even when this cannot be certified.
        #[arg(long)]
        assume_reductive: bool,
    },
    /// Evaluate the left integral on the matrix elements of a module.
    Integrate {
        algebra: PathBuf,
        module: PathBuf,
        /// Treat g0 as reductive even when this cannot be certified.
        #[arg(long)]
        assume_reductive: bool,
    },
}

fn run(args: Args) -> Outcome {
    if let Command::Validate { algebra } = &args.command {
        return cli::cmd_validate(algebra);
    }
    let max_odd = match cli::max_odd_from_env() {
        Ok(m) => m,
        Err(msg) => {
            return Outcome {
                code: exit::IO_OR_PARSE,
                stdout: None,
                stderr: vec![msg],
            }
        }
    };
    match args.command {
        Command::Validate { .. } => unreachable!(),
        Command::Invariant {
            algebra,
            emit_matrix,
            emit_dual_pair,
            oracle,
            assume_reductive,
        } => {
            let flags = InvariantFlags {
                emit_matrix,
                emit_dual_pair,
                oracle,
                assume_reductive,
            };
            cli::cmd_invariant(&algebra, flags, max_odd)
        }
        Command::Integrate {
            algebra,
            module,
            assume_reductive,
        } => cli::cmd_integrate(&algebra, &module, assume_reductive, max_odd),
    }
}

fn main() -> ExitCode {
    let outcome = run(Args::parse());
    if let Some(value) = &outcome.stdout {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("JSON value")
        );
    }
    for line in &outcome.stderr {
        eprintln!("superhaar: {line}");
    }
    ExitCode::from(outcome.code as u8)
}
