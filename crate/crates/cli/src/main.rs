use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;

/// Decide whether pure braids can be unplaited with their ends tied together.
#[derive(Parser, Debug)]
#[command(name = "braid-unplait", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test a pure braid for topological triviality (exit 0 trivial, 1 not).
    Check {
        /// Braid text such as "B5: (3 4 -2 -1)^5"
        braid: String,
        #[arg(long)]
        json: bool,
    },
    /// Show the marked letters, inserted flips, s(b) and s'(b).
    Straighten {
        braid: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the left normal form.
    Nf {
        braid: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare two braids (exit 0 equal, 1 not).
    Eq { left: String, right: String },
    /// Emit a generator word: d N | r I N | b K N | R I M.
    Gen {
        kind: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<i64>,
    },
    /// Print the class representative modulo the full twist as JSON.
    Classify { braid: String },
    /// Check every fixture in a corpus file (exit 0 if all verdicts match).
    Batch {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
