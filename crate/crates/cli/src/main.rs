//! `crooked`: analyze functions over GF(2^m) for almost perfect
//! nonlinearity and crookedness, cross-checked through the BCH-like code
//! C_f, the Preparata-like code P_f, and the crooked graph G_f.

mod analyze;
mod error;
mod export;
mod input;
mod report;
mod search;
mod witness;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

const FEASIBILITY: &str = "\
Feasibility guards (hard-coded per stage; exceeding one exits with code 3):
  analyze --preparata   enumeration at m = 3 only; membership-only beyond
  analyze --graph       m <= 7 (2^(2m+1) vertices; the full m = 7
                        regularity sweep takes minutes to tens of minutes
                        depending on cores; m <= 5 is instant)
  export-graph          m <= 7
  search                m <= 9

Exit codes: 0 ok, 2 malformed input, 3 guard violation, 4 witness
construction precondition failure.";

#[derive(Parser, Debug)]
#[command(name = "crooked", version, about, after_help = FEASIBILITY)]
struct Cli {
    /// Emit JSON (schema 1) instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Field modulus as a decimal bitmask (default: built-in per m)
    #[arg(long, global = true, value_name = "DEC")]
    modulus: Option<u32>,
    /// Seed for --random truth tables
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze one function: APN, crookedness, and optional code/graph stages
    Analyze(analyze::AnalyzeArgs),
    /// Classify all power exponents d in [1, 2^m - 2] by cyclotomic class
    Search(search::SearchArgs),
    /// Print a verified distance-<=4 pair in P_f, or "function is crooked"
    Witness(witness::WitnessArgs),
    /// Export G_f as an edge list with a JSON header
    #[command(name = "export-graph")]
    ExportGraph(export::ExportArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(args) => analyze::run(args, cli.modulus, cli.seed, cli.json),
        Command::Search(args) => search::run(args, cli.modulus, cli.json),
        Command::Witness(args) => witness::run(args, cli.modulus, cli.seed, cli.json),
        Command::ExportGraph(args) => export::run(args, cli.modulus, cli.seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
