//! The `export-graph` subcommand: G_f as an edge list for external graph
//! tools. Line 1 is a JSON header; every following line is one edge
//! "u v" with u < v, ascending, indices per the vertex codec
//! (a, i, alpha) -> a*2^(m+1) + i*2^m + alpha.

use std::io::{BufWriter, Write};
use std::path::PathBuf;

use crooked_core::graphs::{CoverGraph, MAX_GRAPH_DEGREE};
use serde::Serialize;

use crate::error::CliError;
use crate::input::{self, FunctionSource};

#[derive(clap::Args, Debug)]
pub struct ExportArgs {
    /// Field degree m (odd, 3..=7 for graph export)
    pub m: u32,
    #[command(flatten)]
    pub source: FunctionSource,
    /// Output file (default: stdout)
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Serialize)]
struct ExportHeader {
    m: u32,
    modulus: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    exponent: Option<u32>,
    #[serde(rename = "N")]
    n: usize,
    degree: usize,
}

pub fn run(args: &ExportArgs, modulus: Option<u32>, seed: u64) -> Result<(), CliError> {
    if args.m > MAX_GRAPH_DEGREE {
        return Err(CliError::guard(format!(
            "graph guard: G_f is materialized only for m <= {MAX_GRAPH_DEGREE} (got m = {})",
            args.m
        )));
    }
    let (f, descriptor) = input::resolve(args.m, modulus, seed, &args.source)?;
    let cover = CoverGraph::build(&f).map_err(|e| CliError::guard(e.to_string()))?;
    let header = ExportHeader {
        m: descriptor.m,
        modulus: descriptor.modulus,
        exponent: descriptor.exponent,
        n: cover.order(),
        degree: cover.regular_degree().unwrap_or(0),
    };

    let sink: Box<dyn Write> = match &args.output {
        Some(path) => Box::new(
            std::fs::File::create(path)
                .map_err(|e| CliError::input(format!("cannot create {}: {e}", path.display())))?,
        ),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    let write = |out: &mut BufWriter<Box<dyn Write>>| -> std::io::Result<()> {
        writeln!(out, "{}", serde_json::to_string(&header).expect("header serializes"))?;
        for (u, v) in cover.graph().edges() {
            writeln!(out, "{u} {v}")?;
        }
        out.flush()
    };
    write(&mut out).map_err(|e| CliError::input(format!("write failed: {e}")))
}
