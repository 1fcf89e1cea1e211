//! Function ingestion: power exponents, truth-table files, seeded random
//! tables.

use std::path::PathBuf;
use std::sync::Arc;

use crooked_core::gf2m::FieldContext;
use crooked_core::rng::{random_table, SplitMix64};
use crooked_core::VectorialFunction;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Exactly one function source per invocation.
#[derive(clap::Args, Debug)]
#[group(required = true, multiple = false)]
pub struct FunctionSource {
    /// Power function f(x) = x^d
    #[arg(long, value_name = "D")]
    pub power: Option<u32>,
    /// Truth-table file (line 1: m, line 2: modulus, line 3: table)
    #[arg(long, value_name = "FILE")]
    pub tt: Option<PathBuf>,
    /// Seeded random truth table with f(0) = 0 (see --seed)
    #[arg(long)]
    pub random: bool,
}

/// What was analyzed; every claim in a report is reproducible from this.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InputDescriptor {
    pub m: u32,
    pub modulus: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exponent: Option<u32>,
    /// FNV-1a digest of the truth table, little-endian u16 entries.
    pub table_digest: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

pub fn resolve(
    m: u32,
    modulus: Option<u32>,
    seed: u64,
    source: &FunctionSource,
) -> Result<(VectorialFunction, InputDescriptor), CliError> {
    let f = if let Some(d) = source.power {
        let ctx = field(m, modulus)?;
        VectorialFunction::from_power(ctx, d).map_err(|e| CliError::input(e.to_string()))?
    } else if let Some(path) = &source.tt {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        let f = VectorialFunction::parse_table_text(&text)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        if f.m() != m {
            return Err(CliError::input(format!(
                "{} is for m = {}, but m = {m} was requested",
                path.display(),
                f.m()
            )));
        }
        if let Some(q) = modulus {
            if q != f.ctx().modulus() {
                return Err(CliError::input(format!(
                    "--modulus {q} conflicts with modulus {} recorded in {}",
                    f.ctx().modulus(),
                    path.display()
                )));
            }
        }
        f
    } else {
        let ctx = field(m, modulus)?;
        let mut rng = SplitMix64::new(seed);
        let table = random_table(&ctx, &mut rng);
        VectorialFunction::from_table(ctx, table).expect("random tables are valid")
    };

    let descriptor = InputDescriptor {
        m,
        modulus: f.ctx().modulus(),
        exponent: source.power,
        table_digest: format!("{:016x}", f.table_digest()),
        seed: source.random.then_some(seed),
    };
    Ok((f, descriptor))
}

pub fn field(m: u32, modulus: Option<u32>) -> Result<Arc<FieldContext>, CliError> {
    FieldContext::new(m, modulus)
        .map(Arc::new)
        .map_err(|e| CliError::input(e.to_string()))
}
