//! The `witness` subcommand: a verified distance-<=4 pair in P_f for
//! non-crooked functions, or the message that the function is crooked.

use crooked_core::codes::{close_pair_witness, is_member, CodesError};

use crate::error::CliError;
use crate::input::{self, FunctionSource};
use crate::report::*;

#[derive(clap::Args, Debug)]
pub struct WitnessArgs {
    /// Field degree m (odd, 3..=15)
    pub m: u32,
    #[command(flatten)]
    pub source: FunctionSource,
}

pub fn run(args: &WitnessArgs, modulus: Option<u32>, seed: u64, json: bool) -> Result<(), CliError> {
    let (f, descriptor) = input::resolve(args.m, modulus, seed, &args.source)?;
    let verdict = f.is_crooked();
    let pair = if verdict.is_crooked() {
        None
    } else {
        let pair = close_pair_witness(&f, &verdict).map_err(|e| match e {
            CodesError::RequiresApn | CodesError::NoSolution { .. } => CliError::witness(format!(
                "cannot build the subset construction: {e}"
            )),
            other => CliError::witness(other.to_string()),
        })?;
        let members_verified = is_member(&f, &pair.first) && is_member(&f, &pair.second);
        Some(ClosePairJson {
            first: pair.first.to_hex(),
            second: pair.second.to_hex(),
            distance: pair.distance,
            members_verified,
        })
    };

    let report = WitnessReport {
        schema: SCHEMA_VERSION,
        input: descriptor,
        crooked: verdict.is_crooked(),
        pair,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        print!("{}", report.render_text());
    }
    Ok(())
}
