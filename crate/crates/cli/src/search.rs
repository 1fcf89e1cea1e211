//! The `search` subcommand: classify every power exponent at degree m by
//! cyclotomic class, checking the census claim crooked <=> Gold-type.

use crooked_core::vbf::{classify_power_exponent, cyclotomic_class, PowerClass};
use crooked_core::VectorialFunction;

use crate::error::CliError;
use crate::input;
use crate::report::*;

/// Exponent census guard: the crookedness sweep is exhaustive per class.
pub const MAX_SEARCH_DEGREE: u32 = 9;

#[derive(clap::Args, Debug)]
pub struct SearchArgs {
    /// Field degree m (odd, 3..=9 for the census)
    pub m: u32,
}

pub fn run(args: &SearchArgs, modulus: Option<u32>, json: bool) -> Result<(), CliError> {
    if args.m > MAX_SEARCH_DEGREE {
        return Err(CliError::guard(format!(
            "search guard: the exponent census is limited to m <= {MAX_SEARCH_DEGREE} (got m = {})",
            args.m
        )));
    }
    let ctx = input::field(args.m, modulus)?;
    let max_d = (ctx.size() - 2) as u32;

    let mut classes = Vec::new();
    let mut crooked_matches_gold = true;
    let mut seen = vec![false; ctx.size()];
    for d in 1..=max_d {
        if seen[d as usize] {
            continue;
        }
        let members = cyclotomic_class(args.m, d);
        for &e in &members {
            seen[e as usize] = true;
        }
        let representative = members[0];
        let f = VectorialFunction::from_power(ctx.clone(), representative)
            .expect("representative is in range");
        let apn = f.is_apn().is_apn();
        let crooked = f.is_crooked().is_crooked();
        let gold_type = match classify_power_exponent(args.m, representative)
            .expect("representative is in range")
        {
            PowerClass::GoldType { k, j } => Some(GoldTypeJson { k, j }),
            PowerClass::NotGoldType => None,
        };
        if crooked != gold_type.is_some() {
            crooked_matches_gold = false;
        }
        classes.push(SearchClassRow { representative, members, apn, crooked, gold_type });
    }

    let report = SearchReport {
        schema: SCHEMA_VERSION,
        m: args.m,
        modulus: ctx.modulus(),
        classes,
        crooked_matches_gold,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        print!("{}", report.render_text());
    }
    if !crooked_matches_gold {
        // The census assertion failed; this would contradict the power
        // function classification and deserves a loud exit.
        return Err(CliError { code: 1, message: "crooked/Gold-type census mismatch".into() });
    }
    Ok(())
}
