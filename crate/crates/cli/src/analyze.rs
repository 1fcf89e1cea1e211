//! The `analyze` subcommand: APN and crookedness verdicts, plus optional
//! code, Preparata, and graph stages.

use std::collections::BTreeMap;
use std::time::Instant;

use crooked_core::codes::{ParityCheck, PreparataCode};
use crooked_core::graphs::{CoverGraph, DrgVerdict, GraphError, MAX_GRAPH_DEGREE};
use crooked_core::vbf::ApnVerdict;
use crooked_core::LinearMinDistance;

use crate::error::CliError;
use crate::input::{self, FunctionSource};
use crate::report::*;

#[derive(clap::Args, Debug)]
pub struct AnalyzeArgs {
    /// Field degree m (odd, 3..=15)
    pub m: u32,
    #[command(flatten)]
    pub source: FunctionSource,
    /// Analyze the linear code C_f (dimension, minimum distance)
    #[arg(long)]
    pub code: bool,
    /// Analyze the Preparata-like code P_f (enumerated at m = 3)
    #[arg(long)]
    pub preparata: bool,
    /// Build G_f and check cover structure, distance-regularity,
    /// antipodality (m <= 7)
    #[arg(long)]
    pub graph: bool,
}

pub fn run(args: &AnalyzeArgs, modulus: Option<u32>, seed: u64, json: bool) -> Result<(), CliError> {
    if args.graph && args.m > MAX_GRAPH_DEGREE {
        return Err(CliError::guard(format!(
            "graph guard: G_f is materialized only for m <= {MAX_GRAPH_DEGREE} (got m = {})",
            args.m
        )));
    }
    let (f, descriptor) = input::resolve(args.m, modulus, seed, &args.source)?;
    let mut timings: BTreeMap<String, f64> = BTreeMap::new();

    let start = Instant::now();
    let apn_verdict = f.is_apn();
    timings.insert("apn".into(), ms_since(start));
    let apn = ApnSection {
        is_apn: apn_verdict.is_apn(),
        witness: match &apn_verdict {
            ApnVerdict::Apn => None,
            ApnVerdict::NotApn(w) => Some(w.into()),
        },
    };

    let start = Instant::now();
    let crooked_verdict = f.is_crooked();
    timings.insert("crooked".into(), ms_since(start));
    let crooked = CrookedSection {
        is_crooked: crooked_verdict.is_crooked(),
        violation: ViolationJson::from_verdict(&crooked_verdict),
    };

    let code = if args.code {
        let start = Instant::now();
        let h = ParityCheck::new(&f);
        let (min_distance, witnesses) = match h.min_distance() {
            LinearMinDistance::Exact { distance, support } => (
                DistanceValue::Exact(distance),
                vec![CodeWitnessJson { weight: support.len(), support }],
            ),
            LinearMinDistance::AtLeastSix => (DistanceValue::at_least_six(), Vec::new()),
        };
        let section = CodeSection { n: h.n(), k: h.dimension(), min_distance, witnesses };
        timings.insert("code".into(), ms_since(start));
        Some(section)
    } else {
        None
    };

    let preparata = if args.preparata {
        let start = Instant::now();
        let section = match PreparataCode::enumerate(&f) {
            Ok(code) => PreparataSection {
                mode: "enumerated".into(),
                size: Some(code.len()),
                min_distance: code.min_distance(),
            },
            // Beyond m = 3 only the membership oracle is available.
            Err(_) => PreparataSection {
                mode: format!("membership-only at m={}", f.m()),
                size: None,
                min_distance: None,
            },
        };
        timings.insert("preparata".into(), ms_since(start));
        Some(section)
    } else {
        None
    };

    let graph = if args.graph {
        let start = Instant::now();
        let cover = CoverGraph::build(&f)
            .map_err(|e| CliError::guard(format!("graph guard: {e}")))?;
        let structure = cover.check_cover_structure();
        let (connected, distance_regular, intersection_array, counterexample) =
            match cover.graph().intersection_array() {
                Ok(DrgVerdict::DistanceRegular(a)) => (true, true, Some(a.to_string()), None),
                Ok(DrgVerdict::NotDistanceRegular(cx)) => (true, false, None, Some((&cx).into())),
                Err(GraphError::Disconnected) => (false, false, None, None),
                Err(e) => return Err(CliError::guard(e.to_string())),
            };
        // None when the eccentricity-3 precondition fails.
        let antipodal = cover.graph().is_antipodal().ok();
        let section = GraphSection {
            vertices: cover.order(),
            degree: cover.regular_degree(),
            connected,
            fibres_independent: structure.fibres_independent,
            perfect_matchings: structure.perfect_matchings,
            fibre_distance_at_least_3: structure.fibre_distance_at_least_3,
            distance_regular,
            intersection_array,
            counterexample,
            antipodal,
        };
        timings.insert("graph".into(), ms_since(start));
        Some(section)
    } else {
        None
    };

    let report = AnalysisReport {
        schema: SCHEMA_VERSION,
        input: descriptor,
        apn,
        crooked,
        code,
        preparata,
        graph,
        timings_ms: timings,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        print!("{}", report.render_text());
    }
    Ok(())
}

fn ms_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}
