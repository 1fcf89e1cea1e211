//! Report types shared by the text and JSON output modes.
//!
//! Both modes render the same structs, so the reported values cannot
//! drift apart. JSON carries a top-level `"schema": 1` version field and
//! round-trips through serde; `timings_ms` is the only field expected to
//! vary between identical runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crooked_core::graphs::DrgCounterexample;
use crooked_core::vbf::{ApnWitness, CrookedVerdict};
use serde::{Deserialize, Serialize};

use crate::input::InputDescriptor;

pub const SCHEMA_VERSION: u32 = 1;

/// A minimum distance that is either exact or only bounded below.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DistanceValue {
    Exact(usize),
    Bound(String), // always ">=6": the search is capped at weight 5
}

impl DistanceValue {
    pub fn at_least_six() -> DistanceValue {
        DistanceValue::Bound(">=6".to_string())
    }
}

impl std::fmt::Display for DistanceValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DistanceValue::Exact(d) => write!(f, "{d}"),
            DistanceValue::Bound(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ApnSection {
    pub is_apn: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<ApnWitnessJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ApnWitnessJson {
    pub a: u16,
    pub b: u16,
    pub x1: u16,
    pub y1: u16,
    pub x2: u16,
    pub y2: u16,
}

impl From<&ApnWitness> for ApnWitnessJson {
    fn from(w: &ApnWitness) -> Self {
        ApnWitnessJson { a: w.a, b: w.b, x1: w.x1, y1: w.y1, x2: w.x2, y2: w.y2 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CrookedSection {
    pub is_crooked: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub violation: Option<ViolationJson>,
}

/// A crookedness violation: `condition` 2 (distinct-triple sum) or 3
/// (derivative shift); `a` is present only for condition 3.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ViolationJson {
    pub condition: u8,
    pub x: u16,
    pub y: u16,
    pub z: u16,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<u16>,
}

impl ViolationJson {
    pub fn from_verdict(v: &CrookedVerdict) -> Option<ViolationJson> {
        match *v {
            CrookedVerdict::Crooked => None,
            CrookedVerdict::SumViolation { x, y, z } => {
                Some(ViolationJson { condition: 2, x, y, z, a: None })
            }
            CrookedVerdict::ShiftViolation { x, y, z, a } => {
                Some(ViolationJson { condition: 3, x, y, z, a: Some(a) })
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CodeSection {
    pub n: usize,
    pub k: usize,
    pub min_distance: DistanceValue,
    pub witnesses: Vec<CodeWitnessJson>,
}

/// A minimum-weight codeword of C_f as its column support; the columns
/// XOR to the zero syndrome.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CodeWitnessJson {
    pub weight: usize,
    pub support: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PreparataSection {
    /// "enumerated" at m = 3, "membership-only" beyond.
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub min_distance: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GraphSection {
    pub vertices: usize,
    /// Common degree; None would mean the graph failed to be regular.
    pub degree: Option<usize>,
    pub connected: bool,
    pub fibres_independent: bool,
    pub perfect_matchings: bool,
    pub fibre_distance_at_least_3: bool,
    pub distance_regular: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub intersection_array: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<DrgCounterexampleJson>,
    /// None when the eccentricity-3 precondition fails.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub antipodal: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DrgCounterexampleJson {
    pub source: usize,
    pub vertex: usize,
    pub distance: usize,
    pub counts: (usize, usize, usize),
    pub expected: (usize, usize, usize),
}

impl From<&DrgCounterexample> for DrgCounterexampleJson {
    fn from(cx: &DrgCounterexample) -> Self {
        DrgCounterexampleJson {
            source: cx.source,
            vertex: cx.vertex,
            distance: cx.distance,
            counts: cx.counts,
            expected: cx.expected,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    #[serde(flatten)]
    pub input: InputDescriptor,
    pub apn: ApnSection,
    pub crooked: CrookedSection,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub code: Option<CodeSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub preparata: Option<PreparataSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph: Option<GraphSection>,
    pub timings_ms: BTreeMap<String, f64>,
}

impl AnalysisReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: {}", describe_input(&self.input));
        let _ = writeln!(out, "apn: {}", yes_no(self.apn.is_apn));
        if let Some(w) = &self.apn.witness {
            let _ = writeln!(
                out,
                "apn witness: a={} b={} pairs=({},{}),({},{})",
                w.a, w.b, w.x1, w.y1, w.x2, w.y2
            );
        }
        let _ = writeln!(out, "crooked: {}", yes_no(self.crooked.is_crooked));
        if let Some(v) = &self.crooked.violation {
            let mut line = format!(
                "crooked violation: condition={} x={} y={} z={}",
                v.condition, v.x, v.y, v.z
            );
            if let Some(a) = v.a {
                let _ = write!(line, " a={a}");
            }
            let _ = writeln!(out, "{line}");
        }
        if let Some(code) = &self.code {
            let _ = writeln!(
                out,
                "code: n={} k={} min_distance={}",
                code.n, code.k, code.min_distance
            );
            for w in &code.witnesses {
                let _ = writeln!(out, "code witness: weight={} support={:?}", w.weight, w.support);
            }
        }
        if let Some(p) = &self.preparata {
            match (p.size, p.min_distance) {
                (Some(size), Some(d)) => {
                    let _ = writeln!(out, "preparata: size={size} min_distance={d}");
                }
                (Some(size), None) => {
                    let _ = writeln!(out, "preparata: size={size} min_distance=undefined");
                }
                _ => {
                    let _ = writeln!(out, "preparata: {}", p.mode);
                }
            }
        }
        if let Some(g) = &self.graph {
            let mut line = format!(
                "graph: vertices={} degree={} connected={} fibres_independent={} perfect_matchings={} fibre_distance_ge3={} distance_regular={}",
                g.vertices,
                g.degree.map_or_else(|| "irregular".to_string(), |d| d.to_string()),
                yes_no(g.connected),
                yes_no(g.fibres_independent),
                yes_no(g.perfect_matchings),
                yes_no(g.fibre_distance_at_least_3),
                yes_no(g.distance_regular),
            );
            if let Some(ia) = &g.intersection_array {
                let _ = write!(line, " intersection_array={ia}");
            }
            if let Some(antipodal) = g.antipodal {
                let _ = write!(line, " antipodal={}", yes_no(antipodal));
            }
            let _ = writeln!(out, "{line}");
            if let Some(cx) = &g.counterexample {
                let _ = writeln!(
                    out,
                    "graph counterexample: source={} vertex={} distance={} counts={:?} expected={:?}",
                    cx.source, cx.vertex, cx.distance, cx.counts, cx.expected
                );
            }
        }
        let _ = writeln!(out, "timings_ms: {}", render_timings(&self.timings_ms));
        out
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema: u32,
    pub m: u32,
    pub modulus: u32,
    pub classes: Vec<SearchClassRow>,
    /// The census assertion: crooked holds exactly for Gold-type classes.
    pub crooked_matches_gold: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SearchClassRow {
    pub representative: u32,
    pub members: Vec<u32>,
    pub apn: bool,
    pub crooked: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gold_type: Option<GoldTypeJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GoldTypeJson {
    pub k: u32,
    pub j: u32,
}

impl SearchReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "search: m={} modulus={}", self.m, self.modulus);
        let _ = writeln!(out, "{:<14} {:<7} {:<9} {:<12} members", "representative", "apn", "crooked", "gold_type");
        for row in &self.classes {
            let gold = row
                .gold_type
                .as_ref()
                .map_or_else(|| "-".to_string(), |g| format!("(k={},j={})", g.k, g.j));
            let members: Vec<String> = row.members.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(
                out,
                "{:<14} {:<7} {:<9} {:<12} {{{}}}",
                row.representative,
                yes_no(row.apn),
                yes_no(row.crooked),
                gold,
                members.join(",")
            );
        }
        let _ = writeln!(out, "crooked matches gold-type: {}", yes_no(self.crooked_matches_gold));
        out
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessReport {
    pub schema: u32,
    #[serde(flatten)]
    pub input: InputDescriptor,
    pub crooked: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pair: Option<ClosePairJson>,
}

/// Two codewords of P_f in the hex encoding, with their Hamming distance;
/// `members_verified` records the re-check of both membership tests.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ClosePairJson {
    pub first: String,
    pub second: String,
    pub distance: usize,
    pub members_verified: bool,
}

impl WitnessReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: {}", describe_input(&self.input));
        if self.crooked {
            let _ = writeln!(out, "function is crooked");
        } else if let Some(pair) = &self.pair {
            let _ = writeln!(out, "first:  {}", pair.first);
            let _ = writeln!(out, "second: {}", pair.second);
            let _ = writeln!(out, "distance: {}", pair.distance);
            let _ = writeln!(out, "members verified: {}", yes_no(pair.members_verified));
        }
        out
    }
}

fn describe_input(d: &InputDescriptor) -> String {
    let mut s = format!("m={} modulus={}", d.m, d.modulus);
    if let Some(e) = d.exponent {
        let _ = write!(s, " power={e}");
    }
    let _ = write!(s, " digest={}", d.table_digest);
    if let Some(seed) = d.seed {
        let _ = write!(s, " seed={seed}");
    }
    s
}

fn render_timings(t: &BTreeMap<String, f64>) -> String {
    let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k}={v:.2}")).collect();
    parts.join(" ")
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}
