//! Crooked graphs and the distance-regularity machinery behind them.

mod bitgraph;
mod cover;

pub use bitgraph::{
    BitGraph, DistancePartition, DrgCounterexample, DrgVerdict, GraphError, IntersectionArray,
};
pub use cover::{CoverGraph, CoverStructureReport, MAX_GRAPH_DEGREE};
