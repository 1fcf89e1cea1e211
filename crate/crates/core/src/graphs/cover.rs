//! The crooked graph G_f: a 2^m-fold cover of K_(2^(m+1)).
//!
//! Vertices are triples (a, i, alpha) in V x F_2 x V; distinct vertices
//! (a, i, alpha) and (b, j, beta) are adjacent exactly when
//!
//! ```text
//! alpha + beta = f(a + b) + (i + j + 1)(f(a) + f(b)).
//! ```
//!
//! The fibre F_ai = { (a, i, alpha) | alpha } is independent, and any two
//! distinct fibres are joined by a perfect matching, for every f with
//! f(0) = 0. When f is crooked, G_f is an antipodal distance-regular graph
//! with intersection array {2^(m+1)-1, 2^(m+1)-2, 1; 1, 2, 2^(m+1)-1} and
//! the fibres are the antipodal classes; conversely, that intersection
//! array forces f to be crooked.

use rayon::prelude::*;

use super::bitgraph::{BitGraph, GraphError};
use crate::gf2m::Elem;
use crate::vbf::VectorialFunction;

/// Largest m for which G_f is materialized (2^15 vertices, 128 MiB rows).
pub const MAX_GRAPH_DEGREE: u32 = 7;

/// G_f with the vertex codec (a, i, alpha) <-> a*2^(m+1) + i*2^m + alpha.
pub struct CoverGraph {
    m: u32,
    graph: BitGraph,
}

/// The three structural cover checks, reported separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverStructureReport {
    /// No edges inside any fibre.
    pub fibres_independent: bool,
    /// Every ordered pair of distinct fibres is joined by a perfect
    /// matching (each vertex has exactly one neighbor in the other fibre).
    pub perfect_matchings: bool,
    /// No two vertices of a fibre are at distance < 3 (no edge, no common
    /// neighbor).
    pub fibre_distance_at_least_3: bool,
}

impl CoverStructureReport {
    pub fn all_pass(&self) -> bool {
        self.fibres_independent && self.perfect_matchings && self.fibre_distance_at_least_3
    }
}

impl CoverGraph {
    /// Builds G_f. Guarded to m <= [`MAX_GRAPH_DEGREE`].
    ///
    /// Construction walks fibre pairs rather than vertex pairs: between
    /// F_ai and F_bj the adjacency condition matches alpha with
    /// beta = alpha + rhs for the fixed right-hand side of the pair, so
    /// the edge set is laid down in O(4^m * 2^m) bit sets.
    pub fn build(f: &VectorialFunction) -> Result<CoverGraph, GraphError> {
        let m = f.m();
        if m > MAX_GRAPH_DEGREE {
            return Err(GraphError::TooLarge { m });
        }
        let size = 1usize << m;
        let fibres = 2 * size;
        let mut graph = BitGraph::new(fibres * size);
        for fa in 0..fibres {
            let (a, i) = ((fa >> 1) as Elem, fa & 1);
            for fb in fa + 1..fibres {
                let (b, j) = ((fb >> 1) as Elem, fb & 1);
                let mut rhs = f.eval(a ^ b);
                if (i + j + 1) & 1 == 1 {
                    rhs ^= f.eval(a) ^ f.eval(b);
                }
                for alpha in 0..size as Elem {
                    let beta = alpha ^ rhs;
                    graph.add_edge(Self::encode(m, a, i as u8, alpha), Self::encode(m, b, j as u8, beta));
                }
            }
        }
        Ok(CoverGraph { m, graph })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of vertices, 2^(2m+1).
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn graph(&self) -> &BitGraph {
        &self.graph
    }

    fn encode(m: u32, a: Elem, i: u8, alpha: Elem) -> usize {
        ((a as usize) << (m + 1)) | ((i as usize) << m) | alpha as usize
    }

    /// Vertex index of (a, i, alpha).
    pub fn vertex(&self, a: Elem, i: u8, alpha: Elem) -> usize {
        Self::encode(self.m, a, i, alpha)
    }

    /// Inverse of [`CoverGraph::vertex`].
    pub fn parts(&self, v: usize) -> (Elem, u8, Elem) {
        let m = self.m;
        let alpha = (v & ((1 << m) - 1)) as Elem;
        let i = ((v >> m) & 1) as u8;
        let a = (v >> (m + 1)) as Elem;
        (a, i, alpha)
    }

    /// The vertex-index range of the fibre F_ai (contiguous by codec).
    pub fn fibre_range(&self, a: Elem, i: u8) -> std::ops::Range<usize> {
        let start = Self::encode(self.m, a, i, 0);
        start..start + (1 << self.m)
    }

    /// All fibres as (a, i) pairs in index order.
    pub fn fibres(&self) -> impl Iterator<Item = (Elem, u8)> + '_ {
        (0..2 << self.m).map(move |fi| ((fi >> 1) as Elem, (fi & 1) as u8))
    }

    /// The common degree 2^(m+1) - 1, if the graph is regular (it always
    /// is for this construction; verified rather than assumed).
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.graph.degree(0);
        (1..self.order()).all(|v| self.graph.degree(v) == d).then_some(d)
    }

    /// Verifies fibre independence, pairwise perfect matchings, and
    /// within-fibre distance >= 3, each reported separately.
    pub fn check_cover_structure(&self) -> CoverStructureReport {
        let ranges: Vec<std::ops::Range<usize>> =
            self.fibres().map(|(a, i)| self.fibre_range(a, i)).collect();

        let fibres_independent = ranges
            .par_iter()
            .all(|r| r.clone().all(|u| self.graph.row(u).count_range(r.start, r.end) == 0));

        let perfect_matchings = ranges.par_iter().enumerate().all(|(fi, r)| {
            ranges.iter().enumerate().all(|(fj, s)| {
                fi == fj
                    || r.clone().all(|u| self.graph.row(u).count_range(s.start, s.end) == 1)
            })
        });

        // Given independence, distance >= 3 within a fibre reduces to "no
        // common neighbor"; checked directly by row intersections.
        let fibre_distance_at_least_3 = ranges.par_iter().all(|r| {
            r.clone().all(|u| {
                (u + 1..r.end).all(|v| self.graph.common_neighbors(u, v) == 0)
            })
        }) && fibres_independent;

        CoverStructureReport { fibres_independent, perfect_matchings, fibre_distance_at_least_3 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2m::FieldContext;
    use crate::graphs::bitgraph::{DrgVerdict, IntersectionArray};
    use std::sync::Arc;

    fn power(m: u32, d: u32) -> VectorialFunction {
        let ctx = Arc::new(FieldContext::new(m, None).unwrap());
        VectorialFunction::from_power(ctx, d).unwrap()
    }

    #[test]
    fn gold_m3_shape() {
        let g = CoverGraph::build(&power(3, 3)).unwrap();
        assert_eq!(g.order(), 128);
        assert_eq!(g.regular_degree(), Some(15));
        // Fibres have size 2^m.
        assert_eq!(g.fibre_range(0, 0).len(), 8);
        assert_eq!(g.fibres().count(), 16);
    }

    #[test]
    fn codec_round_trips() {
        let g = CoverGraph::build(&power(3, 3)).unwrap();
        for v in 0..g.order() {
            let (a, i, alpha) = g.parts(v);
            assert_eq!(g.vertex(a, i, alpha), v);
        }
        // Codec: index = a*2^(m+1) + i*2^m + alpha.
        assert_eq!(g.vertex(5, 1, 3), 5 * 16 + 8 + 3);
    }

    #[test]
    fn same_fibre_vertices_never_adjacent() {
        // Holds for any f with f(0) = 0, not only crooked ones.
        let ctx = Arc::new(FieldContext::new(3, None).unwrap());
        let mut rng = crate::rng::SplitMix64::new(0xF1B);
        for _ in 0..10 {
            let table = crate::rng::random_table(&ctx, &mut rng);
            let f = VectorialFunction::from_table(ctx.clone(), table).unwrap();
            let g = CoverGraph::build(&f).unwrap();
            for (a, i) in g.fibres() {
                let r = g.fibre_range(a, i);
                for u in r.clone() {
                    for v in r.clone() {
                        assert!(u == v || !g.graph().has_edge(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn adjacency_matches_definition_m3() {
        let f = power(3, 3);
        let g = CoverGraph::build(&f).unwrap();
        for u in 0..g.order() {
            let (a, i, alpha) = g.parts(u);
            for v in 0..g.order() {
                let (b, j, beta) = g.parts(v);
                let mut rhs = f.eval(a ^ b);
                if (i + j + 1) & 1 == 1 {
                    rhs ^= f.eval(a) ^ f.eval(b);
                }
                let expected = u != v && alpha ^ beta == rhs;
                assert_eq!(g.graph().has_edge(u, v), expected, "({u},{v})");
            }
        }
    }

    #[test]
    fn cover_structure_gold_m3() {
        let g = CoverGraph::build(&power(3, 3)).unwrap();
        let report = g.check_cover_structure();
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn cover_structure_holds_for_non_crooked_apn() {
        // Kasami at m = 5: fibre independence and matchings hold for any
        // f with f(0) = 0.
        let g = CoverGraph::build(&power(5, 13)).unwrap();
        let report = g.check_cover_structure();
        assert!(report.fibres_independent);
        assert!(report.perfect_matchings);
    }

    #[test]
    fn layer_sizes_gold_m3() {
        let g = CoverGraph::build(&power(3, 3)).unwrap();
        for v in 0..g.order() {
            let part = g.graph().distance_partition(v);
            assert!(part.unreachable.is_empty());
            let sizes: Vec<usize> = part.layers.iter().map(|l| l.len()).collect();
            assert_eq!(sizes, vec![1, 15, 105, 7]);
            assert_eq!(part.layers[0], vec![v]);
        }
    }

    #[test]
    fn gold_graphs_are_distance_regular() {
        let g3 = CoverGraph::build(&power(3, 3)).unwrap();
        match g3.graph().intersection_array().unwrap() {
            DrgVerdict::DistanceRegular(a) => {
                assert_eq!(a, IntersectionArray::antipodal_cover(3));
                assert_eq!(a.to_string(), "{15,14,1;1,2,15}");
            }
            other => panic!("G_(x^3) at m=3 is distance-regular, got {other:?}"),
        }

        let g5 = CoverGraph::build(&power(5, 5)).unwrap();
        match g5.graph().intersection_array().unwrap() {
            DrgVerdict::DistanceRegular(a) => {
                assert_eq!(a, IntersectionArray::antipodal_cover(5));
                assert_eq!(a.to_string(), "{63,62,1;1,2,63}");
            }
            other => panic!("G_(x^5) at m=5 is distance-regular, got {other:?}"),
        }
        assert_eq!(g5.graph().is_antipodal(), Ok(true));
    }

    #[test]
    fn kasami_graph_is_not_distance_regular() {
        let g = CoverGraph::build(&power(5, 13)).unwrap();
        match g.graph().intersection_array().unwrap() {
            DrgVerdict::NotDistanceRegular(cx) => {
                // Recount honestly at the reported (source, vertex).
                let part = g.graph().distance_partition(cx.source);
                let layer_of = |v: usize| {
                    part.layers.iter().position(|l| l.contains(&v)).expect("reachable")
                };
                assert_eq!(layer_of(cx.vertex), cx.distance);
                let row = g.graph().row(cx.vertex);
                let count_in = |d: usize| {
                    part.layers
                        .get(d)
                        .map(|l| l.iter().filter(|&&v| row.get(v)).count())
                        .unwrap_or(0)
                };
                let counts = (
                    if cx.distance > 0 { count_in(cx.distance - 1) } else { 0 },
                    count_in(cx.distance),
                    count_in(cx.distance + 1),
                );
                assert_eq!(counts, cx.counts);
                assert_ne!(cx.counts, cx.expected);
            }
            other => panic!("G_(x^13) at m=5 is not distance-regular, got {other:?}"),
        }
    }

    #[test]
    fn antipodal_classes_are_fibres_for_gold_m3() {
        let g = CoverGraph::build(&power(3, 3)).unwrap();
        let classes = g.graph().antipodal_classes().unwrap().expect("Gold graph is antipodal");
        assert_eq!(classes.len(), 16);
        let fibres: Vec<Vec<usize>> =
            g.fibres().map(|(a, i)| g.fibre_range(a, i).collect()).collect();
        assert_eq!(classes, fibres);
    }

    #[test]
    fn build_guard() {
        let f = power(9, 3);
        assert!(matches!(CoverGraph::build(&f), Err(GraphError::TooLarge { m: 9 })));
    }

    #[test]
    fn two_common_neighbors_in_loop_augmented_graph_m3() {
        // For crooked f, any two vertices over distinct (a, i) base pairs
        // have exactly two common neighbors once the endpoint loops of the
        // augmented graph are counted back in.
        let f = power(3, 3);
        let g = CoverGraph::build(&f).unwrap();
        for u in 0..g.order() {
            let (a, i, _) = g.parts(u);
            for v in 0..g.order() {
                let (b, j, _) = g.parts(v);
                if (a, i) == (b, j) {
                    continue;
                }
                let loops = if g.graph().has_edge(u, v) { 2 } else { 0 };
                assert_eq!(
                    g.graph().common_neighbors(u, v) + loops,
                    2,
                    "vertices {u}, {v}"
                );
            }
        }
    }
}
