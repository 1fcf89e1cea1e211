//! Crooked functions over GF(2^m) and the combinatorial objects that
//! characterize them.
//!
//! A function f : V(m, 2) -> V(m, 2) with f(0) = 0 is *crooked* when every
//! derivative image set H_a(f) = { f(x) + f(x + a) } (a != 0) is the
//! complement of a linear hyperplane. Crookedness is equivalent to each of
//! two external properties, and this crate implements both sides of each
//! equivalence so they can be cross-verified:
//!
//! - the Preparata-like code P_f has minimum distance 5 ([`codes`]);
//! - the crooked graph G_f is an antipodal distance-regular cover of the
//!   complete graph with a prescribed intersection array ([`graphs`]).
//!
//! Supporting machinery: exact GF(2^m) arithmetic ([`gf2m`]), APN and
//! crookedness tests with verified violation witnesses ([`vbf`]), and the
//! BCH-like linear code C_f whose minimum distance detects APN-ness.

pub mod bitset;
pub mod codes;
pub mod gf2m;
pub mod graphs;
pub mod rng;
pub mod vbf;

pub use bitset::BitVec;
pub use codes::{ClosePair, CodesError, LinearMinDistance, ParityCheck, PreparataCode, PreparataWord};
pub use gf2m::{Elem, FieldContext, FieldError};
pub use graphs::{CoverGraph, DrgVerdict, GraphError, IntersectionArray};
pub use vbf::{ApnVerdict, CrookedStrategy, CrookedVerdict, PowerClass, VbfError, VectorialFunction};
