//! Binary codes attached to a function f : V -> V with f(0) = 0.
//!
//! Two constructions, one linear and one not:
//!
//! - [`ParityCheck`]: the 2m x (2^m - 1) matrix whose column i is the pair
//!   (alpha^i, f(alpha^i)). Its kernel C_f generalizes the double
//!   error-correcting BCH code (the case f(x) = x^3), and C_f has minimum
//!   distance 5 exactly when f is APN.
//! - [`PreparataCode`]: the length 2^(m+1) - 1 code P_f of characteristic
//!   vectors of pairs (S, T), S a subset of V*, T a subset of V, subject to
//!   three sum conditions. P_f has minimum distance 5 exactly when f is
//!   crooked, and [`close_pair_witness`] constructs two codewords at
//!   distance <= 4 from any crookedness violation.

mod linear;
mod preparata;

pub use linear::{LinearMinDistance, ParityCheck};
pub use preparata::{close_pair_witness, is_member, ClosePair, PreparataCode, PreparataWord};

use crate::gf2m::Elem;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodesError {
    /// Preparata enumeration is materialized only for m = 3.
    TooLarge { m: u32 },
    /// Target syndrome outside the column space (rank below 2m).
    NoSolution { a: Elem, b: Elem },
    /// The close-pair construction needs a crookedness violation.
    NotAViolation,
    /// The condition-3 close-pair route needs rank 2m, i.e. an APN f.
    RequiresApn,
    /// Malformed hex encoding of a codeword.
    BadHex,
}

impl fmt::Display for CodesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CodesError::TooLarge { m } => {
                write!(f, "Preparata enumeration is limited to m = 3 (got m = {m})")
            }
            CodesError::NoSolution { a, b } => {
                write!(f, "no subset of V* has syndrome ({a}, {b})")
            }
            CodesError::NotAViolation => write!(f, "function is crooked: no close pair exists"),
            CodesError::RequiresApn => {
                write!(f, "close-pair construction for condition 3 requires an APN function")
            }
            CodesError::BadHex => write!(f, "malformed codeword hex string"),
        }
    }
}

impl std::error::Error for CodesError {}
