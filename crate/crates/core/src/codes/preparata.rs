//! The Preparata-like nonlinear code P_f and the close-pair construction.
//!
//! A codeword is the characteristic vector of a pair (S, T) with S a subset
//! of V* and T a subset of V such that
//!
//! - |T| is even,
//! - the XOR-sum of S equals the XOR-sum of T, and
//! - f(sum S) = (XOR of f over S) + (XOR of f over T).
//!
//! Coordinates are frozen as: positions 0..n hold S indexed by discrete
//! logarithm (position i = alpha^i), positions n..n+2^m hold T indexed by
//! element value. Total length 2^(m+1) - 1. For f(x) = x^3 this is the
//! classical Preparata code.

use super::{CodesError, ParityCheck};
use crate::bitset::BitVec;
use crate::gf2m::{Elem, FieldContext};
use crate::vbf::{CrookedVerdict, VectorialFunction};

/// One codeword candidate of P_f: an (S, T) pair as a characteristic
/// vector of length 2^(m+1) - 1, S-block first.
#[derive(Clone, PartialEq, Eq)]
pub struct PreparataWord {
    m: u32,
    bits: BitVec,
}

impl std::fmt::Debug for PreparataWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PreparataWord(m={}, hex={})", self.m, self.to_hex())
    }
}

impl PreparataWord {
    /// Vector length for degree m: 2^(m+1) - 1.
    pub fn length(m: u32) -> usize {
        (1 << (m + 1)) - 1
    }

    /// The zero word (S and T both empty).
    pub fn zero(m: u32) -> PreparataWord {
        PreparataWord { m, bits: BitVec::new(Self::length(m)) }
    }

    /// Builds the word for explicit sets of field elements. Duplicates in
    /// a set cancel (symmetric-difference semantics); S entries must be
    /// nonzero.
    pub fn from_sets(ctx: &FieldContext, s: &[Elem], t: &[Elem]) -> PreparataWord {
        let mut word = Self::zero(ctx.m());
        for &r in s {
            word.flip_s(ctx, r);
        }
        for &e in t {
            word.flip_t(e);
        }
        word
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Characteristic-vector length, 2^(m+1) - 1.
    pub fn bit_len(&self) -> usize {
        self.bits.len()
    }

    fn n(&self) -> usize {
        (1 << self.m) - 1
    }

    /// Toggle membership of the nonzero element r in S.
    pub fn flip_s(&mut self, ctx: &FieldContext, r: Elem) {
        let i = ctx.log(r).expect("S is a subset of V*: elements are nonzero");
        self.bits.flip(i);
    }

    /// Toggle membership of the element e in T.
    pub fn flip_t(&mut self, e: Elem) {
        let n = self.n();
        self.bits.flip(n + e as usize);
    }

    /// S-block positions (discrete logarithms), ascending.
    pub fn s_positions(&self) -> Vec<usize> {
        self.bits.ones().take_while(|&i| i < self.n()).collect()
    }

    /// S as field elements.
    pub fn s_elements(&self, ctx: &FieldContext) -> Vec<Elem> {
        self.s_positions().iter().map(|&i| ctx.exp(i)).collect()
    }

    /// T as field elements, ascending.
    pub fn t_elements(&self) -> Vec<Elem> {
        let n = self.n();
        self.bits.ones().filter(|&i| i >= n).map(|i| (i - n) as Elem).collect()
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn distance(&self, other: &PreparataWord) -> usize {
        self.bits.hamming(&other.bits)
    }

    /// Hex encoding of the characteristic vector, S-block first: digit g
    /// covers positions 4g..4g+4 with position 4g as the most significant
    /// bit of the nibble.
    pub fn to_hex(&self) -> String {
        let len = self.bit_len();
        let mut out = String::with_capacity(len.div_ceil(4));
        for g in 0..len.div_ceil(4) {
            let mut nibble = 0u8;
            for off in 0..4 {
                let pos = 4 * g + off;
                if pos < len && self.bits.get(pos) {
                    nibble |= 1 << (3 - off);
                }
            }
            out.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        out
    }

    /// Inverse of [`PreparataWord::to_hex`].
    pub fn from_hex(m: u32, hex: &str) -> Result<PreparataWord, CodesError> {
        let len = Self::length(m);
        let expected_digits = len.div_ceil(4);
        let digits: Vec<u8> = hex
            .chars()
            .map(|c| c.to_digit(16).map(|d| d as u8).ok_or(CodesError::BadHex))
            .collect::<Result<_, _>>()?;
        if digits.len() != expected_digits {
            return Err(CodesError::BadHex);
        }
        let mut word = Self::zero(m);
        for (g, &d) in digits.iter().enumerate() {
            for off in 0..4 {
                if d & (1 << (3 - off)) != 0 {
                    let pos = 4 * g + off;
                    if pos >= len {
                        return Err(CodesError::BadHex);
                    }
                    word.bits.set(pos);
                }
            }
        }
        Ok(word)
    }
}

/// The three membership conditions for (S, T) in P_f.
pub fn is_member(f: &VectorialFunction, word: &PreparataWord) -> bool {
    debug_assert_eq!(f.m(), word.m());
    let ctx = f.ctx();
    let mut s_sum: Elem = 0;
    let mut s_fsum: Elem = 0;
    for i in word.s_positions() {
        let r = ctx.exp(i);
        s_sum ^= r;
        s_fsum ^= f.eval(r);
    }
    let mut t_sum: Elem = 0;
    let mut t_fsum: Elem = 0;
    let mut t_count = 0usize;
    for e in word.t_elements() {
        t_sum ^= e;
        t_fsum ^= f.eval(e);
        t_count += 1;
    }
    t_count.is_multiple_of(2) && s_sum == t_sum && f.eval(s_sum) == s_fsum ^ t_fsum
}

/// P_f materialized as a word list. Only m = 3 is enumerable (the word
/// count for crooked f is 2^(2^(m+1) - 2m - 2)); membership via
/// [`is_member`] works for every m.
pub struct PreparataCode {
    m: u32,
    words: Vec<PreparataWord>,
}

impl PreparataCode {
    /// Enumerates P_f by scanning all (S, T) pairs through the membership
    /// conditions: 2^n * 2^(2^m) = 2^15 candidates at m = 3.
    pub fn enumerate(f: &VectorialFunction) -> Result<PreparataCode, CodesError> {
        let m = f.m();
        if m != 3 {
            return Err(CodesError::TooLarge { m });
        }
        let n = (1usize << m) - 1;
        let size = 1usize << m;
        let mut words = Vec::new();
        for s_mask in 0..(1u32 << n) {
            for t_mask in 0..(1u32 << size) {
                let mut word = PreparataWord::zero(m);
                for i in 0..n {
                    if s_mask & (1 << i) != 0 {
                        word.bits.set(i);
                    }
                }
                for e in 0..size {
                    if t_mask & (1 << e) != 0 {
                        word.bits.set(n + e);
                    }
                }
                if is_member(f, &word) {
                    words.push(word);
                }
            }
        }
        Ok(PreparataCode { m, words })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[PreparataWord] {
        &self.words
    }

    /// Minimum pairwise Hamming distance (the code is nonlinear, so this
    /// is not a minimum weight). `None` for codes with fewer than two
    /// words, where the minimum is undefined.
    pub fn min_distance(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for i in 0..self.words.len() {
            for j in i + 1..self.words.len() {
                let d = self.words[i].distance(&self.words[j]);
                if best.is_none_or(|b| d < b) {
                    best = Some(d);
                }
            }
        }
        best
    }
}

/// Two distinct words of P_f at Hamming distance <= 4, refuting minimum
/// distance 5 for a non-crooked f.
#[derive(Debug, Clone)]
pub struct ClosePair {
    pub first: PreparataWord,
    pub second: PreparataWord,
    pub distance: usize,
}

/// Builds a verified close pair from a crookedness violation.
///
/// For a condition-2 violation (x, y, z) the pair is the zero word and
/// (empty, {x, y, z, x+y+z}), at distance 4. For a condition-3 violation
/// the subset construction is followed: pick
/// (xt, yt, zt, a) with D_a(xt) + D_a(yt) + D_a(zt) = 0, let T = {xt, 0}
/// and S solve (sum, f-sum) = (xt, 0), then flip {yt, yt+a} in S and
/// {zt, zt+a} in T. Membership of both words is re-verified rather than
/// trusted from the algebra.
pub fn close_pair_witness(
    f: &VectorialFunction,
    verdict: &CrookedVerdict,
) -> Result<ClosePair, CodesError> {
    let ctx = f.ctx();
    match *verdict {
        CrookedVerdict::Crooked => Err(CodesError::NotAViolation),
        CrookedVerdict::SumViolation { x, y, z } => {
            let w = x ^ y ^ z;
            let first = PreparataWord::zero(f.m());
            let second = PreparataWord::from_sets(ctx, &[], &[x, y, z, w]);
            finish_pair(f, first, second)
        }
        CrookedVerdict::ShiftViolation { x, y, z, a } => {
            let h = ParityCheck::new(f);
            if h.rank() != h.rows() {
                return Err(CodesError::RequiresApn);
            }
            let (xt, yt, zt, dir) = constrained_shift_witness(f, x, y, z, a)
                .expect("a condition-3 violation admits a constrained witness");
            let s_indices = h.solve_subset(xt, 0)?;
            let mut first = PreparataWord::zero(f.m());
            for i in s_indices {
                first.bits.set(i);
            }
            first.flip_t(xt);
            first.flip_t(0);
            let mut second = first.clone();
            second.flip_s(ctx, yt);
            second.flip_s(ctx, yt ^ dir);
            second.flip_t(zt);
            second.flip_t(zt ^ dir);
            finish_pair(f, first, second)
        }
    }
}

fn finish_pair(
    f: &VectorialFunction,
    first: PreparataWord,
    second: PreparataWord,
) -> Result<ClosePair, CodesError> {
    assert!(is_member(f, &first), "constructed word left P_f; construction bug");
    assert!(is_member(f, &second), "constructed word left P_f; construction bug");
    let distance = first.distance(&second);
    assert!(distance <= 4 && distance > 0, "pair distance {distance} out of range");
    Ok(ClosePair { first, second, distance })
}

/// A condition-3 witness (xt, yt, zt, a) usable by the subset construction:
/// D_a(xt) + D_a(yt) + D_a(zt) = 0 with xt != 0 (so |T| = 2) and
/// yt not in {0, a} (so the flipped S entries stay in V*).
///
/// Tries permutations of the given witness first, then scans directions.
fn constrained_shift_witness(
    f: &VectorialFunction,
    x: Elem,
    y: Elem,
    z: Elem,
    a: Elem,
) -> Option<(Elem, Elem, Elem, Elem)> {
    let deriv = |a: Elem, v: Elem| f.eval(v) ^ f.eval(v ^ a);
    let ok = |xt: Elem, yt: Elem, zt: Elem, dir: Elem| {
        dir != 0
            && xt != 0
            && yt != 0
            && yt != dir
            && deriv(dir, xt) ^ deriv(dir, yt) ^ deriv(dir, zt) == 0
    };
    for (xt, yt, zt) in
        [(x, y, z), (x, z, y), (y, x, z), (y, z, x), (z, x, y), (z, y, x)]
    {
        if ok(xt, yt, zt, a) {
            return Some((xt, yt, zt, a));
        }
    }
    // Scan: smallest direction, then lexicographic (xt, yt); zt is the
    // first preimage of the required derivative value.
    let size = f.ctx().size();
    for dir in 1..size as Elem {
        let row: Vec<Elem> = (0..size).map(|v| deriv(dir, v as Elem)).collect();
        const UNSEEN: u16 = u16::MAX;
        let mut first_pre = vec![UNSEEN; size];
        for (v, &d) in row.iter().enumerate() {
            if first_pre[d as usize] == UNSEEN {
                first_pre[d as usize] = v as u16;
            }
        }
        for xt in 1..size {
            for yt in 1..size {
                if yt == dir as usize {
                    continue;
                }
                let target = (row[xt] ^ row[yt]) as usize;
                if first_pre[target] != UNSEEN {
                    return Some((xt as Elem, yt as Elem, first_pre[target], dir));
                }
            }
        }
    }
    None
}
