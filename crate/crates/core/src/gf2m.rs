//! Arithmetic in GF(2^m) for odd m, backed by log/antilog tables.
//!
//! Elements are integers in [0, 2^m) under the polynomial basis: bit j is
//! the coefficient of x^j, so the vector-space view of V(m, 2) and the
//! field view coincide. Addition is bitwise XOR. Multiplication reduces
//! modulo a primitive polynomial and is served from exponent/logarithm
//! tables for the primitive element alpha = x built at construction time.
//!
//! The modulus is an explicit parameter: downstream objects depend on the
//! identification of V with GF(2^m) only up to equivalence, so the chosen
//! modulus is carried in the context and recorded in every report.

use std::fmt;

/// A field element (also a vector in V(m, 2)); valid values are `0..2^m`.
pub type Elem = u16;

/// Smallest supported field degree.
pub const MIN_DEGREE: u32 = 3;
/// Largest supported field degree (table sizes stay modest).
pub const MAX_DEGREE: u32 = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldError {
    /// m must be odd and within [`MIN_DEGREE`]..=[`MAX_DEGREE`].
    UnsupportedDegree { m: u32 },
    /// The modulus must have degree exactly m and constant term 1.
    InvalidModulus { m: u32, modulus: u32 },
    /// x does not have multiplicative order 2^m - 1 under this modulus.
    NonPrimitiveModulus { modulus: u32 },
    /// No built-in default modulus for this degree.
    NoDefaultModulus { m: u32 },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FieldError::UnsupportedDegree { m } => {
                write!(f, "unsupported degree m = {m}: need odd m in {MIN_DEGREE}..={MAX_DEGREE}")
            }
            FieldError::InvalidModulus { m, modulus } => {
                write!(f, "modulus {modulus:#b} is not a degree-{m} polynomial with constant term 1")
            }
            FieldError::NonPrimitiveModulus { modulus } => {
                write!(f, "modulus {modulus:#b} is not primitive (x has short order)")
            }
            FieldError::NoDefaultModulus { m } => write!(f, "no default modulus for m = {m}"),
        }
    }
}

impl std::error::Error for FieldError {}

/// Built-in primitive modulus for each supported odd degree.
///
/// These are conventional choices (low-weight primitive polynomials); all
/// are revalidated by the order check in [`FieldContext::new`].
pub fn default_modulus(m: u32) -> Option<u32> {
    match m {
        3 => Some(0b1011),              // x^3 + x + 1
        5 => Some(0b100101),            // x^5 + x^2 + 1
        7 => Some(0b1000_1001),         // x^7 + x^3 + 1
        9 => Some(0b10_0001_0001),      // x^9 + x^4 + 1
        11 => Some(0b1000_0000_0101),   // x^11 + x^2 + 1
        13 => Some(0b10_0000_0001_1011), // x^13 + x^4 + x^3 + x + 1
        15 => Some(0b1000_0000_0000_0011), // x^15 + x + 1
        _ => None,
    }
}

/// GF(2^m) with exp/log tables for the primitive element alpha = x.
///
/// Immutable after construction; safe to share across threads.
#[derive(Clone)]
pub struct FieldContext {
    m: u32,
    modulus: u32,
    /// exp[i] = alpha^i for i in 0..n; exp[0] = 1.
    exp: Vec<Elem>,
    /// log[a] = i with exp[i] = a, for a != 0; log[0] is a sentinel.
    log: Vec<u16>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

const LOG_SENTINEL: u16 = u16::MAX;

impl FieldContext {
    /// Builds GF(2^m). With `modulus = None` the built-in default is used.
    pub fn new(m: u32, modulus: Option<u32>) -> Result<FieldContext, FieldError> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&m) || m.is_multiple_of(2) {
            return Err(FieldError::UnsupportedDegree { m });
        }
        let modulus = match modulus {
            Some(q) => q,
            None => default_modulus(m).ok_or(FieldError::NoDefaultModulus { m })?,
        };
        // Degree exactly m, constant term 1.
        if modulus & 1 == 0 || 32 - modulus.leading_zeros() != m + 1 {
            return Err(FieldError::InvalidModulus { m, modulus });
        }

        let size = 1usize << m;
        let n = size - 1;
        let mut exp = vec![0 as Elem; n];
        let mut log = vec![LOG_SENTINEL; size];
        let mut cur: u32 = 1;
        for i in 0..n {
            if log[cur as usize] != LOG_SENTINEL {
                // Revisited an element before covering all of V*: short order.
                return Err(FieldError::NonPrimitiveModulus { modulus });
            }
            exp[i] = cur as Elem;
            log[cur as usize] = i as u16;
            cur <<= 1;
            if cur & (1 << m) != 0 {
                cur ^= modulus;
            }
        }
        if cur != 1 {
            return Err(FieldError::NonPrimitiveModulus { modulus });
        }
        Ok(FieldContext { m, modulus, exp, log })
    }

    /// Field degree m.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// The defining modulus as a bitmask.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, 2^m.
    pub fn size(&self) -> usize {
        1 << self.m
    }

    /// Order of the multiplicative group, n = 2^m - 1.
    pub fn n(&self) -> usize {
        (1 << self.m) - 1
    }

    /// The primitive element alpha = x.
    pub fn alpha(&self) -> Elem {
        self.exp[1]
    }

    /// alpha^i, with i taken modulo n.
    pub fn exp(&self, i: usize) -> Elem {
        self.exp[i % self.n()]
    }

    /// The full antilog table alpha^0 .. alpha^(n-1).
    pub fn exp_table(&self) -> &[Elem] {
        &self.exp
    }

    /// Discrete logarithm of a nonzero element.
    pub fn log(&self, a: Elem) -> Option<usize> {
        if a == 0 {
            None
        } else {
            Some(self.log[a as usize] as usize)
        }
    }

    /// Field addition (bitwise XOR); every element is its own negative.
    pub fn add(a: Elem, b: Elem) -> Elem {
        a ^ b
    }

    /// Field multiplication via the log tables.
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            0
        } else {
            let i = self.log[a as usize] as usize + self.log[b as usize] as usize;
            self.exp[i % self.n()]
        }
    }

    /// a^e, reducing the exponent modulo n for a != 0.
    ///
    /// By convention `pow(0, 0) = 1` (the empty product); `pow(0, e) = 0`
    /// for e > 0.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = self.n() as u64;
        let i = (self.log[a as usize] as u64 * (e % n)) % n;
        self.exp[i as usize]
    }

    /// All elements 0..2^m.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size() as Elem
    }

    /// All nonzero elements 1..2^m.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        1..self.size() as Elem
    }
}

/// GF(2) inner product of two coordinate vectors: parity of `a & b`.
pub fn dot(a: Elem, b: Elem) -> u8 {
    ((a & b).count_ones() & 1) as u8
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    /// Oracle: carry-less product followed by explicit long division,
    /// independent of the table-based path.
    fn poly_mul_mod(a: u32, b: u32, modulus: u32, m: u32) -> u32 {
        let mut prod: u64 = 0;
        for j in 0..32 {
            if b & (1 << j) != 0 {
                prod ^= (a as u64) << j;
            }
        }
        let mdeg = m as i32;
        for d in (mdeg..64).rev() {
            if prod & (1u64 << d) != 0 {
                prod ^= (modulus as u64) << (d - mdeg);
            }
        }
        prod as u32
    }

    /// Oracle: irreducibility over F_2 by trial division.
    fn is_reducible(q: u32) -> bool {
        let deg = 31 - q.leading_zeros();
        for d in 1..=deg / 2 {
            for low in 0..(1u32 << d) {
                let div = (1 << d) | low;
                // Long division of q by div; remainder zero means a factor.
                let mut rem = q;
                while rem != 0 && 31 - rem.leading_zeros() >= d {
                    let shift = (31 - rem.leading_zeros()) - d;
                    rem ^= div << shift;
                }
                if rem == 0 {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn exp_table_m3_matches_long_division_oracle() {
        let ctx = FieldContext::new(3, Some(0b1011)).unwrap();
        assert_eq!(ctx.exp_table(), &[1, 2, 4, 3, 6, 7, 5]);
        // Cross-check every entry against the oracle.
        let mut cur = 1u32;
        for i in 0..ctx.n() {
            assert_eq!(ctx.exp_table()[i] as u32, cur, "exp[{i}]");
            cur = poly_mul_mod(cur, 2, 0b1011, 3);
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^3 + x^2 + x + 1 = (x + 1)(x^2 + 1)
        assert!(is_reducible(0b1111));
        assert_eq!(
            FieldContext::new(3, Some(0b1111)).unwrap_err(),
            FieldError::NonPrimitiveModulus { modulus: 0b1111 }
        );
    }

    #[test]
    fn even_or_out_of_range_degree_rejected() {
        assert_eq!(FieldContext::new(4, None).unwrap_err(), FieldError::UnsupportedDegree { m: 4 });
        assert_eq!(FieldContext::new(1, None).unwrap_err(), FieldError::UnsupportedDegree { m: 1 });
        assert_eq!(FieldContext::new(17, None).unwrap_err(), FieldError::UnsupportedDegree { m: 17 });
    }

    #[test]
    fn wrong_degree_modulus_rejected() {
        assert_eq!(
            FieldContext::new(5, Some(0b1011)).unwrap_err(),
            FieldError::InvalidModulus { m: 5, modulus: 0b1011 }
        );
        assert_eq!(
            FieldContext::new(3, Some(0b1010)).unwrap_err(),
            FieldError::InvalidModulus { m: 3, modulus: 0b1010 }
        );
    }

    #[test]
    fn all_default_moduli_are_primitive() {
        for m in (MIN_DEGREE..=MAX_DEGREE).step_by(2) {
            let ctx = FieldContext::new(m, None).unwrap();
            assert_eq!(ctx.exp_table().len(), ctx.n());
        }
    }

    #[test]
    fn mul_examples_m3() {
        let ctx = FieldContext::new(3, Some(0b1011)).unwrap();
        assert_eq!(ctx.mul(2, 4), 3); // x * x^2 = x^3 = x + 1
        assert_eq!(ctx.mul(5, 7), 6);
        assert_eq!(ctx.mul(5, 7) as u32, poly_mul_mod(5, 7, 0b1011, 3));
        for a in ctx.elements() {
            assert_eq!(ctx.mul(a, 1), a);
            assert_eq!(ctx.mul(a, 0), 0);
        }
    }

    #[test]
    fn mul_agrees_with_oracle_exhaustively_m5() {
        let ctx = FieldContext::new(5, None).unwrap();
        for a in ctx.elements() {
            for b in ctx.elements() {
                assert_eq!(
                    ctx.mul(a, b) as u32,
                    poly_mul_mod(a as u32, b as u32, ctx.modulus(), 5)
                );
            }
        }
    }

    #[test]
    fn pow_examples() {
        let ctx = FieldContext::new(3, Some(0b1011)).unwrap();
        assert_eq!(ctx.pow(ctx.alpha(), ctx.n() as u64), 1);
        // 5 = alpha^6, so 5^3 = alpha^18 = alpha^4 = 6.
        assert_eq!(ctx.pow(5, 3), 6);
        assert_eq!(ctx.pow(0, 5), 0);
        assert_eq!(ctx.pow(0, 0), 1);
        // pow agrees with repeated multiplication.
        for a in ctx.elements() {
            let mut acc: Elem = 1;
            for e in 0..ctx.n() as u64 {
                assert_eq!(ctx.pow(a, e), acc, "a={a} e={e}");
                acc = ctx.mul(acc, a);
            }
        }
    }

    #[test]
    fn lagrange_and_exp_consistency() {
        for m in [3u32, 5, 7] {
            let ctx = FieldContext::new(m, None).unwrap();
            for a in ctx.nonzero_elements() {
                assert_eq!(ctx.pow(a, ctx.n() as u64), 1);
            }
            for i in 0..ctx.n() {
                assert_eq!(ctx.exp(i), ctx.pow(ctx.alpha(), i as u64));
            }
        }
    }

    #[test]
    fn field_axioms_on_random_triples() {
        for m in (MIN_DEGREE..=MAX_DEGREE).step_by(2) {
            let ctx = FieldContext::new(m, None).unwrap();
            let mask = (ctx.size() - 1) as u64;
            let mut rng = SplitMix64::new(0x95EC + m as u64);
            for _ in 0..500 {
                let a = (rng.next_u64() & mask) as Elem;
                let b = (rng.next_u64() & mask) as Elem;
                let c = (rng.next_u64() & mask) as Elem;
                assert_eq!(a ^ a, 0);
                assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
                assert_eq!(ctx.mul(a, ctx.mul(b, c)), ctx.mul(ctx.mul(a, b), c));
                assert_eq!(ctx.mul(a, b ^ c), ctx.mul(a, b) ^ ctx.mul(a, c));
            }
        }
    }

    #[test]
    fn dot_is_bilinear() {
        for a in 0..16 {
            for b in 0..16 {
                for c in 0..16 {
                    assert_eq!(dot(a, b ^ c), dot(a, b) ^ dot(a, c));
                }
            }
        }
    }
}
