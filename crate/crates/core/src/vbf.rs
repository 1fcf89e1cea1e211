//! Vectorial Boolean functions f : V -> V with f(0) = 0.
//!
//! The central predicates live here. For a direction a != 0 the derivative
//! image set is
//!
//! ```text
//! H_a(f) = { f(x) + f(x + a) | x in V }.
//! ```
//!
//! f is *almost perfect nonlinear* (APN) when every H_a(f) has cardinality
//! 2^(m-1), i.e. the system x + y = a, f(x) + f(y) = b never has more than
//! two solutions. f is *crooked* when additionally each H_a(f) is the
//! complement of a linear hyperplane; equivalently, when
//!
//! 1. f(0) = 0,
//! 2. f(x) + f(y) + f(z) != f(x+y+z) for distinct x, y, z,
//! 3. f(x) + f(y) + f(z) != f(x+a) + f(y+a) + f(z+a) for all a != 0.
//!
//! Condition 2 is APN-ness. Condition 3 says no three (not necessarily
//! distinct) values drawn from a single H_a(f) may XOR to zero, which
//! together with |H_a(f)| = 2^(m-1) pins H_a(f) as a hyperplane complement.
//! [`VectorialFunction::is_crooked_with`] implements both the definitional
//! route and the hyperplane route; they must agree, and violation witnesses
//! always re-verify against the defining inequalities.

use std::fmt;
use std::sync::Arc;

use crate::bitset::BitVec;
use crate::gf2m::{dot, Elem, FieldContext, FieldError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VbfError {
    Field(FieldError),
    /// Truth table length must be 2^m.
    TableLength { expected: usize, got: usize },
    /// Truth table entries must lie in [0, 2^m).
    ValueOutOfRange { x: Elem, value: Elem },
    /// f(0) must be 0; use `from_table_normalized` to shift.
    NonzeroAtZero { value: Elem },
    /// Power exponents must lie in [1, 2^m - 2].
    ExponentOutOfRange { d: u32, m: u32 },
    /// Gold exponents 2^k + 1 need gcd(k, m) = 1.
    GcdViolation { k: u32, m: u32 },
    /// Derivative directions must be nonzero.
    ZeroDirection,
    /// The double-cover check needs two distinct base points.
    EqualPoints { a: Elem },
    /// Malformed truth-table text.
    Format(String),
}

impl fmt::Display for VbfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VbfError::Field(e) => write!(f, "{e}"),
            VbfError::TableLength { expected, got } => {
                write!(f, "truth table has {got} entries, expected {expected}")
            }
            VbfError::ValueOutOfRange { x, value } => {
                write!(f, "table value f({x}) = {value} is outside the field")
            }
            VbfError::NonzeroAtZero { value } => {
                write!(f, "f(0) = {value} != 0 (normalize with g(x) = f(x) + f(0))")
            }
            VbfError::ExponentOutOfRange { d, m } => {
                write!(f, "exponent {d} outside [1, 2^{m} - 2]")
            }
            VbfError::GcdViolation { k, m } => write!(f, "gcd({k}, {m}) != 1"),
            VbfError::ZeroDirection => write!(f, "derivative direction a must be nonzero"),
            VbfError::EqualPoints { a } => write!(f, "base points must differ, both are {a}"),
            VbfError::Format(msg) => write!(f, "bad truth-table text: {msg}"),
        }
    }
}

impl std::error::Error for VbfError {}

impl From<FieldError> for VbfError {
    fn from(e: FieldError) -> Self {
        VbfError::Field(e)
    }
}

/// Outcome of the APN test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ApnVerdict {
    Apn,
    NotApn(ApnWitness),
}

impl ApnVerdict {
    pub fn is_apn(&self) -> bool {
        matches!(self, ApnVerdict::Apn)
    }
}

/// Two disjoint solution pairs of x + y = a, f(x) + f(y) = b, witnessing
/// at least four solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApnWitness {
    pub a: Elem,
    pub b: Elem,
    pub x1: Elem,
    pub y1: Elem,
    pub x2: Elem,
    pub y2: Elem,
}

/// Outcome of the crookedness test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrookedVerdict {
    Crooked,
    /// Condition 2 fails: x, y, z distinct with f(x)+f(y)+f(z) = f(x+y+z).
    SumViolation { x: Elem, y: Elem, z: Elem },
    /// Condition 3 fails: f(x)+f(y)+f(z) = f(x+a)+f(y+a)+f(z+a), a != 0.
    ShiftViolation { x: Elem, y: Elem, z: Elem, a: Elem },
}

impl CrookedVerdict {
    pub fn is_crooked(&self) -> bool {
        matches!(self, CrookedVerdict::Crooked)
    }
}

/// Which route `is_crooked_with` takes; both produce identical verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrookedStrategy {
    /// Conditions 2 and 3 checked over derivative multisets.
    Definitional,
    /// Each H_a(f) checked to be exactly a hyperplane complement.
    Hyperplane,
}

/// Classification of a power exponent up to the cyclotomic class d ~ 2d.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerClass {
    /// Some class member equals 2^k + 2^j with gcd(k - j, m) = 1.
    GoldType { k: u32, j: u32 },
    NotGoldType,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A function f : V -> V with f(0) = 0, stored as a truth table.
///
/// Immutable after construction; all predicates are pure.
#[derive(Clone)]
pub struct VectorialFunction {
    ctx: Arc<FieldContext>,
    table: Vec<Elem>,
}

impl fmt::Debug for VectorialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VectorialFunction(m={}, digest={:016x})", self.ctx.m(), self.table_digest())
    }
}

impl VectorialFunction {
    /// Wraps a truth table; rejects tables with f(0) != 0.
    pub fn from_table(ctx: Arc<FieldContext>, table: Vec<Elem>) -> Result<Self, VbfError> {
        if table.len() != ctx.size() {
            return Err(VbfError::TableLength { expected: ctx.size(), got: table.len() });
        }
        for (x, &v) in table.iter().enumerate() {
            if v as usize >= ctx.size() {
                return Err(VbfError::ValueOutOfRange { x: x as Elem, value: v });
            }
        }
        if table[0] != 0 {
            return Err(VbfError::NonzeroAtZero { value: table[0] });
        }
        Ok(VectorialFunction { ctx, table })
    }

    /// Like `from_table` but shifts to g(x) = f(x) + f(0) first.
    pub fn from_table_normalized(ctx: Arc<FieldContext>, mut table: Vec<Elem>) -> Result<Self, VbfError> {
        if let Some(&c) = table.first() {
            if c != 0 {
                for v in table.iter_mut() {
                    *v ^= c;
                }
            }
        }
        Self::from_table(ctx, table)
    }

    /// The power function x^d, for d in [1, 2^m - 2].
    pub fn from_power(ctx: Arc<FieldContext>, d: u32) -> Result<Self, VbfError> {
        if d == 0 || d as usize > ctx.size() - 2 {
            return Err(VbfError::ExponentOutOfRange { d, m: ctx.m() });
        }
        let table: Vec<Elem> = (0..ctx.size() as Elem).map(|x| ctx.pow(x, d as u64)).collect();
        Ok(VectorialFunction { ctx, table })
    }

    /// The Gold function x^(2^k + 1), requiring gcd(k, m) = 1.
    pub fn gold(ctx: Arc<FieldContext>, k: u32) -> Result<Self, VbfError> {
        if k == 0 || k >= ctx.m() || gcd(k, ctx.m()) != 1 {
            return Err(VbfError::GcdViolation { k, m: ctx.m() });
        }
        Self::from_power(ctx, (1 << k) + 1)
    }

    /// The identity function (linear; useful as a negative control).
    pub fn identity(ctx: Arc<FieldContext>) -> Self {
        let table: Vec<Elem> = (0..ctx.size() as Elem).collect();
        VectorialFunction { ctx, table }
    }

    pub fn ctx(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn m(&self) -> u32 {
        self.ctx.m()
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    #[inline]
    pub fn eval(&self, x: Elem) -> Elem {
        self.table[x as usize]
    }

    /// Derivative values D_a(x) = f(x) + f(x + a) for all x, in x-order.
    fn derivative_row(&self, a: Elem) -> Vec<Elem> {
        (0..self.ctx.size())
            .map(|x| self.table[x] ^ self.table[x ^ a as usize])
            .collect()
    }

    /// The set H_a(f), deduplicated and sorted ascending.
    pub fn derivative_set(&self, a: Elem) -> Result<Vec<Elem>, VbfError> {
        if a == 0 {
            return Err(VbfError::ZeroDirection);
        }
        let mut seen = vec![false; self.ctx.size()];
        for x in 0..self.ctx.size() {
            seen[(self.table[x] ^ self.table[x ^ a as usize]) as usize] = true;
        }
        Ok((0..self.ctx.size() as Elem).filter(|&v| seen[v as usize]).collect())
    }

    /// APN test: every |H_a(f)| must be 2^(m-1).
    ///
    /// On failure returns the witness with the smallest direction a, and
    /// for that a the smallest third preimage; its first pair (x1, y1)
    /// uses the smallest preimage of the collided value b.
    pub fn is_apn(&self) -> ApnVerdict {
        let size = self.ctx.size();
        const UNSEEN: u16 = u16::MAX;
        let mut first = vec![UNSEEN; size];
        for a in 1..size {
            first.fill(UNSEEN);
            for x in 0..size {
                let d = (self.table[x] ^ self.table[x ^ a]) as usize;
                if first[d] == UNSEEN {
                    first[d] = x as u16;
                } else {
                    let x1 = first[d];
                    if x as u16 != x1 && x != (x1 as usize) ^ a {
                        return ApnVerdict::NotApn(ApnWitness {
                            a: a as Elem,
                            b: d as Elem,
                            x1: x1 as Elem,
                            y1: x1 ^ a as Elem,
                            x2: x as Elem,
                            y2: (x ^ a) as Elem,
                        });
                    }
                }
            }
        }
        ApnVerdict::Apn
    }

    /// Lexicographically smallest distinct triple x < y < z with
    /// f(x) + f(y) + f(z) = f(x+y+z). Exists exactly when f is not APN.
    fn condition2_violation(&self) -> Option<(Elem, Elem, Elem)> {
        let size = self.ctx.size();
        for x in 0..size {
            for y in x + 1..size {
                let partial = self.table[x] ^ self.table[y];
                for z in y + 1..size {
                    if partial ^ self.table[z] == self.table[x ^ y ^ z] {
                        return Some((x as Elem, y as Elem, z as Elem));
                    }
                }
            }
        }
        None
    }

    /// Detects a condition-3 failure at direction a: some three values of
    /// H_a(f) (repetition allowed) XOR to zero.
    fn condition3_fails_at(&self, a: Elem, ha_mask: &mut BitVec) -> bool {
        ha_mask.clear();
        let row = self.derivative_row(a);
        for &d in &row {
            ha_mask.set(d as usize);
        }
        if ha_mask.get(0) {
            return true; // 0 in H_a: take equal first two values
        }
        let values: Vec<usize> = ha_mask.ones().collect();
        for (i, &u) in values.iter().enumerate() {
            for &v in &values[i + 1..] {
                if ha_mask.get(u ^ v) {
                    return true;
                }
            }
        }
        false
    }

    /// Smallest direction a with a condition-3 failure, together with the
    /// lexicographically smallest sorted triple x <= y <= z for that a.
    fn condition3_violation(&self) -> Option<(Elem, Elem, Elem, Elem)> {
        let size = self.ctx.size();
        let mut mask = BitVec::new(size);
        for a in 1..size as Elem {
            if !self.condition3_fails_at(a, &mut mask) {
                continue;
            }
            let row = self.derivative_row(a);
            let mut preimages: Vec<Vec<Elem>> = vec![Vec::new(); size];
            for (x, &d) in row.iter().enumerate() {
                preimages[d as usize].push(x as Elem);
            }
            for x in 0..size {
                for y in x..size {
                    let target = (row[x] ^ row[y]) as usize;
                    let list = &preimages[target];
                    let pos = list.partition_point(|&z| (z as usize) < y);
                    if pos < list.len() {
                        return Some((x as Elem, y as Elem, list[pos], a));
                    }
                }
            }
            unreachable!("condition-3 detection fired but no triple was found");
        }
        None
    }

    /// Crookedness via the default (hyperplane) strategy.
    pub fn is_crooked(&self) -> CrookedVerdict {
        self.is_crooked_with(CrookedStrategy::Hyperplane)
    }

    /// Crookedness with an explicit strategy. Both strategies return
    /// identical verdicts: condition 2 takes precedence over condition 3,
    /// and violation witnesses come from the shared definitional
    /// extractors either way.
    pub fn is_crooked_with(&self, strategy: CrookedStrategy) -> CrookedVerdict {
        let crooked = match strategy {
            CrookedStrategy::Definitional => {
                self.is_apn().is_apn() && {
                    let mut mask = BitVec::new(self.ctx.size());
                    (1..self.ctx.size() as Elem).all(|a| !self.condition3_fails_at(a, &mut mask))
                }
            }
            CrookedStrategy::Hyperplane => (1..self.ctx.size() as Elem)
                .all(|a| self.hyperplane_witness(a).expect("a != 0").is_some()),
        };
        if crooked {
            return CrookedVerdict::Crooked;
        }
        if !self.is_apn().is_apn() {
            let (x, y, z) = self
                .condition2_violation()
                .expect("not APN, so a condition-2 triple exists");
            CrookedVerdict::SumViolation { x, y, z }
        } else {
            let (x, y, z, a) = self
                .condition3_violation()
                .expect("APN but not crooked, so a condition-3 witness exists");
            CrookedVerdict::ShiftViolation { x, y, z, a }
        }
    }

    /// The linear functional cutting out H_a(f), if H_a(f) is exactly the
    /// complement of a hyperplane: a nonzero lambda with <lambda, h> = 1
    /// for every h in H_a(f) and |H_a(f)| = 2^(m-1).
    ///
    /// Found by Gaussian elimination on { h + h0 | h in H_a(f) } for the
    /// smallest h0 in H_a(f): that set must span a hyperplane, and lambda
    /// generates its one-dimensional orthogonal complement.
    pub fn hyperplane_witness(&self, a: Elem) -> Result<Option<Elem>, VbfError> {
        let ha = self.derivative_set(a)?;
        if ha.len() != self.ctx.size() / 2 {
            return Ok(None);
        }
        let m = self.ctx.m() as usize;
        let h0 = ha[0];
        // Row-reduce the differences; pivots keyed by leading bit.
        let mut pivots: Vec<Elem> = vec![0; m];
        let mut rank = 0usize;
        for &h in &ha[1..] {
            let mut v = h ^ h0;
            while v != 0 {
                let lead = (15 - v.leading_zeros()) as usize;
                if pivots[lead] == 0 {
                    pivots[lead] = v;
                    rank += 1;
                    break;
                }
                v ^= pivots[lead];
            }
        }
        if rank != m - 1 {
            return Ok(None);
        }
        // Back-substitute to reduced echelon form.
        for i in (0..m).rev() {
            if pivots[i] == 0 {
                continue;
            }
            for j in 0..m {
                if j != i && pivots[j] != 0 && pivots[j] & (1 << i) != 0 {
                    pivots[j] ^= pivots[i];
                }
            }
        }
        let free = (0..m).find(|&i| pivots[i] == 0).expect("rank m-1 leaves one free bit");
        let mut lambda: Elem = 1 << free;
        for i in 0..m {
            if pivots[i] != 0 && pivots[i] & (1 << free) != 0 {
                lambda |= 1 << i;
            }
        }
        // The affine part: every h must evaluate to 1, not 0.
        if ha.iter().all(|&h| dot(lambda, h) == 1) {
            Ok(Some(lambda))
        } else {
            Ok(None)
        }
    }

    /// Checks that the multiset
    /// { f(a+c) + f(b+c) | c } u { f(a+c) + f(b+c) + f(a) + f(b) | c }
    /// covers every element of V exactly twice. Crooked functions satisfy
    /// this for every pair a != b.
    pub fn double_cover_check(&self, a: Elem, b: Elem) -> Result<bool, VbfError> {
        if a == b {
            return Err(VbfError::EqualPoints { a });
        }
        let size = self.ctx.size();
        let shift = self.table[a as usize] ^ self.table[b as usize];
        let mut counts = vec![0u32; size];
        for c in 0..size as Elem {
            let base = self.eval(a ^ c) ^ self.eval(b ^ c);
            counts[base as usize] += 1;
            counts[(base ^ shift) as usize] += 1;
        }
        Ok(counts.iter().all(|&c| c == 2))
    }

    /// FNV-1a digest of the truth table (entries as little-endian u16),
    /// used to identify non-power functions in reports.
    pub fn table_digest(&self) -> u64 {
        let mut hash: u64 = 0xcbf29ce484222325;
        for &v in &self.table {
            for byte in v.to_le_bytes() {
                hash ^= byte as u64;
                hash = hash.wrapping_mul(0x100000001b3);
            }
        }
        hash
    }

    /// Three-line text format: m, modulus (decimal), then the table.
    pub fn to_table_text(&self) -> String {
        let values: Vec<String> = self.table.iter().map(|v| v.to_string()).collect();
        format!("{}\n{}\n{}\n", self.ctx.m(), self.ctx.modulus(), values.join(" "))
    }

    /// Parses the three-line text format, constructing the field context
    /// from the recorded modulus.
    pub fn parse_table_text(text: &str) -> Result<Self, VbfError> {
        let mut lines = text.lines();
        let m: u32 = lines
            .next()
            .ok_or_else(|| VbfError::Format("missing line 1 (m)".into()))?
            .trim()
            .parse()
            .map_err(|_| VbfError::Format("line 1 is not an integer".into()))?;
        let modulus: u32 = lines
            .next()
            .ok_or_else(|| VbfError::Format("missing line 2 (modulus)".into()))?
            .trim()
            .parse()
            .map_err(|_| VbfError::Format("line 2 is not an integer".into()))?;
        let table_line = lines.next().ok_or_else(|| VbfError::Format("missing line 3 (table)".into()))?;
        let table: Vec<Elem> = table_line
            .split_whitespace()
            .map(|tok| tok.parse::<Elem>().map_err(|_| VbfError::Format(format!("bad table value {tok:?}"))))
            .collect::<Result<_, _>>()?;
        let ctx = Arc::new(FieldContext::new(m, Some(modulus))?);
        Self::from_table(ctx, table)
    }
}

/// Classifies d by its cyclotomic class { d * 2^i mod (2^m - 1) }: Gold
/// type when some member is 2^k + 2^j with gcd(k - j, m) = 1. All crooked
/// power functions have this form.
pub fn classify_power_exponent(m: u32, d: u32) -> Result<PowerClass, VbfError> {
    let n = (1u64 << m) - 1;
    if d == 0 || d as u64 > n - 1 {
        return Err(VbfError::ExponentOutOfRange { d, m });
    }
    for i in 0..m {
        let e = ((d as u64) << i) % n;
        if e.count_ones() == 2 {
            let k = 63 - e.leading_zeros();
            let j = e.trailing_zeros();
            if gcd(k - j, m) == 1 {
                return Ok(PowerClass::GoldType { k, j });
            }
        }
    }
    Ok(PowerClass::NotGoldType)
}

/// Members of the cyclotomic class of d modulo 2^m - 1, sorted ascending.
pub fn cyclotomic_class(m: u32, d: u32) -> Vec<u32> {
    let n = (1u64 << m) - 1;
    let mut members: Vec<u32> = (0..m).map(|i| (((d as u64) << i) % n) as u32).collect();
    members.sort_unstable();
    members.dedup();
    members
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(m: u32) -> Arc<FieldContext> {
        Arc::new(FieldContext::new(m, None).unwrap())
    }

    #[test]
    fn cube_table_m3() {
        let f = VectorialFunction::from_power(ctx(3), 3).unwrap();
        assert_eq!(f.table(), &[0, 1, 3, 4, 5, 6, 7, 2]);
        // Oracle: cube every element by repeated multiplication.
        let c = f.ctx();
        for x in c.elements() {
            assert_eq!(f.eval(x), c.mul(x, c.mul(x, x)));
        }
    }

    #[test]
    fn power_constructor_bounds() {
        assert_eq!(
            VectorialFunction::from_power(ctx(3), 0).unwrap_err(),
            VbfError::ExponentOutOfRange { d: 0, m: 3 }
        );
        assert_eq!(
            VectorialFunction::from_power(ctx(3), 7).unwrap_err(),
            VbfError::ExponentOutOfRange { d: 7, m: 3 }
        );
        let id = VectorialFunction::from_power(ctx(3), 1).unwrap();
        assert_eq!(id.table(), &[0, 1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn gold_constructor() {
        let g = VectorialFunction::gold(ctx(3), 1).unwrap();
        assert_eq!(g.table(), VectorialFunction::from_power(ctx(3), 3).unwrap().table());
        let g5 = VectorialFunction::gold(ctx(5), 2).unwrap();
        assert_eq!(g5.table(), VectorialFunction::from_power(ctx(5), 5).unwrap().table());
        assert_eq!(
            VectorialFunction::gold(ctx(9), 3).unwrap_err(),
            VbfError::GcdViolation { k: 3, m: 9 }
        );
    }

    #[test]
    fn table_constructor_validation() {
        let c = ctx(3);
        assert!(matches!(
            VectorialFunction::from_table(c.clone(), vec![0; 4]),
            Err(VbfError::TableLength { expected: 8, got: 4 })
        ));
        assert!(matches!(
            VectorialFunction::from_table(c.clone(), vec![0, 9, 0, 0, 0, 0, 0, 0]),
            Err(VbfError::ValueOutOfRange { x: 1, value: 9 })
        ));
        assert!(matches!(
            VectorialFunction::from_table(c.clone(), vec![1, 0, 0, 0, 0, 0, 0, 0]),
            Err(VbfError::NonzeroAtZero { value: 1 })
        ));
        let norm =
            VectorialFunction::from_table_normalized(c, vec![5, 1, 2, 3, 4, 5, 6, 7]).unwrap();
        assert_eq!(norm.table()[0], 0);
        assert_eq!(norm.table()[1], 1 ^ 5);
    }

    #[test]
    fn derivative_set_of_cube_is_odd_elements() {
        let f = VectorialFunction::from_power(ctx(3), 3).unwrap();
        let h1 = f.derivative_set(1).unwrap();
        assert_eq!(h1, vec![1, 3, 5, 7]);
        assert_eq!(h1.len(), 4); // 2^(m-1)
        // Complement {0,2,4,6} is closed under XOR (a hyperplane).
        let complement: Vec<Elem> =
            (0..8).filter(|v| !h1.contains(&(*v as Elem))).map(|v| v as Elem).collect();
        assert_eq!(complement, vec![0, 2, 4, 6]);
        for &u in &complement {
            for &v in &complement {
                assert!(complement.contains(&(u ^ v)));
            }
        }
        assert_eq!(f.derivative_set(0).unwrap_err(), VbfError::ZeroDirection);
    }

    #[test]
    fn identity_derivative_set_is_singleton() {
        let f = VectorialFunction::identity(ctx(3));
        for a in 1..8 {
            assert_eq!(f.derivative_set(a).unwrap(), vec![a]);
        }
    }

    #[test]
    fn apn_verdicts() {
        assert!(VectorialFunction::from_power(ctx(3), 3).unwrap().is_apn().is_apn());
        // Kasami exponent 13 = 2^4 - 2^2 + 1 at m = 5.
        let kasami = VectorialFunction::from_power(ctx(5), 13).unwrap();
        assert!(kasami.is_apn().is_apn());
        for a in kasami.ctx().nonzero_elements() {
            assert_eq!(kasami.derivative_set(a).unwrap().len(), 16);
        }
        match VectorialFunction::identity(ctx(3)).is_apn() {
            ApnVerdict::Apn => panic!("identity is linear, not APN"),
            ApnVerdict::NotApn(w) => {
                assert_eq!(w.x1 ^ w.y1, w.a);
                assert_eq!(w.x2 ^ w.y2, w.a);
                let f = VectorialFunction::identity(ctx(3));
                assert_eq!(f.eval(w.x1) ^ f.eval(w.y1), w.b);
                assert_eq!(f.eval(w.x2) ^ f.eval(w.y2), w.b);
                assert!(w.x2 != w.x1 && w.x2 != w.y1);
            }
        }
    }

    #[test]
    fn crooked_verdicts_on_known_functions() {
        assert!(VectorialFunction::from_power(ctx(3), 3).unwrap().is_crooked().is_crooked());
        assert!(VectorialFunction::from_power(ctx(5), 5).unwrap().is_crooked().is_crooked());

        // Kasami: APN but not crooked, so a condition-3 witness.
        let kasami = VectorialFunction::from_power(ctx(5), 13).unwrap();
        match kasami.is_crooked() {
            CrookedVerdict::ShiftViolation { x, y, z, a } => {
                assert_ne!(a, 0);
                let f = &kasami;
                assert_eq!(
                    f.eval(x) ^ f.eval(y) ^ f.eval(z),
                    f.eval(x ^ a) ^ f.eval(y ^ a) ^ f.eval(z ^ a)
                );
            }
            other => panic!("expected a condition-3 violation, got {other:?}"),
        }

        // Inverse function x^30 at m = 5: APN (m odd) but not crooked.
        let inv = VectorialFunction::from_power(ctx(5), 30).unwrap();
        assert!(inv.is_apn().is_apn());
        assert!(!inv.is_crooked().is_crooked());

        // Identity: condition 2 fails; witness re-verifies.
        match VectorialFunction::identity(ctx(3)).is_crooked() {
            CrookedVerdict::SumViolation { x, y, z } => {
                assert!(x != y && y != z && x != z);
                let f = VectorialFunction::identity(ctx(3));
                assert_eq!(f.eval(x) ^ f.eval(y) ^ f.eval(z), f.eval(x ^ y ^ z));
            }
            other => panic!("expected a condition-2 violation, got {other:?}"),
        }
    }

    #[test]
    fn strategies_agree_on_power_functions() {
        for m in [3u32, 5] {
            let c = ctx(m);
            for d in 1..=(c.size() - 2) as u32 {
                let f = VectorialFunction::from_power(c.clone(), d).unwrap();
                assert_eq!(
                    f.is_crooked_with(CrookedStrategy::Definitional),
                    f.is_crooked_with(CrookedStrategy::Hyperplane),
                    "m={m} d={d}"
                );
            }
        }
    }

    #[test]
    fn hyperplane_witness_examples() {
        let cube = VectorialFunction::from_power(ctx(3), 3).unwrap();
        // H_1 = odd elements; the LSB functional cuts them out.
        assert_eq!(cube.hyperplane_witness(1).unwrap(), Some(1));
        for a in cube.ctx().nonzero_elements() {
            let lambda = cube.hyperplane_witness(a).unwrap().expect("crooked");
            for h in cube.derivative_set(a).unwrap() {
                assert_eq!(dot(lambda, h), 1);
            }
        }

        let id = VectorialFunction::identity(ctx(3));
        assert_eq!(id.hyperplane_witness(1).unwrap(), None);

        let kasami = VectorialFunction::from_power(ctx(5), 13).unwrap();
        match kasami.is_crooked() {
            CrookedVerdict::ShiftViolation { a, .. } => {
                assert_eq!(kasami.hyperplane_witness(a).unwrap(), None);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(cube.hyperplane_witness(0).unwrap_err(), VbfError::ZeroDirection);
    }

    #[test]
    fn double_cover_examples() {
        let cube = VectorialFunction::from_power(ctx(3), 3).unwrap();
        assert!(cube.double_cover_check(0, 1).unwrap());

        let id = VectorialFunction::identity(ctx(3));
        assert!(!id.double_cover_check(0, 1).unwrap());
        assert_eq!(id.double_cover_check(2, 2).unwrap_err(), VbfError::EqualPoints { a: 2 });

        // Non-crooked APN function: some pair must fail.
        let kasami = VectorialFunction::from_power(ctx(5), 13).unwrap();
        let mut failed = false;
        'outer: for a in 0..32 as Elem {
            for b in (a + 1)..32 as Elem {
                if !kasami.double_cover_check(a, b).unwrap() {
                    failed = true;
                    break 'outer;
                }
            }
        }
        assert!(failed, "Kasami is not crooked, some double cover must fail");
    }

    #[test]
    fn power_exponent_classification() {
        assert_eq!(classify_power_exponent(5, 9).unwrap(), PowerClass::GoldType { k: 3, j: 0 });
        assert_eq!(classify_power_exponent(5, 13).unwrap(), PowerClass::NotGoldType);
        assert_eq!(cyclotomic_class(5, 13), vec![11, 13, 21, 22, 26]);
        assert_eq!(classify_power_exponent(3, 3).unwrap(), PowerClass::GoldType { k: 1, j: 0 });
        // Linear monomials are single-bit exponents, never Gold type.
        assert_eq!(classify_power_exponent(5, 1).unwrap(), PowerClass::NotGoldType);
        assert_eq!(classify_power_exponent(5, 16).unwrap(), PowerClass::NotGoldType);
        assert!(matches!(
            classify_power_exponent(5, 0),
            Err(VbfError::ExponentOutOfRange { .. })
        ));
        assert!(matches!(
            classify_power_exponent(5, 31),
            Err(VbfError::ExponentOutOfRange { .. })
        ));
    }

    #[test]
    fn apn_matches_condition2_brute_force_m3() {
        // Condition 2 checked directly over all distinct triples, against
        // the multiset-count APN test, on a random corpus.
        let c = ctx(3);
        let mut rng = crate::rng::SplitMix64::new(0xC0DE);
        for _ in 0..300 {
            let table = crate::rng::random_table(&c, &mut rng);
            let f = VectorialFunction::from_table(c.clone(), table).unwrap();
            let mut cond2_holds = true;
            'scan: for x in 0..8u16 {
                for y in 0..8u16 {
                    for z in 0..8u16 {
                        if x == y || y == z || x == z {
                            continue;
                        }
                        if f.eval(x) ^ f.eval(y) ^ f.eval(z) == f.eval(x ^ y ^ z) {
                            cond2_holds = false;
                            break 'scan;
                        }
                    }
                }
            }
            assert_eq!(f.is_apn().is_apn(), cond2_holds);
        }
    }

    #[test]
    fn table_text_round_trip() {
        let f = VectorialFunction::from_power(ctx(3), 3).unwrap();
        let text = f.to_table_text();
        assert_eq!(text, "3\n11\n0 1 3 4 5 6 7 2\n");
        let g = VectorialFunction::parse_table_text(&text).unwrap();
        assert_eq!(g.table(), f.table());
        assert_eq!(g.ctx().modulus(), f.ctx().modulus());
        assert_eq!(g.table_digest(), f.table_digest());

        assert!(matches!(
            VectorialFunction::parse_table_text("3\n11\n0 1 bad\n"),
            Err(VbfError::Format(_))
        ));
        assert!(matches!(
            VectorialFunction::parse_table_text("3\n15\n0 1 2 3 4 5 6 7\n"),
            Err(VbfError::Field(FieldError::NonPrimitiveModulus { .. }))
        ));
    }

    #[test]
    fn digest_is_stable() {
        let f = VectorialFunction::from_power(ctx(3), 3).unwrap();
        // FNV-1a of the little-endian bytes of [0,1,3,4,5,6,7,2].
        let mut hash: u64 = 0xcbf29ce484222325;
        for v in [0u16, 1, 3, 4, 5, 6, 7, 2] {
            for b in v.to_le_bytes() {
                hash ^= b as u64;
                hash = hash.wrapping_mul(0x100000001b3);
            }
        }
        assert_eq!(f.table_digest(), hash);
    }
}
