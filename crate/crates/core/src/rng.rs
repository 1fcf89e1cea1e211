//! Small deterministic PRNG for seeded test corpora.

use crate::gf2m::{Elem, FieldContext};

/// SplitMix64: tiny, fast, and good enough for generating truth tables.
/// Deterministic for a fixed seed, which keeps corpora reproducible.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (bound > 0) by rejection sampling.
    pub fn below(&mut self, bound: u64) -> u64 {
        let mask = bound.next_power_of_two() - 1;
        loop {
            let v = self.next_u64() & mask;
            if v < bound {
                return v;
            }
        }
    }
}

/// A uniformly random truth table with f(0) = 0.
pub fn random_table(ctx: &FieldContext, rng: &mut SplitMix64) -> Vec<Elem> {
    let mut table = vec![0 as Elem; ctx.size()];
    for entry in table.iter_mut().skip(1) {
        *entry = rng.below(ctx.size() as u64) as Elem;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_seed_is_reproducible() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn random_table_fixes_zero() {
        let ctx = FieldContext::new(3, None).unwrap();
        let mut rng = SplitMix64::new(7);
        for _ in 0..50 {
            let t = random_table(&ctx, &mut rng);
            assert_eq!(t[0], 0);
            assert!(t.iter().all(|&v| (v as usize) < ctx.size()));
        }
    }
}
