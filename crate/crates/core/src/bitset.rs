//! Fixed-length bit vectors packed into u64 words.
//!
//! Used for adjacency rows, BFS frontiers, code supports, and codeword
//! characteristic vectors, where AND/OR/popcount over whole words is the
//! inner loop.

/// A fixed-length bit vector. Bit i of the vector is bit `i % 64` of
/// word `i / 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    nbits: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitVec[{}; ones={:?}]", self.nbits, self.ones().collect::<Vec<_>>())
    }
}

impl BitVec {
    pub fn new(nbits: usize) -> Self {
        BitVec { nbits, words: vec![0; nbits.div_ceil(64)] }
    }

    pub fn len(&self) -> usize {
        self.nbits
    }

    pub fn is_empty(&self) -> bool {
        self.nbits == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn any(&self) -> bool {
        self.words.iter().any(|&w| w != 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Popcount of the bits in `start..end`.
    pub fn count_range(&self, start: usize, end: usize) -> usize {
        debug_assert!(start <= end && end <= self.nbits);
        let mut total = 0usize;
        let mut i = start;
        while i < end {
            let w = i / 64;
            let lo = i % 64;
            let hi = std::cmp::min(64, lo + (end - i));
            let mask = if hi - lo == 64 { !0u64 } else { ((1u64 << (hi - lo)) - 1) << lo };
            total += (self.words[w] & mask).count_ones() as usize;
            i += hi - lo;
        }
        total
    }

    pub fn or_with(&mut self, other: &BitVec) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn xor_with(&mut self, other: &BitVec) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Remove every bit that is set in `other`.
    pub fn and_not_with(&mut self, other: &BitVec) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Popcount of the intersection, without materializing it.
    pub fn and_count(&self, other: &BitVec) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Hamming distance to another vector of the same length.
    pub fn hamming(&self, other: &BitVec) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> Ones<'_> {
        Ones { bv: self, word_idx: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

pub struct Ones<'a> {
    bv: &'a BitVec,
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * 64 + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.bv.words.len() {
                return None;
            }
            self.current = self.bv.words[self.word_idx];
        }
    }
}
