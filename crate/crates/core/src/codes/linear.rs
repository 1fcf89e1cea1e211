//! The BCH-like linear code C_f via its parity check matrix.

use std::collections::HashMap;
use std::sync::Arc;

use super::CodesError;
use crate::bitset::BitVec;
use crate::gf2m::{Elem, FieldContext};
use crate::vbf::VectorialFunction;

/// The 2m x n parity check matrix H_f, n = 2^m - 1.
///
/// Column i is the pair (alpha^i, f(alpha^i)); internally a column is the
/// packed word with alpha^i in the upper m bits and f(alpha^i) in the
/// lower m bits. C_f is the kernel of this matrix over F_2.
#[derive(Clone)]
pub struct ParityCheck {
    ctx: Arc<FieldContext>,
    cols: Vec<u32>,
}

/// Minimum distance of C_f, exact when at most 5.
///
/// The search is capped: "= d" is proved as (no support of weight < d) and
/// (a weight-d support exhibited); anything beyond 5 is reported as
/// [`LinearMinDistance::AtLeastSix`]. Degenerate small fields land there
/// honestly (at m = 3 the Gold code is the \[7,1\] repetition-like code of
/// distance 7).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearMinDistance {
    Exact { distance: usize, support: Vec<usize> },
    AtLeastSix,
}

impl LinearMinDistance {
    pub fn distance(&self) -> Option<usize> {
        match self {
            LinearMinDistance::Exact { distance, .. } => Some(*distance),
            LinearMinDistance::AtLeastSix => None,
        }
    }
}

impl ParityCheck {
    pub fn new(f: &VectorialFunction) -> ParityCheck {
        let ctx = f.ctx().clone();
        let m = ctx.m();
        let cols = (0..ctx.n())
            .map(|i| {
                let x = ctx.exp(i);
                ((x as u32) << m) | f.eval(x) as u32
            })
            .collect();
        ParityCheck { ctx, cols }
    }

    pub fn ctx(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    /// Number of columns, n = 2^m - 1.
    pub fn n(&self) -> usize {
        self.cols.len()
    }

    /// Number of rows, 2m.
    pub fn rows(&self) -> usize {
        2 * self.ctx.m() as usize
    }

    /// Column i as the pair (alpha^i, f(alpha^i)).
    pub fn column(&self, i: usize) -> (Elem, Elem) {
        let c = self.cols[i];
        let m = self.ctx.m();
        (((c >> m) & ((1 << m) - 1)) as Elem, (c & ((1 << m) - 1)) as Elem)
    }

    /// Row r as an n-bit vector. Rows 0..m are the coordinates of the
    /// alpha^i block (row r = bit r), rows m..2m the f(alpha^i) block.
    pub fn row(&self, r: usize) -> BitVec {
        assert!(r < self.rows());
        let m = self.ctx.m() as usize;
        let bit = if r < m { m + r } else { r - m };
        let mut row = BitVec::new(self.n());
        for (i, &c) in self.cols.iter().enumerate() {
            if c & (1 << bit) != 0 {
                row.set(i);
            }
        }
        row
    }

    /// XOR of the given columns, as an (x-part, f-part) pair.
    pub fn syndrome(&self, support: &[usize]) -> (Elem, Elem) {
        let acc = support.iter().fold(0u32, |acc, &i| acc ^ self.cols[i]);
        let m = self.ctx.m();
        (((acc >> m) & ((1 << m) - 1)) as Elem, (acc & ((1 << m) - 1)) as Elem)
    }

    /// Rank of H_f over F_2 (at most 2m; exactly 2m when f is APN).
    pub fn rank(&self) -> usize {
        let mut pivots = [0u32; 32];
        let mut rank = 0;
        for &col in &self.cols {
            let mut v = col;
            while v != 0 {
                let lead = (31 - v.leading_zeros()) as usize;
                if pivots[lead] == 0 {
                    pivots[lead] = v;
                    rank += 1;
                    break;
                }
                v ^= pivots[lead];
            }
        }
        rank
    }

    /// dim C_f = n - rank(H_f); equals 2^m - 2m - 1 for APN f.
    pub fn dimension(&self) -> usize {
        self.n() - self.rank()
    }

    /// A set of at most `w` column indices XORing to zero, if one exists.
    ///
    /// Sweeps weights 1, 2, ..., w in order, so the result is a true
    /// minimum-weight support. Weights 1-3 return the lexicographically
    /// smallest sorted support; weights 4-5 use a meet-in-the-middle hash
    /// of column pairs and return the first support found in the
    /// deterministic pair/triple enumeration order.
    pub fn min_weight_at_most(&self, w: usize) -> Option<Vec<usize>> {
        assert!((1..=5).contains(&w), "weight cap must be in 1..=5");
        (1..=w).find_map(|k| self.weight_search(k))
    }

    fn weight_search(&self, k: usize) -> Option<Vec<usize>> {
        match k {
            1 => self.cols.iter().position(|&c| c == 0).map(|i| vec![i]),
            2 => {
                let by_value = self.index_by_value();
                for i in 0..self.n() {
                    let list = &by_value[&self.cols[i]];
                    if let Some(&j) = list.iter().find(|&&j| j > i) {
                        return Some(vec![i, j]);
                    }
                }
                None
            }
            3 => {
                let by_value = self.index_by_value();
                for i in 0..self.n() {
                    for j in i + 1..self.n() {
                        let target = self.cols[i] ^ self.cols[j];
                        if let Some(list) = by_value.get(&target) {
                            if let Some(&kk) = list.iter().find(|&&kk| kk > j) {
                                return Some(vec![i, j, kk]);
                            }
                        }
                    }
                }
                None
            }
            4 => {
                // Pair syndromes hashed as we go; a later pair matching an
                // earlier disjoint pair closes a weight-4 word.
                let mut pairs: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
                for k2 in 0..self.n() {
                    for l in k2 + 1..self.n() {
                        let s = self.cols[k2] ^ self.cols[l];
                        if let Some(list) = pairs.get(&s) {
                            for &(i, j) in list {
                                if i != k2 && i != l && j != k2 && j != l {
                                    let mut support = vec![i, j, k2, l];
                                    support.sort_unstable();
                                    return Some(support);
                                }
                            }
                        }
                        pairs.entry(s).or_default().push((k2, l));
                    }
                }
                None
            }
            5 => {
                let mut pairs: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
                for p in 0..self.n() {
                    for q in p + 1..self.n() {
                        pairs.entry(self.cols[p] ^ self.cols[q]).or_default().push((p, q));
                    }
                }
                for i in 0..self.n() {
                    for j in i + 1..self.n() {
                        let partial = self.cols[i] ^ self.cols[j];
                        for k3 in j + 1..self.n() {
                            let target = partial ^ self.cols[k3];
                            if let Some(list) = pairs.get(&target) {
                                for &(p, q) in list {
                                    if p != i && p != j && p != k3 && q != i && q != j && q != k3 {
                                        let mut support = vec![i, j, k3, p, q];
                                        support.sort_unstable();
                                        return Some(support);
                                    }
                                }
                            }
                        }
                    }
                }
                None
            }
            _ => unreachable!(),
        }
    }

    fn index_by_value(&self) -> HashMap<u32, Vec<usize>> {
        let mut map: HashMap<u32, Vec<usize>> = HashMap::new();
        for (i, &c) in self.cols.iter().enumerate() {
            map.entry(c).or_default().push(i);
        }
        map
    }

    /// Exact minimum distance when at most 5, else "at least 6".
    pub fn min_distance(&self) -> LinearMinDistance {
        match self.min_weight_at_most(5) {
            Some(support) => LinearMinDistance::Exact { distance: support.len(), support },
            None => LinearMinDistance::AtLeastSix,
        }
    }

    /// A subset S of V* (as column indices) with
    /// (sum of alpha^i, sum of f(alpha^i)) over S equal to (a, b).
    ///
    /// Gaussian elimination with first-pivot selection over columns in
    /// index order, tracking combinations; the pivot-based particular
    /// solution is returned, so the output is deterministic. The empty set
    /// solves (0, 0).
    pub fn solve_subset(&self, a: Elem, b: Elem) -> Result<Vec<usize>, CodesError> {
        let m = self.ctx.m();
        let bits = 2 * m as usize;
        let mut pivot_val = vec![0u32; bits];
        let mut pivot_combo: Vec<BitVec> = (0..bits).map(|_| BitVec::new(self.n())).collect();
        for (idx, &col) in self.cols.iter().enumerate() {
            let mut v = col;
            let mut combo = BitVec::new(self.n());
            combo.set(idx);
            while v != 0 {
                let lead = (31 - v.leading_zeros()) as usize;
                if pivot_val[lead] == 0 {
                    pivot_val[lead] = v;
                    pivot_combo[lead] = combo;
                    break;
                }
                v ^= pivot_val[lead];
                combo.xor_with(&pivot_combo[lead]);
            }
        }
        let mut t = ((a as u32) << m) | b as u32;
        let mut combo = BitVec::new(self.n());
        while t != 0 {
            let lead = (31 - t.leading_zeros()) as usize;
            if pivot_val[lead] == 0 {
                return Err(CodesError::NoSolution { a, b });
            }
            t ^= pivot_val[lead];
            combo.xor_with(&pivot_combo[lead]);
        }
        Ok(combo.ones().collect())
    }
}
