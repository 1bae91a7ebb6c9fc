//! Compositions, partitions and the three orderings on them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An integer weight vector of fixed length `n`; entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<i32>);

/// A weakly decreasing vector of non-negative integers, padded with zeros
/// to the number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<i32>);

impl Composition {
    pub fn new(parts: Vec<i32>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().map(|&x| x as i64).sum()
    }

    /// `m_i`: how many entries equal `value`.
    pub fn multiplicity(&self, value: i32) -> usize {
        self.0.iter().filter(|&&x| x == value).count()
    }

    /// The dominant representative of the B_n orbit: absolute values sorted
    /// in non-increasing order.
    pub fn plus(&self) -> Partition {
        let mut v: Vec<i32> = self.0.iter().map(|x| x.abs()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn is_partition(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Dominance: every partial sum of `self` is at most that of `other`.
    pub fn dominance_le(&self, other: &Composition) -> bool {
        assert_eq!(self.n(), other.n());
        let (mut s, mut o) = (0i64, 0i64);
        for (x, y) in self.0.iter().zip(&other.0) {
            s += *x as i64;
            o += *y as i64;
            if s > o {
                return false;
            }
        }
        true
    }

    /// Lexicographic order: equal, or the first non-vanishing difference
    /// `other_i - self_i` is positive.
    pub fn lex_le(&self, other: &Composition) -> bool {
        self.0.cmp(&other.0) != Ordering::Greater
    }

    /// The order used for nonsymmetric triangularity: `self ≺ other` iff the
    /// dominant weights compare strictly, or they agree and `self` is
    /// dominated by `other`; never reflexive.
    pub fn precedes(&self, other: &Composition) -> bool {
        if self == other {
            return false;
        }
        let (sp, op) = (self.plus(), other.plus());
        if sp != op {
            sp.as_composition().dominance_le(&op.as_composition())
        } else {
            self.dominance_le(other)
        }
    }

    /// Every composition in `Z^n` with entries in `lo..=hi`, in lex order.
    pub fn all_in_box(n: usize, lo: i32, hi: i32) -> Vec<Composition> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i32>| {
                    (lo..=hi).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(Composition).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Partition {
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        let c = Composition(parts);
        if c.is_partition() {
            Ok(Partition(c.0))
        } else {
            Err(Error::NotPartition(c.0))
        }
    }

    /// `parts` padded with zeros up to `n`.
    pub fn padded(parts: &[i32], n: usize) -> Result<Self> {
        if !Composition(parts.to_vec()).is_partition() {
            return Err(Error::NotPartition(parts.to_vec()));
        }
        let mut v: Vec<i32> = parts.iter().copied().filter(|&x| x != 0).collect();
        if v.len() > n {
            return Err(Error::OutOfRange(format!("length of {parts:?} exceeds n = {n}")));
        }
        v.resize(n, 0);
        Ok(Partition(v))
    }

    pub fn zero(n: usize) -> Self {
        Partition(vec![0; n])
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&x| x != 0).count()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().map(|&x| x as i64).sum()
    }

    pub fn multiplicity(&self, value: i32) -> usize {
        self.0.iter().filter(|&&x| x == value).count()
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|x| x % 2 == 0)
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    pub fn dominance_le(&self, other: &Partition) -> bool {
        self.as_composition().dominance_le(&other.as_composition())
    }

    /// All partitions with at most `n` parts (padded to `n`), each part at
    /// most `max_part`, sorted lexicographically.
    pub fn all_bounded(n: usize, max_part: i32) -> Vec<Partition> {
        fn rec(n: usize, max: i32, prefix: &mut Vec<i32>, out: &mut Vec<Partition>) {
            if prefix.len() == n {
                out.push(Partition(prefix.clone()));
                return;
            }
            for x in 0..=max {
                prefix.push(x);
                rec(n, x, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All partitions of weight at most `max_weight` with at most `n` parts.
    pub fn all_by_weight(n: usize, max_weight: i32) -> Vec<Partition> {
        Partition::all_bounded(n, max_weight)
            .into_iter()
            .filter(|p| p.weight() <= max_weight as i64)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_composition().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[i32]) -> Composition {
        Composition(v.to_vec())
    }

    #[test]
    fn plus_sorts_absolute_values() {
        assert_eq!(c(&[0, -2, 1]).plus().parts(), &[2, 1, 0]);
    }

    #[test]
    fn dominance_implies_lex() {
        let all = Composition::all_in_box(3, -2, 2);
        for x in &all {
            for y in &all {
                if x.dominance_le(y) {
                    assert!(x.lex_le(y), "{x} <= {y} but not lex");
                }
            }
        }
    }

    #[test]
    fn precedes_examples() {
        assert!(c(&[0, 1]).precedes(&c(&[1, 0])));
        assert!(!c(&[1, 0]).precedes(&c(&[0, 1])));
        assert!(c(&[-1]).precedes(&c(&[1])));
        assert!(c(&[0]).precedes(&c(&[-1])));
        assert!(!c(&[1, 0]).precedes(&c(&[1, 0])));
        // different orbits compare through the dominant weights
        assert!(c(&[0, -1]).precedes(&c(&[2, 0])));
        assert!(!c(&[2, 0]).precedes(&c(&[1, -1])));
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![2, 1, 0]).is_ok());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![1, -1]).is_err());
        assert_eq!(Partition::padded(&[2, 1], 3).unwrap().parts(), &[2, 1, 0]);
        assert!(Partition::padded(&[2, 1, 1], 2).is_err());
        let p = Partition::new(vec![2, 2, 1, 0]).unwrap();
        assert_eq!(p.length(), 3);
        assert_eq!(p.multiplicity(2), 2);
        assert_eq!(p.multiplicity(0), 1);
        assert_eq!(p.weight(), 5);
    }

    #[test]
    fn enumeration_counts() {
        // partitions in a 2 x 3 box: C(5, 2) = 10
        assert_eq!(Partition::all_bounded(2, 3).len(), 10);
        let w = Partition::all_by_weight(3, 5);
        assert!(w.iter().all(|p| p.weight() <= 5));
        // p(0)+..+p(5) restricted to <= 3 parts: 1+1+2+3+4+5
        assert_eq!(w.len(), 16);
    }
}
