//! The hyperoctahedral group B_n and the permutation statistics used in the
//! monicity argument for `K_lambda`.
//!
//! An element is a permutation `rho` together with signs `eps`, acting by
//! `z_i -> z_{rho(i)}^{eps(i)}`. In the word `z_{rho(1)}^{eps(1)} ... z_{rho(n)}^{eps(n)}`
//! the variable `z_i` sits at position `rho^{-1}(i)`, and that position
//! defines both `z_i ≺_w z_j` and `eps_w(z_i)`. Indices are 0-based here.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    rho: Vec<usize>,
    eps: Vec<i8>,
}

pub const MAX_N: usize = 8;

impl SignedPermutation {
    pub fn new(rho: Vec<usize>, eps: Vec<i8>) -> Result<Self> {
        let n = rho.len();
        if eps.len() != n {
            return Err(Error::VariableMismatch { left: n, right: eps.len() });
        }
        let mut seen = vec![false; n];
        for &r in &rho {
            if r >= n || std::mem::replace(&mut seen[r], true) {
                return Err(Error::OutOfRange(format!("{rho:?} is not a permutation")));
            }
        }
        if eps.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::OutOfRange(format!("signs {eps:?}")));
        }
        Ok(SignedPermutation { rho, eps })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { rho: (0..n).collect(), eps: vec![1; n] }
    }

    /// `s_i` for `1 <= i <= n`: swaps `z_i, z_{i+1}` when `i < n`, inverts
    /// `z_n` when `i = n`.
    pub fn simple_reflection(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        let mut w = Self::identity(n);
        if i < n {
            w.rho.swap(i - 1, i);
        } else {
            w.eps[n - 1] = -1;
        }
        w
    }

    pub fn n(&self) -> usize {
        self.rho.len()
    }

    pub fn rho(&self) -> &[usize] {
        &self.rho
    }

    pub fn eps(&self) -> &[i8] {
        &self.eps
    }

    pub fn is_unsigned(&self) -> bool {
        self.eps.iter().all(|&e| e == 1)
    }

    /// Position of `z_i` in the word, i.e. `rho^{-1}(i)`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n()];
        for (k, &r) in self.rho.iter().enumerate() {
            pos[r] = k;
        }
        pos
    }

    /// `eps_w(z_i)`: the exponent sign carried by `z_i` in the word.
    pub fn sign_of_var(&self, i: usize) -> i8 {
        self.eps[self.positions()[i]]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.n(), other.n());
        let rho = other.rho.iter().map(|&r| self.rho[r]).collect();
        let eps = (0..self.n()).map(|i| other.eps[i] * self.eps[other.rho[i]]).collect();
        SignedPermutation { rho, eps }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.n();
        let mut rho = vec![0; n];
        let mut eps = vec![1; n];
        for i in 0..n {
            rho[self.rho[i]] = i;
            eps[self.rho[i]] = self.eps[i];
        }
        SignedPermutation { rho, eps }
    }

    /// Image of the exponent vector of `z^mu`.
    pub fn apply_exponent(&self, mu: &[i32]) -> Vec<i32> {
        let mut out = vec![0; mu.len()];
        for (i, &m) in mu.iter().enumerate() {
            out[self.rho[i]] = self.eps[i] as i32 * m;
        }
        out
    }

    pub fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        if f.n() != self.n() {
            return Err(Error::VariableMismatch { left: self.n(), right: f.n() });
        }
        Ok(f.map_exponents(|e| self.apply_exponent(e)))
    }

    /// `eps(w)`: the determinant of the signed permutation matrix.
    pub fn sign(&self) -> i8 {
        let s: i8 = self.eps.iter().product();
        if inversions(&self.rho).is_multiple_of(2) {
            s
        } else {
            -s
        }
    }

    /// `n(w)`: pairs `i < j` with `z_j ≺_w z_i`.
    pub fn stat_n(&self) -> usize {
        let pos = self.positions();
        let n = self.n();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| pos[j] < pos[i])
            .count()
    }

    /// The negated variables among the one-part and zero-part positions of
    /// `lambda`: `(N^0, N^1)` as 0-based variable indices.
    pub fn negated_sets(&self, lambda: &Partition) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        assert_eq!(lambda.n(), n);
        let m0 = lambda.multiplicity(0);
        let m1 = lambda.multiplicity(1);
        let pos = self.positions();
        let neg = |i: &usize| self.eps[pos[*i]] == -1;
        let n1 = (n - m0 - m1..n - m0).filter(neg).collect();
        let n0 = (n - m0..n).filter(neg).collect();
        (n0, n1)
    }

    /// `c_lambda(w)`: pairs `i < j` with `z_i ≺_w z_j` and `z_i` negated at a
    /// zero or one part.
    pub fn stat_c(&self, lambda: &Partition) -> usize {
        let (n0, n1) = self.negated_sets(lambda);
        let pos = self.positions();
        let n = self.n();
        n0.iter()
            .chain(&n1)
            .map(|&i| (i + 1..n).filter(|&j| pos[i] < pos[j]).count())
            .sum()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<String> = self
            .rho
            .iter()
            .zip(&self.eps)
            .map(|(r, e)| if *e == 1 { format!("{}", r + 1) } else { format!("-{}", r + 1) })
            .collect();
        write!(f, "[{}]", word.join(" "))
    }
}

fn inversions(p: &[usize]) -> usize {
    let n = p.len();
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

fn check_n(n: usize) -> Result<()> {
    if (1..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("n = {n} (expected 1..={MAX_N})")))
    }
}

/// Every element of B_n, lexicographic in the permutation word and then in
/// the sign vector (`+` before `-`, first position most significant).
pub fn bn_iter(n: usize) -> Result<impl Iterator<Item = SignedPermutation>> {
    check_n(n)?;
    Ok((0..n).permutations(n).flat_map(move |rho| {
        (0u32..1 << n).map(move |mask| SignedPermutation {
            rho: rho.clone(),
            eps: (0..n).map(|i| if mask >> (n - 1 - i) & 1 == 1 { -1 } else { 1 }).collect(),
        })
    }))
}

pub fn enumerate_bn(n: usize) -> Result<Vec<SignedPermutation>> {
    Ok(bn_iter(n)?.collect())
}

/// The unsigned elements, i.e. the symmetric group S_n.
pub fn enumerate_sn(n: usize) -> Result<Vec<SignedPermutation>> {
    check_n(n)?;
    Ok((0..n)
        .permutations(n)
        .map(|rho| SignedPermutation { rho, eps: vec![1; n] })
        .collect())
}

/// `(P_{lambda,n}, B_{lambda,n})`: signed permutations whose underlying
/// permutation preserves `lambda`, with every variable at a part `>= 2`
/// carrying sign `+1` (for P) or `-1` (for B).
pub fn special_subsets(lambda: &Partition) -> Result<(Vec<SignedPermutation>, Vec<SignedPermutation>)> {
    let n = lambda.n();
    let parts = lambda.parts();
    let big = n - lambda.multiplicity(0) - lambda.multiplicity(1);
    let mut p = Vec::new();
    let mut b = Vec::new();
    for w in bn_iter(n)? {
        if (0..n).any(|i| parts[w.rho[i]] != parts[i]) {
            continue;
        }
        let pos = w.positions();
        let signs: Vec<i8> = (0..big).map(|i| w.eps[pos[i]]).collect();
        if signs.iter().all(|&s| s == 1) {
            p.push(w.clone());
        }
        if signs.iter().all(|&s| s == -1) {
            b.push(w);
        }
    }
    Ok((p, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi, Q};
    use num_traits::One;
    use std::collections::HashSet;

    fn part(v: &[i32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn cardinalities_and_no_duplicates() {
        for (n, expect) in [(1, 2), (2, 8), (3, 48), (4, 384)] {
            let all = enumerate_bn(n).unwrap();
            assert_eq!(all.len(), expect);
            assert_eq!(all.iter().collect::<HashSet<_>>().len(), expect);
        }
        assert!(enumerate_bn(0).is_err());
        assert!(enumerate_bn(9).is_err());
    }

    #[test]
    fn enumeration_is_sorted() {
        let all = enumerate_bn(3).unwrap();
        assert_eq!(all[0], SignedPermutation::identity(3));
        assert_eq!(all[1].eps(), &[1, 1, -1]);
        assert!(all.windows(2).all(|w| w[0].rho() <= w[1].rho()));
    }

    #[test]
    fn action_examples() {
        let f = LaurentPoly::monomial(vec![2, 1], qi(1));
        let w = SignedPermutation::new(vec![1, 0], vec![1, -1]).unwrap();
        assert_eq!(w.apply(&f).unwrap(), LaurentPoly::monomial(vec![-1, 2], qi(1)));
        let inv = SignedPermutation::new(vec![0], vec![-1]).unwrap();
        assert_eq!(
            inv.apply(&LaurentPoly::var_pow(1, 0, 1)).unwrap(),
            LaurentPoly::var_pow(1, 0, -1)
        );
        assert!(inv.apply(&f).is_err());
    }

    #[test]
    fn action_is_a_homomorphism() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for n in 1..=4 {
            let all = enumerate_bn(n).unwrap();
            let f = LaurentPoly::random(&mut rng, n, 6, 3);
            for k in 0..20 {
                let w1 = &all[(k * 7919) % all.len()];
                let w2 = &all[(k * 104729 + 3) % all.len()];
                let lhs = w1.apply(&w2.apply(&f).unwrap()).unwrap();
                assert_eq!(lhs, w1.compose(w2).apply(&f).unwrap());
                assert_eq!(w1.compose(&w1.inverse()), SignedPermutation::identity(n));
                assert_eq!(w1.compose(w2).sign(), w1.sign() * w2.sign());
            }
        }
    }

    #[test]
    fn reversal_in_s4_has_six_inversions() {
        let w = SignedPermutation::new(vec![3, 2, 1, 0], vec![1; 4]).unwrap();
        assert_eq!(w.stat_n(), 6);
        assert_eq!(SignedPermutation::identity(4).stat_n(), 0);
    }

    #[test]
    fn unsigned_elements_have_empty_sets() {
        let lambda = part(&[2, 1, 0]);
        for w in enumerate_sn(3).unwrap() {
            assert_eq!(w.stat_c(&lambda), 0);
            assert_eq!(w.negated_sets(&lambda), (vec![], vec![]));
        }
    }

    #[test]
    fn stat1_small() {
        // (1 + t)(1 + t + t^2) at t = 2/5
        let t = q(2, 5);
        let lhs: Q = enumerate_sn(3)
            .unwrap()
            .iter()
            .map(|w| crate::scalar::pow(&t, w.stat_n() as i64))
            .sum();
        assert_eq!(lhs, (Q::one() + &t) * (Q::one() + &t + &t * &t));
    }

    #[test]
    fn special_subset_sizes() {
        let (p, b) = special_subsets(&part(&[3, 2])).unwrap();
        assert_eq!(p, vec![SignedPermutation::identity(2)]);
        assert_eq!(b.len(), 1);
        assert_eq!(special_subsets(&part(&[0, 0])).unwrap().0.len(), 8);
        let (p, b) = special_subsets(&part(&[1, 1, 0])).unwrap();
        assert_eq!(p.len(), 16);
        assert_eq!(b.len(), 16);
        let (p, _) = special_subsets(&part(&[2, 2, 1])).unwrap();
        assert_eq!(p.len(), 2 * 2);
    }
}
