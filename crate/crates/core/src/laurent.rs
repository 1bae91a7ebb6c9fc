//! Multivariate Laurent polynomials with exact rational coefficients.
//!
//! Exponent vectors are dense `Vec<i32>` of length `n`, stored in a
//! `BTreeMap` so that iteration order is lexicographic with `z1` most
//! significant. Lex order on `Z^n` is a group order, which is what makes
//! the leading-term division below work directly in the Laurent ring.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::{format_fraction, parse_fraction, pow, to_f64, Q};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Vec<i32>, Q>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Q) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Q::one())
    }

    pub fn monomial(exp: Vec<i32>, c: Q) -> Self {
        let mut p = LaurentPoly::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// `z_i^k` (0-based `i`).
    pub fn var_pow(n: usize, i: usize, k: i32) -> Self {
        let mut e = vec![0; n];
        e[i] = k;
        Self::monomial(e, Q::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Vec<i32>, Q)>) -> Self {
        let mut p = LaurentPoly::zero(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i32>, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Vec<i32>, Q)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> Q {
        self.terms.get(exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&vec![0; self.n])
    }

    /// True when the only monomial present is `z^0`.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Accumulates `c * z^exp`, dropping the entry if it cancels.
    pub fn add_term(&mut self, exp: Vec<i32>, c: Q) {
        debug_assert_eq!(exp.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lex-largest term.
    pub fn leading(&self) -> Option<(&Vec<i32>, &Q)> {
        self.terms.iter().next_back()
    }

    /// Lex-smallest term.
    pub fn trailing(&self) -> Option<(&Vec<i32>, &Q)> {
        self.terms.iter().next()
    }

    /// `(min, max)` exponent of variable `i`, or `None` for the zero polynomial.
    pub fn degree_range(&self, i: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[i]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    fn check_n(&self, other: &LaurentPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_n(other)?;
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc: HashMap<Vec<i32>, Q> = HashMap::with_capacity(small.len() * big.len());
        for (e1, c1) in &small.terms {
            for (e2, c2) in &big.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let c = c1 * c2;
                match acc.entry(e) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => *o.get_mut() += c,
                }
            }
        }
        Ok(LaurentPoly {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &Q) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by `c * z^exp`.
    pub fn mul_monomial(&self, exp: &[i32], c: &Q) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.n);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Applies an exponent map that is a bijection on `Z^n` (coefficients
    /// are carried along unchanged).
    pub fn map_exponents(&self, mut f: impl FnMut(&[i32]) -> Vec<i32>) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// `z -> z^{-1}` in every variable.
    pub fn reflect(&self) -> LaurentPoly {
        self.map_exponents(|e| e.iter().map(|x| -x).collect())
    }

    /// Substitutes `z_v = gamma * z^m` where `m[v] == 0`. The result no
    /// longer depends on `z_v`.
    pub fn substitute(&self, v: usize, gamma: &Q, m: &[i32]) -> LaurentPoly {
        debug_assert_eq!(m[v], 0);
        let mut powers: HashMap<i32, Q> = HashMap::new();
        let mut out = LaurentPoly::zero(self.n);
        for (e, c) in &self.terms {
            let k = e[v];
            let g = powers.entry(k).or_insert_with(|| pow(gamma, k as i64)).clone();
            let mut ne = e.clone();
            ne[v] = 0;
            for (x, y) in ne.iter_mut().zip(m) {
                *x += k * y;
            }
            out.add_term(ne, c * g);
        }
        out
    }

    /// Groups terms by the exponent of `z_v`; the returned polynomials have
    /// `z_v` removed (exponent zero).
    pub fn split_by_var(&self, v: usize) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = std::mem::replace(&mut ne[v], 0);
            out.entry(k)
                .or_insert_with(|| LaurentPoly::zero(self.n))
                .add_term(ne, c.clone());
        }
        out
    }

    /// Exact evaluation at a point with nonzero rational coordinates.
    pub fn eval(&self, z: &[Q]) -> Q {
        assert_eq!(z.len(), self.n);
        let mut cache: Vec<HashMap<i32, Q>> = vec![HashMap::new(); self.n];
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k != 0 {
                    let p = cache[i].entry(k).or_insert_with(|| pow(&z[i], k as i64));
                    term *= &*p;
                }
            }
            acc += term;
        }
        acc
    }

    /// Floating-point evaluation at a complex point.
    pub fn eval_complex(&self, z: &[Complex64]) -> Complex64 {
        assert_eq!(z.len(), self.n);
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut term = Complex64::new(to_f64(c), 0.0);
                for (i, &k) in e.iter().enumerate() {
                    if k != 0 {
                        term *= z[i].powi(k);
                    }
                }
                term
            })
            .sum()
    }

    /// Divides by `1 - gamma * z^m`, returning `None` when the division
    /// leaves a remainder.
    ///
    /// The monomials of `self` split into chains `r + k m`; along each chain
    /// the quotient obeys `q_k = f_k + gamma q_{k-1}`, and divisibility is the
    /// vanishing of the value one step past the top of the chain.
    pub fn div_binomial(&self, gamma: &Q, m: &[i32]) -> Option<LaurentPoly> {
        assert_eq!(m.len(), self.n);
        let Some(p) = m.iter().position(|&x| x != 0) else {
            let s = Q::one() - gamma;
            return if s.is_zero() { None } else { Some(self.scale(&s.recip())) };
        };
        if gamma.is_zero() {
            return Some(self.clone());
        }
        let mut chains: HashMap<Vec<i32>, BTreeMap<i32, Q>> = HashMap::new();
        for (e, c) in &self.terms {
            let k = e[p].div_euclid(m[p]);
            let rep: Vec<i32> = e.iter().zip(m).map(|(x, y)| x - k * y).collect();
            chains.entry(rep).or_default().insert(k, c.clone());
        }
        let mut out = LaurentPoly::zero(self.n);
        for (rep, chain) in chains {
            let kmin = *chain.keys().next().unwrap();
            let kmax = *chain.keys().next_back().unwrap();
            let mut prev = Q::zero();
            for k in kmin..=kmax {
                let f = chain.get(&k).cloned().unwrap_or_else(Q::zero);
                let cur = f + gamma * &prev;
                if k == kmax {
                    if !cur.is_zero() {
                        return None;
                    }
                } else if !cur.is_zero() {
                    let e: Vec<i32> = rep.iter().zip(m).map(|(x, y)| x + k * y).collect();
                    out.add_term(e, cur.clone());
                }
                prev = cur;
            }
        }
        Some(out)
    }

    /// Exact quotient `self / g` in the Laurent ring.
    ///
    /// Binomial divisors use [`LaurentPoly::div_binomial`]; anything larger
    /// goes through lex leading-term division, which stops with an error
    /// once the next quotient term would fall below the lowest one possible.
    pub fn exact_div(&self, g: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_n(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.n));
        }
        let mut gt = g.terms.iter();
        if g.len() == 1 {
            let (e, c) = gt.next().unwrap();
            let inv: Vec<i32> = e.iter().map(|x| -x).collect();
            return Ok(self.mul_monomial(&inv, &c.recip()));
        }
        if g.len() == 2 {
            let (e1, c1) = gt.next().unwrap();
            let (e2, c2) = gt.next().unwrap();
            let gamma = -(c2 / c1);
            let m: Vec<i32> = e2.iter().zip(e1).map(|(a, b)| a - b).collect();
            let inv: Vec<i32> = e1.iter().map(|x| -x).collect();
            return self
                .div_binomial(&gamma, &m)
                .map(|q| q.mul_monomial(&inv, &c1.recip()))
                .ok_or_else(|| Error::InexactDivision("binomial divisor leaves a remainder".into()));
        }
        let (lg_e, lg_c) = g.leading().unwrap();
        let (tg_e, _) = g.trailing().unwrap();
        let (tf_e, _) = self.trailing().unwrap();
        let floor: Vec<i32> = tf_e.iter().zip(tg_e).map(|(a, b)| a - b).collect();
        let lg_inv = lg_c.recip();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.n);
        while let Some((e, c)) = rem.leading() {
            let qe: Vec<i32> = e.iter().zip(lg_e).map(|(a, b)| a - b).collect();
            if qe < floor {
                return Err(Error::InexactDivision(format!(
                    "{} terms of remainder left",
                    rem.len()
                )));
            }
            let qc = c * &lg_inv;
            for (ge, gc) in &g.terms {
                let ne: Vec<i32> = ge.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(ne, -(&qc * gc));
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// A random polynomial with `terms` monomials, exponents in
    /// `-max_exp..=max_exp` and small integer-over-small coefficients.
    pub fn random<R: Rng>(rng: &mut R, n: usize, terms: usize, max_exp: i32) -> LaurentPoly {
        let mut p = LaurentPoly::zero(n);
        for _ in 0..terms {
            let e: Vec<i32> = (0..n).map(|_| rng.gen_range(-max_exp..=max_exp)).collect();
            let num = rng.gen_range(-9i64..=9);
            let den = rng.gen_range(1i64..=7);
            p.add_term(e, crate::scalar::q(num, den));
        }
        p
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson { exp: e.clone(), coeff: format_fraction(c) })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let mut p = LaurentPoly::zero(j.n);
        for t in &j.terms {
            if t.exp.len() != j.n {
                return Err(Error::Parse(format!(
                    "exponent {:?} has length {} but n = {}",
                    t.exp,
                    t.exp.len(),
                    j.n
                )));
            }
            p.add_term(t.exp.clone(), parse_fraction(&t.coeff)?);
        }
        Ok(p)
    }
}

/// Interchange form `{"n": .., "terms": [{"exp": [..], "coeff": "p/q"}]}`
/// with terms in ascending lexicographic exponent order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub coeff: String,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[n={}]({self})", self.n)
    }
}

/// Human-readable form, highest lex term first: `z1^2 - 8/15*z1 + 1/15`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| if k == 1 { format!("z{}", i + 1) } else { format!("z{}^{}", i + 1, k) })
                .collect();
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff = if abs.is_integer() { abs.numer().to_string() } else { format!("{}/{}", abs.numer(), abs.denom()) };
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{coeff}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Q::one())
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// `m_lambda`: the sum of the distinct monomials in the B_n orbit of
/// `z^lambda`, each with coefficient one.
pub fn monomial_orbit_sum(lambda: &Partition, n: usize) -> Result<LaurentPoly> {
    if lambda.length() > n {
        return Err(Error::OutOfRange(format!("l({lambda}) > n = {n}")));
    }
    let mut parts: Vec<i32> = lambda.parts().iter().copied().filter(|&x| x != 0).collect();
    parts.resize(n, 0);
    let mut out = LaurentPoly::zero(n);
    let mut seen = std::collections::BTreeSet::new();
    for perm in itertools::Itertools::permutations(0..n, n) {
        let base: Vec<i32> = perm.iter().map(|&i| parts[i]).collect();
        for mask in 0u32..(1 << n) {
            let e: Vec<i32> = base
                .iter()
                .enumerate()
                .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                .collect();
            if seen.insert(e.clone()) {
                out.add_term(e, Q::one());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};
    use proptest::prelude::*;

    fn z(n: usize, i: usize, k: i32) -> LaurentPoly {
        LaurentPoly::var_pow(n, i, k)
    }

    #[test]
    fn difference_of_squares() {
        let a = &z(1, 0, 1) + &z(1, 0, -1);
        let b = &z(1, 0, 1) - &z(1, 0, -1);
        assert_eq!(&a * &b, &z(1, 0, 2) - &z(1, 0, -2));
    }

    #[test]
    fn additive_identity() {
        let f = &z(2, 0, 3) + &LaurentPoly::constant(2, q(2, 7));
        assert_eq!(&f + &LaurentPoly::zero(2), f);
    }

    #[test]
    fn e_lambda_expansion_at_n1() {
        let (c, d) = (q(1, 3), q(1, 5));
        let one = LaurentPoly::one(1);
        let f = &(&one - &z(1, 0, -1).scale(&c)) * &(&one - &z(1, 0, -1).scale(&d));
        let f = &f * &z(1, 0, 2);
        let expect = LaurentPoly::from_terms(1, [(vec![2], qi(1)), (vec![1], -(&c + &d)), (vec![0], &c * &d)]);
        assert_eq!(f, expect);
        assert_eq!(f.to_string(), "z1^2 - 8/15*z1 + 1/15");
    }

    #[test]
    fn mismatch_is_reported() {
        assert_eq!(
            LaurentPoly::one(1).try_add(&LaurentPoly::one(2)),
            Err(Error::VariableMismatch { left: 1, right: 2 })
        );
        assert!(LaurentPoly::one(1).exact_div(&LaurentPoly::one(3)).is_err());
    }

    #[test]
    fn exact_division_examples() {
        let f = &z(1, 0, 2) - &z(1, 0, -2);
        let g = &z(1, 0, 1) - &z(1, 0, -1);
        assert_eq!(f.exact_div(&g).unwrap(), &z(1, 0, 1) + &z(1, 0, -1));
        // a three-term divisor goes through the lex path
        let g3 = &(&z(2, 0, 1) + &z(2, 1, -1)) + &LaurentPoly::constant(2, q(1, 2));
        let h = &(&z(2, 0, -2) - &z(2, 1, 3)) + &LaurentPoly::constant(2, qi(4));
        assert_eq!((&h * &g3).exact_div(&g3).unwrap(), h);
        assert!(matches!(
            (&(&h * &g3) + &LaurentPoly::one(2)).exact_div(&g3),
            Err(Error::InexactDivision(_))
        ));
        assert!(matches!(
            h.exact_div(&g),
            Err(Error::VariableMismatch { .. })
        ));
        assert_eq!(h.exact_div(&LaurentPoly::zero(2)), Err(Error::DivisionByZero));
    }

    #[test]
    fn binomial_division_detects_remainders() {
        let one = LaurentPoly::one(2);
        let b = &one - &LaurentPoly::monomial(vec![2, -1], q(3, 4));
        let f = &b * &(&z(2, 0, -1) + &z(2, 1, 5));
        assert_eq!(f.div_binomial(&q(3, 4), &[2, -1]).unwrap(), &z(2, 0, -1) + &z(2, 1, 5));
        assert!((&f + &one).div_binomial(&q(3, 4), &[2, -1]).is_none());
        assert!(f.div_binomial(&q(3, 5), &[2, -1]).is_none());
    }

    #[test]
    fn substitution_and_evaluation_agree() {
        let f = LaurentPoly::from_terms(2, [(vec![2, 1], qi(3)), (vec![-1, 0], q(1, 2)), (vec![0, -2], qi(1))]);
        let g = f.substitute(0, &q(2, 3), &[0, -1]);
        let w = q(5, 7);
        let direct = f.eval(&[q(2, 3) / &w, w.clone()]);
        assert_eq!(g.eval(&[qi(1), w]), direct);
    }

    #[test]
    fn orbit_sums() {
        let p = |v: &[i32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(monomial_orbit_sum(&p(&[0, 0]), 2).unwrap(), LaurentPoly::one(2));
        assert_eq!(monomial_orbit_sum(&p(&[1]), 1).unwrap(), &z(1, 0, 1) + &z(1, 0, -1));
        let m = monomial_orbit_sum(&p(&[2, 1]), 2).unwrap();
        // brute force: all signed rearrangements of (2, 1)
        let mut expect = std::collections::BTreeSet::new();
        for (a, b) in [(2, 1), (1, 2)] {
            for s in [1, -1] {
                for t in [1, -1] {
                    expect.insert(vec![s * a, t * b]);
                }
            }
        }
        assert_eq!(expect.len(), 8);
        assert_eq!(m.len(), 8);
        assert!(m.terms().all(|(e, c)| expect.contains(e) && c.is_one()));
    }

    #[test]
    fn json_roundtrip_shape() {
        let f = LaurentPoly::from_terms(2, [(vec![1, -1], q(-2, 3)), (vec![0, 0], qi(1))]);
        let j = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(j, r#"{"n":2,"terms":[{"exp":[0,0],"coeff":"1/1"},{"exp":[1,-1],"coeff":"-2/3"}]}"#);
        let back: PolyJson = serde_json::from_str(&j).unwrap();
        assert_eq!(LaurentPoly::from_json(&back).unwrap(), f);
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(
            (prop::collection::vec(-3i32..=3, n), -6i64..=6, 1i64..=5),
            0..6,
        )
        .prop_map(move |ts| LaurentPoly::from_terms(n, ts.into_iter().map(|(e, a, b)| (e, q(a, b)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(2), g in arb_poly(2), h in arb_poly(2)) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f + &g) - &g, f.clone());
        }

        #[test]
        fn division_inverts_multiplication(f in arb_poly(3), g in arb_poly(3)) {
            prop_assume!(!g.is_zero());
            prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
        }

        #[test]
        fn json_roundtrip(f in arb_poly(3)) {
            prop_assert_eq!(LaurentPoly::from_json(&f.to_json()).unwrap(), f);
        }
    }
}
