//! Constant terms of one-variable rational functions by partial fractions.
//!
//! Used when the pole-by-pole route is unavailable: inner factors of degree
//! two or more with irrational roots, or repeated poles. With all poles of
//! `H` inside the circle and all poles of `G` outside, the inside residues
//! of `P / (H G)` are those of `A / H` where `A = P G^{-1} mod H`, and for
//! `deg A < deg H` their sum is the coefficient of `z^{deg H - 1}` in `A`
//! over the leading coefficient of `H`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Q;

/// Dense polynomial, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensePoly(Vec<Q>);

impl DensePoly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        DensePoly(c)
    }

    pub fn one() -> Self {
        DensePoly(vec![Q::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.0.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn mul(&self, o: &DensePoly) -> DensePoly {
        if self.is_zero() || o.is_zero() {
            return DensePoly(vec![]);
        }
        let mut out = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::new(out)
    }

    pub fn sub(&self, o: &DensePoly) -> DensePoly {
        let len = self.0.len().max(o.0.len());
        DensePoly::new((0..len).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Q) -> DensePoly {
        DensePoly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn div_rem(&self, d: &DensePoly) -> (DensePoly, DensePoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.0[dd].recip();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (DensePoly(vec![]), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, x) in d.0.iter().enumerate() {
                rem[k - dd + j] -= &c * x;
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (DensePoly::new(quot), DensePoly::new(rem))
    }

    /// `self^{-1} mod m`, if the two are coprime.
    pub fn inverse_mod(&self, m: &DensePoly) -> Option<DensePoly> {
        let (mut r0, mut r1) = (m.clone(), self.div_rem(m).1);
        let (mut s0, mut s1) = (DensePoly(vec![]), DensePoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let inv = r0.0[0].recip();
        Some(s0.scale(&inv).div_rem(m).1)
    }
}

/// Factors `(gamma, e)` stand for `1 - gamma z^e` with `|gamma| < 1`.
/// `numerator` is given by `(exponent, coefficient)` pairs.
pub fn univariate_ct(numerator: &[(i32, Q)], factors: &[(Q, i32)]) -> Result<Q> {
    if numerator.is_empty() {
        return Ok(Q::zero());
    }
    // f / z = z^{shift} P(z) / (prod_inner (z^m - g) * prod_outer (1 - g z^e))
    let low = numerator.iter().map(|(e, _)| *e).min().unwrap();
    let mut p = vec![Q::zero(); (numerator.iter().map(|(e, _)| *e).max().unwrap() - low + 1) as usize];
    for (e, c) in numerator {
        p[(e - low) as usize] += c;
    }
    let mut shift = low as i64 - 1;
    let mut h = DensePoly::one();
    let mut g = DensePoly::one();
    for (gamma, e) in factors {
        let m = e.unsigned_abs() as usize;
        let mut c = vec![Q::zero(); m + 1];
        if *e < 0 {
            c[0] = -gamma.clone();
            c[m] = Q::one();
            h = h.mul(&DensePoly::new(c));
            shift += m as i64;
        } else {
            c[0] = Q::one();
            c[m] = -gamma.clone();
            g = g.mul(&DensePoly::new(c));
        }
    }
    let mut p = DensePoly::new(p);
    if shift >= 0 {
        let mut c = vec![Q::zero(); shift as usize];
        c.push(Q::one());
        p = p.mul(&DensePoly::new(c));
    } else {
        let mut c = vec![Q::zero(); (-shift) as usize];
        c.push(Q::one());
        h = h.mul(&DensePoly::new(c));
    }
    let Some(dh) = h.degree().filter(|&d| d > 0) else {
        return Ok(Q::zero());
    };
    let ginv = g
        .inverse_mod(&h)
        .ok_or_else(|| Error::NonGeneric("inner and outer poles coincide".into()))?;
    let a = p.mul(&ginv).div_rem(&h).1;
    Ok(a.coeff(dh - 1) / h.coeff(dh))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    #[test]
    fn simple_and_double_poles() {
        // 1/((1 - c/z)(1 - d z)) -> 1/(1 - cd)
        let (c, d) = (q(1, 3), q(2, 5));
        let v = univariate_ct(&[(0, qi(1))], &[(c.clone(), -1), (d.clone(), 1)]).unwrap();
        assert_eq!(v, (Q::one() - &c * &d).recip());
        // 1/(1 - c/z)^2 = sum (k+1) c^k z^-k -> 1
        let v = univariate_ct(&[(0, qi(1))], &[(c.clone(), -1), (c.clone(), -1)]).unwrap();
        assert_eq!(v, qi(1));
        // z^{-1}/(1 - d z)^2 -> coefficient of z^1 in sum (k+1) d^k z^k = 2d
        let v = univariate_ct(&[(-1, qi(1))], &[(d.clone(), 1), (d.clone(), 1)]).unwrap();
        assert_eq!(v, qi(2) * &d);
    }

    #[test]
    fn quadratic_factors_on_both_sides() {
        // 1/((1 - g z^-2)(1 - h z^2)) = sum_k (gh)^k on the diagonal
        let (g, h) = (q(26, 27), q(1, 7));
        let v = univariate_ct(&[(0, qi(1))], &[(g.clone(), -2), (h.clone(), 2)]).unwrap();
        assert_eq!(v, (Q::one() - &g * &h).recip());
        // z^2 times it picks up g * (sum (gh)^k)
        let v = univariate_ct(&[(2, qi(1))], &[(g.clone(), -2), (h.clone(), 2)]).unwrap();
        assert_eq!(v, &g / (Q::one() - &g * &h));
    }
}
