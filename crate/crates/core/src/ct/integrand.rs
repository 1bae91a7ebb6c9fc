use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::{cmp_abs_one, pow, to_f64, Q};

/// The factor `1 - gamma * z^exp`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DenominatorFactor {
    pub gamma: Q,
    pub exp: Vec<i32>,
}

impl DenominatorFactor {
    pub fn new(gamma: Q, exp: Vec<i32>) -> Self {
        DenominatorFactor { gamma, exp }
    }

    pub fn n(&self) -> usize {
        self.exp.len()
    }

    pub fn is_scalar(&self) -> bool {
        self.exp.iter().all(|&x| x == 0)
    }

    pub fn on_torus(&self) -> bool {
        cmp_abs_one(&self.gamma) == std::cmp::Ordering::Equal
    }

    pub fn as_poly(&self) -> LaurentPoly {
        let n = self.n();
        let mut p = LaurentPoly::one(n);
        p.add_term(self.exp.clone(), -self.gamma.clone());
        p
    }

    pub fn eval(&self, z: &[Q]) -> Q {
        let mut m = self.gamma.clone();
        for (zi, &e) in z.iter().zip(&self.exp) {
            if e != 0 {
                m *= pow(zi, e as i64);
            }
        }
        Q::one() - m
    }

    pub fn eval_complex(&self, z: &[Complex64]) -> Complex64 {
        let mut m = Complex64::new(to_f64(&self.gamma), 0.0);
        for (zi, &e) in z.iter().zip(&self.exp) {
            if e != 0 {
                m *= zi.powi(e);
            }
        }
        Complex64::new(1.0, 0.0) - m
    }

    /// Rewrites `1/(1 - g X)` with `|g| > 1` as `(-X^{-1}/g) / (1 - X^{-1}/g)`;
    /// returns the monomial multiplier `(coefficient, exponent)` and the new factor.
    pub fn inverted(&self) -> ((Q, Vec<i32>), DenominatorFactor) {
        let g = self.gamma.recip();
        let neg: Vec<i32> = self.exp.iter().map(|x| -x).collect();
        ((-g.clone(), neg.clone()), DenominatorFactor { gamma: g, exp: neg })
    }
}

impl fmt::Display for DenominatorFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = LaurentPoly::monomial(self.exp.clone(), self.gamma.abs());
        let sign = if self.gamma.is_negative() { "+" } else { "-" };
        write!(f, "(1 {sign} {mono})")
    }
}

/// `numerator / prod(denominators)`, a rational function on the torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredIntegrand {
    pub numerator: LaurentPoly,
    pub denominators: Vec<DenominatorFactor>,
}

impl FactoredIntegrand {
    pub fn new(numerator: LaurentPoly, denominators: Vec<DenominatorFactor>) -> Result<Self> {
        for d in &denominators {
            if d.n() != numerator.n() {
                return Err(Error::VariableMismatch { left: numerator.n(), right: d.n() });
            }
            if d.gamma.is_zero() {
                return Err(Error::OutOfRange(format!("denominator factor {d} with gamma = 0")));
            }
            if d.is_scalar() && d.gamma.is_one() {
                return Err(Error::NonGeneric(format!("denominator factor {d}")));
            }
        }
        Ok(FactoredIntegrand { numerator, denominators })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        FactoredIntegrand { numerator: p, denominators: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.numerator.n()
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<Self> {
        Ok(FactoredIntegrand {
            numerator: self.numerator.try_mul(p)?,
            denominators: self.denominators.clone(),
        })
    }

    pub fn scale(&self, c: &Q) -> Self {
        FactoredIntegrand {
            numerator: self.numerator.scale(c),
            denominators: self.denominators.clone(),
        }
    }

    pub fn mul(&self, other: &FactoredIntegrand) -> Result<Self> {
        let mut dens = self.denominators.clone();
        dens.extend(other.denominators.iter().cloned());
        Ok(FactoredIntegrand { numerator: self.numerator.try_mul(&other.numerator)?, denominators: dens })
    }

    /// Exact value at a rational point; a vanishing denominator is reported
    /// as a genericity failure.
    pub fn eval(&self, z: &[Q]) -> Result<Q> {
        let mut den = Q::one();
        for d in &self.denominators {
            let v = d.eval(z);
            if v.is_zero() {
                return Err(Error::NonGeneric(format!("{d} at the evaluation point")));
            }
            den *= v;
        }
        Ok(self.numerator.eval(z) / den)
    }

    pub fn eval_complex(&self, z: &[Complex64]) -> Complex64 {
        let den: Complex64 = self.denominators.iter().map(|d| d.eval_complex(z)).product();
        self.numerator.eval_complex(z) / den
    }
}

impl fmt::Display for FactoredIntegrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.numerator)?;
        for d in &self.denominators {
            write!(f, " / {d}")?;
        }
        Ok(())
    }
}
