use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::integrand::{DenominatorFactor, FactoredIntegrand};
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::params::ParameterPoint;
use crate::scalar::{qi, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensityKind {
    /// The `W(BC_n)`-invariant weight in `t, t0..t3`, normalized by `1/(2^n n!)`.
    Symmetric,
    /// The `q = 0` nonsymmetric weight in `t, a, b, c, d`.
    Nonsymmetric,
}

impl DensityKind {
    pub fn parameter_names(self) -> &'static [&'static str] {
        match self {
            DensityKind::Symmetric => &["t", "t0", "t1", "t2", "t3"],
            DensityKind::Nonsymmetric => &["t", "a", "b", "c", "d"],
        }
    }
}

fn unit(n: usize, entries: &[(usize, i32)]) -> Vec<i32> {
    let mut e = vec![0; n];
    for &(i, k) in entries {
        e[i] += k;
    }
    e
}

/// `1 - z^e`
fn one_minus(n: usize, entries: &[(usize, i32)]) -> LaurentPoly {
    let mut p = LaurentPoly::one(n);
    p.add_term(unit(n, entries), -Q::one());
    p
}

fn push(dens: &mut Vec<DenominatorFactor>, gamma: &Q, exp: Vec<i32>) {
    if !gamma.is_zero() {
        dens.push(DenominatorFactor::new(gamma.clone(), exp));
    }
}

/// Builds the density as a factored integrand. Parameters equal to zero
/// drop their factors.
pub fn build_density(kind: DensityKind, n: usize, p: &ParameterPoint) -> Result<FactoredIntegrand> {
    p.check_moduli(kind.parameter_names())?;
    let mut num = LaurentPoly::one(n);
    let mut dens = Vec::new();
    match kind {
        DensityKind::Symmetric => {
            for i in 0..n {
                num = &num * &one_minus(n, &[(i, 2)]);
                num = &num * &one_minus(n, &[(i, -2)]);
                for tk in p.ts() {
                    push(&mut dens, &tk, unit(n, &[(i, 1)]));
                    push(&mut dens, &tk, unit(n, &[(i, -1)]));
                }
            }
            for i in 0..n {
                for j in i + 1..n {
                    for (si, sj) in [(1, 1), (-1, -1), (-1, 1), (1, -1)] {
                        num = &num * &one_minus(n, &[(i, si), (j, sj)]);
                        push(&mut dens, &p.t, unit(n, &[(i, si), (j, sj)]));
                    }
                }
            }
            let mut norm = qi(1);
            for k in 1..=n as i64 {
                norm *= qi(2 * k);
            }
            num = num.scale(&norm.recip());
        }
        DensityKind::Nonsymmetric => {
            for i in 0..n {
                num = &num * &one_minus(n, &[(i, 2)]);
                for g in [&p.a, &p.b, &p.c, &p.d] {
                    push(&mut dens, g, unit(n, &[(i, 1)]));
                }
                for g in [&p.c, &p.d] {
                    push(&mut dens, g, unit(n, &[(i, -1)]));
                }
            }
            for i in 0..n {
                for j in i + 1..n {
                    for sj in [1, -1] {
                        num = &num * &one_minus(n, &[(i, 1), (j, sj)]);
                        push(&mut dens, &p.t, unit(n, &[(i, 1), (j, sj)]));
                    }
                }
            }
        }
    }
    FactoredIntegrand::new(num, dens)
}
