//! Polynomial families selectable by name.

use crate::ct::{build_density, constant_term, DensityKind, FactoredIntegrand};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::nonsymmetric::{e_along_word, e_composition, e_gram_schmidt, norm_closed, recursion_word, PqTable, WordOrder};
use crate::params::{Mode, ParameterPoint};
use crate::partition::{Composition, Partition};
use crate::scalar::Q;
use crate::symmetric::{k_poly, norm_n};

pub trait Family: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn mode(&self) -> Mode;
    /// Builds the polynomial indexed by `index` (zero-padded to `n`).
    fn build(&self, index: &[i32], n: usize, params: &ParameterPoint) -> Result<LaurentPoly>;

    fn density(&self) -> DensityKind {
        match self.mode() {
            Mode::Symmetric => DensityKind::Symmetric,
            Mode::Nonsymmetric => DensityKind::Nonsymmetric,
        }
    }

    /// The integrand of the family's inner product. Nonsymmetric members on
    /// the right are rebuilt at the inverted point before reflection.
    fn integrand(&self, left: &[i32], right: Operand<'_>, n: usize, params: &ParameterPoint) -> Result<FactoredIntegrand> {
        let f = self.build(left, n, params)?;
        let g = match right {
            Operand::Monomial(nu) => LaurentPoly::monomial(pad(nu, n)?, Q::from_integer(1.into())).reflect(),
            Operand::Member(index) => match self.mode() {
                Mode::Symmetric => self.build(index, n, params)?,
                Mode::Nonsymmetric => self.build(index, n, &params.inverted())?.reflect(),
            },
        };
        build_density(self.density(), n, params)?.mul_poly(&f.try_mul(&g)?)
    }

    /// Closed form for `inner(index, Member(index))`, where one is known:
    /// every partition, but no other composition.
    fn norm(&self, index: &[i32], n: usize, params: &ParameterPoint) -> Result<Option<Q>> {
        match self.mode() {
            Mode::Symmetric => norm_n(&Partition::padded(index, n)?, params).map(Some),
            Mode::Nonsymmetric => {
                let mu = Composition::new(pad(index, n)?);
                Ok(mu.is_partition().then(|| norm_closed(&mu, params)))
            }
        }
    }

    fn inner(&self, left: &[i32], right: Operand<'_>, n: usize, params: &ParameterPoint) -> Result<Q> {
        constant_term(&self.integrand(left, right, n, params)?)
    }
}

/// Right-hand side of an inner product: another member of the family or a
/// bare monomial `z^nu`.
#[derive(Debug, Clone, Copy)]
pub enum Operand<'a> {
    Member(&'a [i32]),
    Monomial(&'a [i32]),
}

fn pad(index: &[i32], n: usize) -> Result<Vec<i32>> {
    if index.len() > n {
        return Err(Error::OutOfRange(format!("index of length {} for n = {n}", index.len())));
    }
    let mut v = index.to_vec();
    v.resize(n, 0);
    Ok(v)
}

struct Symmetric;
struct Nonsymmetric(PqTable);
struct GramSchmidt;

impl Family for Symmetric {
    fn name(&self) -> &'static str {
        "symmetric"
    }
    fn description(&self) -> &'static str {
        "K_lambda by antisymmetrization and division by Δ_BC"
    }
    fn mode(&self) -> Mode {
        Mode::Symmetric
    }
    fn build(&self, index: &[i32], n: usize, params: &ParameterPoint) -> Result<LaurentPoly> {
        k_poly(&Partition::padded(index, n)?, params)
    }
}

impl Family for Nonsymmetric {
    fn name(&self) -> &'static str {
        match self.0 {
            PqTable::Corrected => "nonsymmetric",
            PqTable::Stated => "nonsymmetric-stated",
        }
    }
    fn description(&self) -> &'static str {
        match self.0 {
            PqTable::Corrected => "E_mu by the Hecke recursion",
            PqTable::Stated => "E_mu by the Hecke recursion using t^(2 r_lambda) in the T_n rows",
        }
    }
    fn mode(&self) -> Mode {
        Mode::Nonsymmetric
    }
    fn build(&self, index: &[i32], n: usize, params: &ParameterPoint) -> Result<LaurentPoly> {
        let mu = Composition::new(pad(index, n)?);
        match self.0 {
            PqTable::Corrected => e_composition(&mu, params),
            PqTable::Stated => e_along_word(&mu, &recursion_word(&mu, WordOrder::LowestFirst)?, params, PqTable::Stated),
        }
    }
}

impl Family for GramSchmidt {
    fn name(&self) -> &'static str {
        "nonsymmetric-gram-schmidt"
    }
    fn description(&self) -> &'static str {
        "E_mu from triangularity and orthogonality by solving the Gram system"
    }
    fn mode(&self) -> Mode {
        Mode::Nonsymmetric
    }
    fn build(&self, index: &[i32], n: usize, params: &ParameterPoint) -> Result<LaurentPoly> {
        e_gram_schmidt(&Composition::new(pad(index, n)?), params)
    }
}

pub fn registry() -> Vec<Box<dyn Family>> {
    vec![
        Box::new(Symmetric),
        Box::new(Nonsymmetric(PqTable::Corrected)),
        Box::new(Nonsymmetric(PqTable::Stated)),
        Box::new(GramSchmidt),
    ]
}

pub fn find(name: &str) -> Result<Box<dyn Family>> {
    registry()
        .into_iter()
        .find(|f| f.name() == name)
        .ok_or_else(|| Error::Unknown { kind: "family", name: name.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParamSampler;

    #[test]
    fn families_agree_where_they_should() {
        let p = ParamSampler::new(1).nonsymmetric();
        let rec = find("nonsymmetric").unwrap().build(&[0, 1], 2, &p).unwrap();
        let gs = find("nonsymmetric-gram-schmidt").unwrap().build(&[0, 1], 2, &p).unwrap();
        assert_eq!(rec, gs);
        assert!(find("symmetric").unwrap().build(&[1, 2], 2, &p).is_err());
        assert!(find("other").is_err());
    }

    #[test]
    fn monomial_pairing_below_vanishes() {
        let p = ParamSampler::new(2).nonsymmetric();
        let f = find("nonsymmetric").unwrap();
        assert_eq!(f.inner(&[1, 0], Operand::Monomial(&[0, 1]), 2, &p).unwrap(), Q::default());
    }
}
