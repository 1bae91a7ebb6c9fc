//! Torus constant terms: densities, the exact residue engine, a quadrature
//! cross-check, closed forms and the two inner products.

pub mod closed_form;
pub mod density;
pub mod inner;
pub mod integrand;
pub mod quadrature;
pub mod residue;
pub mod univariate;

pub use density::{build_density, DensityKind};
pub use inner::{inner_product_0, inner_product_0_monomial, symmetric_inner};
pub use integrand::{DenominatorFactor, FactoredIntegrand};
pub use quadrature::ct_quadrature;
pub use residue::{constant_term, constant_term_with_order};

use crate::error::Result;
use crate::params::ParameterPoint;
use crate::scalar::Q;

/// Constant term of the symmetric density in `n` variables.
pub fn symmetric_ct(n: usize, params: &ParameterPoint) -> Result<Q> {
    if n == 0 {
        return Ok(num_traits::One::one());
    }
    constant_term(&build_density(DensityKind::Symmetric, n, params)?)
}

/// Constant term of the nonsymmetric density in `n` variables.
pub fn nonsymmetric_ct(n: usize, params: &ParameterPoint) -> Result<Q> {
    if n == 0 {
        return Ok(num_traits::One::one());
    }
    constant_term(&build_density(DensityKind::Nonsymmetric, n, params)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParamSampler;
    use std::time::Instant;

    #[test]
    fn densities_match_closed_forms() {
        let mut s = ParamSampler::new(3);
        for n in 1..=3 {
            let p = s.nonsymmetric();
            let start = Instant::now();
            let v = nonsymmetric_ct(n, &p).unwrap();
            assert_eq!(v, closed_form::nonsymmetric_ct_closed(n, &p.t, &p.a, &p.b, &p.c, &p.d), "n = {n}");
            eprintln!("nonsym n={n} {:?}", start.elapsed());
            let p = s.symmetric();
            let start = Instant::now();
            let v = symmetric_ct(n, &p).unwrap();
            assert_eq!(v, closed_form::symmetric_ct_closed(n, &p.t, &p.t0, &p.t1, &p.t2, &p.t3), "n = {n}");
            eprintln!("sym n={n} {:?}", start.elapsed());
        }
    }
}
