use super::density::{build_density, DensityKind};
use super::residue::constant_term;
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::params::ParameterPoint;
use crate::scalar::Q;

/// `CT(f g Δ̃)` against the symmetric density.
pub fn symmetric_inner(f: &LaurentPoly, g: &LaurentPoly, params: &ParameterPoint) -> Result<Q> {
    let density = build_density(DensityKind::Symmetric, f.n(), params)?;
    constant_term(&density.mul_poly(&f.try_mul(g)?)?)
}

/// `<f, g>_0 = CT(f ḡ^ι Δ_K)`. The second operand is given by its
/// constructor: it is rebuilt at the inverted parameter point and then
/// reflected `z -> 1/z`.
pub fn inner_product_0(
    f: &LaurentPoly,
    g_builder: impl Fn(&ParameterPoint) -> Result<LaurentPoly>,
    params: &ParameterPoint,
) -> Result<Q> {
    let g_twisted = g_builder(&params.inverted())?.reflect();
    let density = build_density(DensityKind::Nonsymmetric, f.n(), params)?;
    constant_term(&density.mul_poly(&f.try_mul(&g_twisted)?)?)
}

/// `<f, z^nu>_0`: a monomial has no parameters, so the twist is `z^{-nu}`.
pub fn inner_product_0_monomial(f: &LaurentPoly, nu: &[i32], params: &ParameterPoint) -> Result<Q> {
    let mono = LaurentPoly::monomial(nu.to_vec(), num_traits::One::one());
    inner_product_0(f, |_| Ok(mono.clone()), params)
}
