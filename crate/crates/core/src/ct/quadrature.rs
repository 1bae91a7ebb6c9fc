use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::integrand::FactoredIntegrand;
use crate::error::{Error, Result};
use crate::scalar::to_f64;

pub const MAX_QUADRATURE_N: usize = 3;

/// Trapezoidal rule on the `N^n` grid of roots of unity.
///
/// Monomials are evaluated by index arithmetic, `z^e = w^(k·e mod N)`, so
/// the only rounding comes from the coefficients and the final sums.
pub fn ct_quadrature(integrand: &FactoredIntegrand, grid: usize) -> Result<Complex64> {
    let n = integrand.n();
    if grid < 32 {
        return Err(Error::OutOfRange(format!("quadrature grid {grid} (need >= 32)")));
    }
    if n > MAX_QUADRATURE_N {
        return Err(Error::OutOfRange(format!("quadrature in n = {n} variables")));
    }
    let roots: Vec<Complex64> = (0..grid)
        .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / grid as f64))
        .collect();
    let num: Vec<(Vec<i64>, f64)> = integrand
        .numerator
        .terms()
        .map(|(e, c)| (e.iter().map(|&x| x as i64).collect(), to_f64(c)))
        .collect();
    let dens: Vec<(Vec<i64>, f64)> = integrand
        .denominators
        .iter()
        .map(|d| (d.exp.iter().map(|&x| x as i64).collect(), to_f64(&d.gamma)))
        .collect();
    let g = grid as i64;
    let root = |idx: &[i64], e: &[i64]| {
        let s: i64 = idx.iter().zip(e).map(|(a, b)| a * b).sum();
        roots[s.rem_euclid(g) as usize]
    };
    let total = grid.pow(n as u32);
    let sum: Complex64 = (0..total)
        .into_par_iter()
        .map(|flat| {
            let mut idx = vec![0i64; n];
            let mut r = flat;
            for slot in idx.iter_mut() {
                *slot = (r % grid) as i64;
                r /= grid;
            }
            let top: Complex64 = num.iter().map(|(e, c)| root(&idx, e) * c).sum();
            let bottom: Complex64 = dens
                .iter()
                .map(|(e, c)| Complex64::new(1.0, 0.0) - root(&idx, e) * c)
                .product();
            top / bottom
        })
        .sum();
    Ok(sum / total as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::scalar::q;

    #[test]
    fn constants_and_trigonometric_polynomials_are_exact() {
        let one = FactoredIntegrand::from_poly(LaurentPoly::one(2));
        let v = ct_quadrature(&one, 32).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        let f = LaurentPoly::from_terms(2, [(vec![3, -5], q(2, 3)), (vec![0, 0], q(-1, 7)), (vec![-20, 1], q(1, 1))]);
        let v = ct_quadrature(&FactoredIntegrand::from_poly(f), 32).unwrap();
        assert!((v - Complex64::new(-1.0 / 7.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn rejects_small_grids_and_large_n() {
        let one = FactoredIntegrand::from_poly(LaurentPoly::one(4));
        assert!(ct_quadrature(&one, 64).is_err());
        assert!(ct_quadrature(&FactoredIntegrand::from_poly(LaurentPoly::one(1)), 8).is_err());
    }
}
