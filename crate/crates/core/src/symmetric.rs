//! Symmetric BC_n Hall–Littlewood polynomials `K_lambda`.
//!
//! `K_lambda` is the B_n-symmetrization of a product of one- and two-variable
//! rational factors, normalized by `v_lambda`. Multiplying through by the
//! antisymmetric `Δ_BC` turns every summand into a Laurent polynomial, so the
//! construction here antisymmetrizes that polynomial and divides by `Δ_BC`.
//! The raw rational sum is kept as [`k_rational_sum_at`] for cross-checks.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::ct::{self, closed_form, DenominatorFactor, FactoredIntegrand};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::params::ParameterPoint;
use crate::partition::Partition;
use crate::scalar::{pow, Q};
use crate::signed_perm::{bn_iter, SignedPermutation};

/// `(1 - t^m)/(1 - t) ... (1 - t)/(1 - t)` written as a product of
/// geometric sums so that it stays defined at `t = 1`.
fn t_factorial(m: usize, t: &Q) -> Q {
    let mut out = Q::one();
    let mut sum = Q::zero();
    let mut tj = Q::one();
    for _ in 0..m {
        sum += &tj;
        tj *= t;
        out *= &sum;
    }
    out
}

fn t_product(p: &ParameterPoint) -> Q {
    &p.t0 * &p.t1 * &p.t2 * &p.t3
}

fn one_parts_factor(lambda: &Partition, p: &ParameterPoint) -> Q {
    let m0 = lambda.multiplicity(0) as i64;
    let m1 = lambda.multiplicity(1) as i64;
    let tt = t_product(p);
    (1..=m1).map(|i| Q::one() - &tt * pow(&p.t, i - 1 + 2 * m0)).product()
}

fn distinct_nonzero_parts(lambda: &Partition) -> Vec<i32> {
    let mut parts: Vec<i32> = lambda.parts().iter().copied().filter(|&x| x > 0).collect();
    parts.dedup();
    parts
}

/// `v_lambda(t; a, b; t0..t3)`.
pub fn v_lambda(lambda: &Partition, p: &ParameterPoint) -> Q {
    let m0 = lambda.multiplicity(0);
    let ab = &p.a * &p.b;
    let zero_parts: Q = (1..=m0 as i64).map(|i| Q::one() - &ab * pow(&p.t, i - 1)).product();
    v_lambda_plus(lambda, p) * t_factorial(m0, &p.t) * zero_parts
}

/// `v_{lambda+}(t; t0..t3)`: the part of `v_lambda` not involving `m_0`
/// except through the one-part factor.
pub fn v_lambda_plus(lambda: &Partition, p: &ParameterPoint) -> Q {
    let sym: Q = distinct_nonzero_parts(lambda)
        .into_iter()
        .map(|i| t_factorial(lambda.multiplicity(i), &p.t))
        .product();
    sym * one_parts_factor(lambda, p)
}

fn z_pow(n: usize, i: usize, k: i32) -> Vec<i32> {
    let mut e = vec![0; n];
    e[i] = k;
    e
}

/// `1 - g z^e` as a polynomial.
fn binomial(n: usize, g: &Q, e: Vec<i32>) -> LaurentPoly {
    let mut p = LaurentPoly::one(n);
    p.add_term(e, -g.clone());
    p
}

/// Numerator of `u_lambda(z_i)` without the `1/(1 - z_i^{-2})`.
fn u_numerator(part: i32, i: usize, n: usize, p: &ParameterPoint) -> LaurentPoly {
    let mut out = LaurentPoly::var_pow(n, i, part);
    let gs: Vec<&Q> = if part == 0 { vec![&p.a, &p.b] } else { vec![&p.t0, &p.t1, &p.t2, &p.t3] };
    for g in gs {
        out = &out * &binomial(n, g, z_pow(n, i, -1));
    }
    out
}

/// `u_lambda(z_i)` as a one-factor rational function in `n` variables.
pub fn u_factor(part: i32, i: usize, n: usize, p: &ParameterPoint) -> FactoredIntegrand {
    FactoredIntegrand {
        numerator: u_numerator(part, i, n, p),
        denominators: vec![DenominatorFactor::new(Q::one(), z_pow(n, i, -2))],
    }
}

/// `u'_lambda(z_i) = z_i u_lambda(z_i) (1 - z_i^{-2})`.
pub fn uprime_factor(part: i32, i: usize, n: usize, p: &ParameterPoint) -> LaurentPoly {
    u_numerator(part, i, n, p).mul_monomial(&z_pow(n, i, 1), &Q::one())
}

/// `Δ_BC = prod (z_i - 1/z_i) prod_{i<j} (1/z_i - z_j - 1/z_j + z_i)`.
pub fn delta_bc(n: usize) -> LaurentPoly {
    let mut out = LaurentPoly::one(n);
    for i in 0..n {
        let f = &LaurentPoly::var_pow(n, i, 1) - &LaurentPoly::var_pow(n, i, -1);
        out = &out * &f;
    }
    for i in 0..n {
        for j in i + 1..n {
            let f = &(&LaurentPoly::var_pow(n, i, -1) - &LaurentPoly::var_pow(n, j, 1))
                - &(&LaurentPoly::var_pow(n, j, -1) - &LaurentPoly::var_pow(n, i, 1));
            out = &out * &f;
        }
    }
    out
}

/// `Δ_BC` as `z^{-(n,...,n)}` times binomials, for fast division.
fn delta_bc_binomials(n: usize) -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    for i in 0..n {
        out.push(binomial(n, &Q::one(), z_pow(n, i, 2)));
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut e = vec![0; n];
            e[i] = 1;
            e[j] = 1;
            out.push(binomial(n, &Q::one(), e));
            out.push(&LaurentPoly::var_pow(n, j, 1) - &LaurentPoly::var_pow(n, i, 1));
        }
    }
    out
}

/// Divides by `Δ_BC` exactly.
pub fn divide_by_delta_bc(f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.n();
    // Δ_BC = (-1)^{n} z^{-n} prod(z_i^2 - 1)... with the sign carried by
    // writing z_i - 1/z_i = -z_i^{-1}(1 - z_i^2).
    let mut q = f.clone();
    for b in delta_bc_binomials(n) {
        q = q.exact_div(&b)?;
    }
    let sign = if n.is_multiple_of(2) { Q::one() } else { -Q::one() };
    Ok(q.mul_monomial(&vec![n as i32; n], &sign))
}

fn antisymmetrization_base(lambda: &Partition, p: &ParameterPoint) -> LaurentPoly {
    let n = lambda.n();
    let mut base = LaurentPoly::one(n);
    for (i, &part) in lambda.parts().iter().enumerate() {
        base = &base * &uprime_factor(part, i, n, p);
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut e = vec![0; n];
            e[i] = -1;
            e[j] = -1;
            let cross = &binomial(n, &p.t, e)
                * &(&LaurentPoly::var_pow(n, i, 1) - &LaurentPoly::var_pow(n, j, 1).scale(&p.t));
            base = &base * &cross;
        }
    }
    base
}

/// `v_lambda K_lambda Δ_BC = sum_w eps(w) w(prod u' prod (1 - t/(z_i z_j))(z_i - t z_j))`.
pub fn r_times_delta(lambda: &Partition, p: &ParameterPoint) -> Result<LaurentPoly> {
    let n = lambda.n();
    let base = antisymmetrization_base(lambda, p);
    let group: Vec<SignedPermutation> = bn_iter(n)?.collect();
    Ok(group
        .par_iter()
        .map(|w| {
            let img = w.apply(&base).expect("sizes agree");
            if w.sign() > 0 {
                img
            } else {
                -&img
            }
        })
        .reduce(|| LaurentPoly::zero(n), |a, b| &a + &b))
}

/// `K_lambda(z; t; a, b; t0..t3)`.
pub fn k_poly(lambda: &Partition, p: &ParameterPoint) -> Result<LaurentPoly> {
    let v = v_lambda(lambda, p);
    if v.is_zero() {
        return Err(Error::NonGeneric(format!("v_lambda for lambda = {lambda}")));
    }
    let r = divide_by_delta_bc(&r_times_delta(lambda, p)?)?;
    Ok(r.scale(&v.recip()))
}

/// The `w`-summand `R_{lambda,w}` as a factored rational function.
pub fn r_term(lambda: &Partition, w: &SignedPermutation, p: &ParameterPoint) -> Result<FactoredIntegrand> {
    let n = lambda.n();
    if w.n() != n {
        return Err(Error::VariableMismatch { left: n, right: w.n() });
    }
    let mut num = LaurentPoly::one(n);
    let mut dens = Vec::new();
    for (i, &part) in lambda.parts().iter().enumerate() {
        let u = u_factor(part, i, n, p);
        num = &num * &u.numerator;
        dens.extend(u.denominators);
    }
    for i in 0..n {
        for j in i + 1..n {
            for sj in [1, -1] {
                let mut e = vec![0; n];
                e[i] = -1;
                e[j] = sj;
                num = &num * &binomial(n, &p.t, e.clone());
                dens.push(DenominatorFactor::new(Q::one(), e));
            }
        }
    }
    let num = w.apply(&num)?;
    let dens = dens
        .into_iter()
        .map(|d| DenominatorFactor::new(d.gamma, w.apply_exponent(&d.exp)))
        .collect();
    Ok(FactoredIntegrand { numerator: num, denominators: dens })
}

/// `K_lambda(z)` at a rational point by summing the rational terms directly.
pub fn k_rational_sum_at(lambda: &Partition, p: &ParameterPoint, z: &[Q]) -> Result<Q> {
    let mut total = Q::zero();
    for w in bn_iter(lambda.n())? {
        total += r_term(lambda, &w, p)?.eval(z)?;
    }
    let v = v_lambda(lambda, p);
    if v.is_zero() {
        return Err(Error::NonGeneric(format!("v_lambda for lambda = {lambda}")));
    }
    Ok(total / v)
}

/// Coefficients `c_mu` with `f = sum c_mu m_mu`.
pub fn decompose_monomial_basis(f: &LaurentPoly) -> Result<BTreeMap<Partition, Q>> {
    let n = f.n();
    for i in 1..=n {
        if SignedPermutation::simple_reflection(n, i).apply(f)? != *f {
            return Err(Error::NotInvariant);
        }
    }
    let mut out = BTreeMap::new();
    for (e, c) in f.terms() {
        if let Ok(mu) = Partition::new(e.clone()) {
            out.insert(mu, c.clone());
        }
    }
    Ok(out)
}

/// `N_lambda = CT(Δ̃^{(m_0)}) / v_{lambda+}`, with the constant term in
/// closed form.
pub fn norm_n(lambda: &Partition, p: &ParameterPoint) -> Result<Q> {
    let v = v_lambda_plus(lambda, p);
    if v.is_zero() {
        return Err(Error::NonGeneric(format!("v_lambda+ for lambda = {lambda}")));
    }
    let m0 = lambda.multiplicity(0);
    Ok(closed_form::symmetric_ct_closed(m0, &p.t, &p.t0, &p.t1, &p.t2, &p.t3) / v)
}

/// Parameter points for the vanishing integral with `t = s^2`: the
/// polynomial lives at `(t^2; a, b; a, b, ta, tb)` and the density at
/// `(t; s, -s, a, b)`.
pub fn application_points(s: &Q, a: &Q, b: &Q) -> (ParameterPoint, ParameterPoint) {
    let t = s * s;
    let poly = ParameterPoint::symmetric(&t * &t, a.clone(), b.clone(), [a.clone(), b.clone(), &t * a, &t * b]);
    let density = ParameterPoint::symmetric(t, a.clone(), b.clone(), [s.clone(), -s.clone(), a.clone(), b.clone()]);
    (poly, density)
}

/// `CT(K_lambda(z; t^2; a, b; a, b, ta, tb) Δ̃(z; t; ±s, a, b))`.
pub fn application_integral(lambda: &Partition, s: &Q, a: &Q, b: &Q) -> Result<Q> {
    let (pp, dp) = application_points(s, a, b);
    let k = k_poly(lambda, &pp)?;
    ct::symmetric_inner(&k, &LaurentPoly::one(lambda.n()), &dp)
}

/// The predicted value: zero unless every part is even.
pub fn application_closed(lambda: &Partition, s: &Q, a: &Q, b: &Q) -> Result<Q> {
    if !lambda.is_even() {
        return Ok(Q::zero());
    }
    let (pp, dp) = application_points(s, a, b);
    let t = &dp.t;
    let weight = pow(s, lambda.weight());
    let scale = weight / pow(&(Q::one() + t), lambda.length() as i64);
    let denom = v_lambda_plus(lambda, &pp);
    if denom.is_zero() {
        return Err(Error::NonGeneric("v_lambda+ at (t^2; a, b, ta, tb)".into()));
    }
    Ok(scale * norm_n(lambda, &dp)? * v_lambda_plus(lambda, &dp) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::monomial_orbit_sum;
    use crate::params::ParamSampler;
    use crate::scalar::{q, qi};

    fn part(v: &[i32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn v_examples() {
        let p = ParamSampler::new(1).symmetric();
        let one = Q::one();
        assert_eq!(v_lambda(&part(&[0]), &p), &one - &p.a * &p.b);
        assert_eq!(v_lambda(&part(&[1]), &p), &one - t_product(&p));
        assert_eq!(v_lambda(&part(&[2, 2]), &p), &one + &p.t);
        for lam in [[2, 1, 0, 0], [1, 1, 0, 0], [3, 3, 1, 0]] {
            let lam = part(&lam);
            let zeros = Partition::zero(lam.multiplicity(0));
            assert_eq!(v_lambda(&lam, &p), v_lambda_plus(&lam, &p) * v_lambda(&zeros, &p));
        }
    }

    #[test]
    fn delta_bc_shape() {
        let z = |i, k| LaurentPoly::var_pow(1, i, k);
        assert_eq!(delta_bc(1), &z(0, 1) - &z(0, -1));
        for n in 1..=3 {
            let d = delta_bc(n);
            let rho: Vec<i32> = (1..=n as i32).rev().collect();
            assert_eq!(d.leading().unwrap(), (&rho, &Q::one()));
            assert_eq!(divide_by_delta_bc(&d).unwrap(), LaurentPoly::one(n));
            for w in bn_iter(n).unwrap() {
                let img = w.apply(&d).unwrap();
                assert_eq!(img, if w.sign() > 0 { d.clone() } else { -&d });
            }
        }
    }

    #[test]
    fn k_of_empty_partition_is_one() {
        let p = ParamSampler::new(2).symmetric();
        for n in 1..=3 {
            assert_eq!(k_poly(&Partition::zero(n), &p).unwrap(), LaurentPoly::one(n));
        }
    }

    #[test]
    fn k_one_at_n1() {
        let p = ParamSampler::new(4).symmetric();
        let ts = p.ts();
        let e1: Q = ts.iter().sum();
        let e3 = &ts[0] * &ts[1] * &ts[2] + &ts[0] * &ts[1] * &ts[3] + &ts[0] * &ts[2] * &ts[3] + &ts[1] * &ts[2] * &ts[3];
        let e4 = t_product(&p);
        let expect = &(&LaurentPoly::var_pow(1, 0, 1) + &LaurentPoly::var_pow(1, 0, -1))
            + &LaurentPoly::constant(1, (e3 - e1) / (Q::one() - e4));
        assert_eq!(k_poly(&part(&[1]), &p).unwrap(), expect);
    }

    #[test]
    fn k_agrees_with_rational_sum() {
        let p = ParamSampler::new(5).symmetric();
        let z = [q(3, 7), q(-5, 2)];
        for lam in [[0, 0], [1, 0], [1, 1], [2, 1], [3, 0]] {
            let lam = part(&lam);
            let k = k_poly(&lam, &p).unwrap();
            assert_eq!(k.eval(&z), k_rational_sum_at(&lam, &p, &z).unwrap(), "{lam}");
        }
    }

    #[test]
    fn leading_coefficient_of_antisymmetrization() {
        let p = ParamSampler::new(6).symmetric();
        for lam in [[2, 1, 0], [1, 1, 0], [0, 0, 0], [2, 2, 1]] {
            let lam = part(&lam);
            let r = r_times_delta(&lam, &p).unwrap();
            let top: Vec<i32> = lam.parts().iter().zip((1..=3).rev()).map(|(a, b)| a + b).collect();
            assert_eq!(r.coeff(&top), v_lambda(&lam, &p), "{lam}");
        }
    }

    #[test]
    fn r_identity_term_gives_nonsymmetric_density() {
        // 2^n n! R_{0^n, id}(t; a, b; a, b, 0, 0) Δ̃(t; a, b, c, d) = Δ_K(t; a, b, c, d)
        let mut s = ParamSampler::new(8);
        let ns = s.nonsymmetric();
        let zero = Q::zero();
        for n in 1..=2 {
            let rp = ParameterPoint::symmetric(ns.t.clone(), ns.a.clone(), ns.b.clone(), [ns.a.clone(), ns.b.clone(), zero.clone(), zero.clone()]);
            let dp = ParameterPoint::symmetric(ns.t.clone(), ns.a.clone(), ns.b.clone(), [ns.a.clone(), ns.b.clone(), ns.c.clone(), ns.d.clone()]);
            let r = r_term(&Partition::zero(n), &SignedPermutation::identity(n), &rp).unwrap();
            let sym = ct::build_density(ct::DensityKind::Symmetric, n, &dp).unwrap();
            let non = ct::build_density(ct::DensityKind::Nonsymmetric, n, &ns).unwrap();
            let z = [q(2, 3), q(-7, 5)];
            let scale: Q = if n == 1 { qi(2) } else { qi(8) };
            assert_eq!(r.eval(&z[..n]).unwrap() * sym.eval(&z[..n]).unwrap() * scale, non.eval(&z[..n]).unwrap());
        }
    }

    #[test]
    fn decomposition_examples() {
        let m = monomial_orbit_sum(&part(&[2, 1]), 2).unwrap();
        assert_eq!(decompose_monomial_basis(&m).unwrap(), BTreeMap::from([(part(&[2, 1]), qi(1))]));
        assert_eq!(
            decompose_monomial_basis(&LaurentPoly::var_pow(2, 0, 1)),
            Err(Error::NotInvariant)
        );
        let p = ParamSampler::new(9).symmetric();
        let k = k_poly(&part(&[2, 0]), &p).unwrap();
        let c = decompose_monomial_basis(&k).unwrap();
        assert_eq!(c[&part(&[2, 0])], qi(1));
        assert!(c.keys().all(|mu| [[2, 0], [1, 1], [1, 0], [0, 0]].iter().any(|x| mu.parts() == x)));
    }

    #[test]
    fn invariance_triangularity_and_ab_independence() {
        let mut s = ParamSampler::new(10);
        let p = s.symmetric();
        let mut p2 = p.clone();
        p2.a = s.scalar();
        p2.b = s.scalar();
        for lam in Partition::all_by_weight(2, 3).into_iter().chain(Partition::all_by_weight(3, 2)) {
            let k = k_poly(&lam, &p).unwrap();
            let c = decompose_monomial_basis(&k).unwrap();
            assert_eq!(c[&lam], qi(1), "{lam}");
            assert!(c.keys().all(|mu| mu.dominance_le(&lam)), "{lam}");
            assert_eq!(k, k_poly(&lam, &p2).unwrap(), "{lam}");
        }
    }

    #[test]
    fn orthogonality_and_norm_small() {
        let p = ParamSampler::new(11).symmetric();
        let lams = Partition::all_bounded(2, 1);
        let ks: Vec<_> = lams.iter().map(|l| k_poly(l, &p).unwrap()).collect();
        for (i, l) in lams.iter().enumerate() {
            for (j, _) in lams.iter().enumerate().skip(i) {
                let v = ct::symmetric_inner(&ks[i], &ks[j], &p).unwrap();
                let expect = if i == j { norm_n(l, &p).unwrap() } else { Q::zero() };
                assert_eq!(v, expect, "{l} {}", lams[j]);
            }
        }
    }

    #[test]
    fn application_small() {
        let (s, a, b) = (q(2, 3), q(1, 4), q(-2, 7));
        for lam in [[0], [1], [2], [3]] {
            let lam = part(&lam);
            assert_eq!(application_integral(&lam, &s, &a, &b).unwrap(), application_closed(&lam, &s, &a, &b).unwrap(), "{lam}");
        }
    }
}
