//! Constant terms by iterated residues.
//!
//! The integrand is carried as a sum of terms `numerator / prod(1 - g z^e)`.
//! Eliminating `z_v` replaces each term by its contour integral over
//! `|z_v| = 1`: the residue of `f / z_v` at the origin plus the residues at
//! the poles inside the circle. Every factor is kept with `|g| < 1`, so a
//! factor with negative `z_v`-exponent has its poles inside and one with a
//! positive exponent has them outside; the other variables stay on the
//! torus throughout. Residues at `z_v = g M` are taken by substitution,
//! after which factors that divide the new numerator are cancelled.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::integrand::{DenominatorFactor, FactoredIntegrand};
use super::univariate::univariate_ct;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::{cmp_abs_one, pow, Q};

#[derive(Debug, Clone)]
struct Term {
    num: LaurentPoly,
    dens: Vec<DenominatorFactor>,
}

/// Exact constant term, eliminating `z_1, ..., z_n` in turn.
pub fn constant_term(integrand: &FactoredIntegrand) -> Result<Q> {
    let order: Vec<usize> = (0..integrand.n()).collect();
    constant_term_with_order(integrand, &order)
}

/// Exact constant term with the variables eliminated in `order` (0-based).
pub fn constant_term_with_order(integrand: &FactoredIntegrand, order: &[usize]) -> Result<Q> {
    let n = integrand.n();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::OutOfRange(format!("elimination order {order:?} for n = {n}")));
    }
    let first = order.first().copied().unwrap_or(0);
    let mut terms: Vec<Term> =
        normalize(integrand.numerator.clone(), integrand.denominators.clone(), first)?
            .into_iter()
            .collect();
    for &v in order {
        let parts: Vec<Result<Vec<Term>>> = terms.par_iter().map(|t| eliminate(t, v)).collect();
        let mut all = Vec::new();
        for p in parts {
            all.extend(p?);
        }
        terms = merge(all);
    }
    let mut total = Q::zero();
    for t in terms {
        debug_assert!(t.dens.is_empty());
        total += t.num.constant_term();
    }
    Ok(total)
}

fn merge(terms: Vec<Term>) -> Vec<Term> {
    let mut acc: BTreeMap<Vec<DenominatorFactor>, LaurentPoly> = BTreeMap::new();
    for mut t in terms {
        t.dens.sort();
        match acc.get_mut(&t.dens) {
            Some(p) => *p = &*p + &t.num,
            None => {
                acc.insert(t.dens, t.num);
            }
        }
    }
    acc.into_iter()
        .filter(|(_, num)| !num.is_zero())
        .map(|(dens, num)| {
            let mut t = Term { num, dens };
            cancel(&mut t, |d| d.on_torus());
            t
        })
        .collect()
}

/// Removes factors selected by `pick` that divide the numerator exactly.
fn cancel(t: &mut Term, pick: impl Fn(&DenominatorFactor) -> bool) {
    let mut i = 0;
    while i < t.dens.len() {
        if pick(&t.dens[i]) {
            if let Some(q) = t.num.div_binomial(&t.dens[i].gamma, &t.dens[i].exp) {
                t.num = q;
                t.dens.remove(i);
                continue;
            }
        }
        i += 1;
    }
}

/// Folds scalar factors into the numerator, brings every factor to
/// `|gamma| <= 1`, and cancels factors on the torus or repeated ones.
/// Returns `None` when the numerator vanishes.
fn normalize(mut num: LaurentPoly, dens: Vec<DenominatorFactor>, var: usize) -> Result<Option<Term>> {
    let mut out = Vec::with_capacity(dens.len());
    for d in dens {
        if d.is_scalar() {
            let s = Q::one() - &d.gamma;
            if s.is_zero() {
                return Err(Error::PoleCollision {
                    var: var + 1,
                    detail: format!("denominator {d} vanishes identically"),
                });
            }
            num = num.scale(&s.recip());
        } else if cmp_abs_one(&d.gamma) == std::cmp::Ordering::Greater {
            let ((c, e), nd) = d.inverted();
            num = num.mul_monomial(&e, &c);
            out.push(nd);
        } else {
            out.push(d);
        }
    }
    if num.is_zero() {
        return Ok(None);
    }
    out.sort();
    let repeated: Vec<bool> = (0..out.len())
        .map(|i| (i > 0 && out[i - 1] == out[i]) || (i + 1 < out.len() && out[i + 1] == out[i]))
        .collect();
    let mut t = Term { num, dens: out };
    let flagged: Vec<DenominatorFactor> = t
        .dens
        .iter()
        .zip(&repeated)
        .filter(|(d, r)| **r || d.on_torus())
        .map(|(d, _)| d.clone())
        .collect();
    cancel(&mut t, |d| flagged.contains(d));
    Ok(Some(t))
}

/// Splits `1 - g X^2` into `(1 - h X)(1 + h X)` when `g = h^2` and every
/// exponent of the monomial is even.
fn split_square(d: &DenominatorFactor) -> Option<[DenominatorFactor; 2]> {
    if d.gamma.is_negative() || d.exp.iter().any(|e| e % 2 != 0) {
        return None;
    }
    let sq = |x: &BigInt| {
        let r = x.sqrt();
        (&r * &r == *x).then_some(r)
    };
    let h = Q::new(sq(d.gamma.numer())?, sq(d.gamma.denom())?);
    let half: Vec<i32> = d.exp.iter().map(|e| e / 2).collect();
    Some([DenominatorFactor::new(h.clone(), half.clone()), DenominatorFactor::new(-h, half)])
}

fn eliminate(term: &Term, v: usize) -> Result<Vec<Term>> {
    match eliminate_by_residues(term, v) {
        Err(Error::Unsupported { .. } | Error::PoleCollision { .. }) if is_univariate(term, v) => {
            let num: Vec<(i32, Q)> = term.num.terms().map(|(e, c)| (e[v], c.clone())).collect();
            let factors: Vec<(Q, i32)> = term.dens.iter().map(|d| (d.gamma.clone(), d.exp[v])).collect();
            let value = univariate_ct(&num, &factors)?;
            Ok(vec![Term { num: LaurentPoly::constant(term.num.n(), value), dens: Vec::new() }])
        }
        other => other,
    }
}

fn is_univariate(term: &Term, v: usize) -> bool {
    let only_v = |e: &[i32]| e.iter().enumerate().all(|(i, &x)| i == v || x == 0);
    term.num.terms().all(|(e, _)| only_v(e)) && term.dens.iter().all(|d| only_v(&d.exp))
}

fn eliminate_by_residues(term: &Term, v: usize) -> Result<Vec<Term>> {
    let mut term = term.clone();
    let is_active = |d: &DenominatorFactor| d.exp[v] != 0;
    if let Some(d) = term.dens.iter().find(|d| is_active(d) && d.on_torus()) {
        return Err(Error::PoleOnTorus { var: v + 1, factor: d.to_string() });
    }
    let deep_inner = term.dens.iter().any(|d| d.exp[v] < -1);
    if deep_inner {
        if term.dens.iter().all(|d| d.exp[v] <= 1) {
            // z_v -> 1/z_v preserves the constant term and turns the
            // higher-order inner factors into outer ones.
            term.num = term.num.map_exponents(|e| {
                let mut e = e.to_vec();
                e[v] = -e[v];
                e
            });
            for d in &mut term.dens {
                d.exp[v] = -d.exp[v];
            }
        } else {
            let mut dens = Vec::with_capacity(term.dens.len() + 2);
            for d in term.dens {
                if d.exp[v] < -1 {
                    match split_square(&d) {
                        Some(parts) if d.exp[v] == -2 => dens.extend(parts),
                        _ => {
                            return Err(Error::Unsupported {
                                var: v + 1,
                                detail: format!("inner factor {d} of degree {} alongside outer factors of higher degree", -d.exp[v]),
                            })
                        }
                    }
                } else {
                    dens.push(d);
                }
            }
            dens.sort();
            term.dens = dens;
        }
    }
    let inner: Vec<usize> = (0..term.dens.len()).filter(|&i| term.dens[i].exp[v] < 0).collect();
    for w in inner.windows(2) {
        if term.dens[w[0]] == term.dens[w[1]] {
            return Err(Error::PoleCollision {
                var: v + 1,
                detail: format!("double pole from {}", term.dens[w[0]]),
            });
        }
    }

    let mut out = Vec::with_capacity(inner.len() + 1);
    if let Some(t) = residue_at_origin(&term, v) {
        out.push(t);
    }
    for &k in &inner {
        if let Some(t) = residue_at_pole(&term, v, k)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// `[z_v^0]` of the expansion at `z_v = 0`. Both kinds of factor expand in
/// non-negative powers of `z_v`, so only numerator terms of degree `<= 0`
/// contribute.
fn residue_at_origin(term: &Term, v: usize) -> Option<Term> {
    let split = term.num.split_by_var(v);
    let lowest = *split.keys().next()?;
    if lowest > 0 {
        return None;
    }
    let depth = (-lowest) as usize;
    let n = term.num.n();
    let mut series = vec![LaurentPoly::zero(n); depth + 1];
    series[0] = LaurentPoly::one(n);
    let mut passive = Vec::new();
    for d in &term.dens {
        let e = d.exp[v];
        if e == 0 {
            passive.push(d.clone());
            continue;
        }
        let mut m = d.exp.clone();
        m[v] = 0;
        // outer: sum_{k>=0} (gM)^k z^{ek};  inner: -sum_{k>=1} (gM)^{-k} z^{|e|k}
        let (step, start, sign, power) = if e > 0 { (e as usize, 0, 1, 1) } else { ((-e) as usize, 1, -1, -1) };
        let mut next = vec![LaurentPoly::zero(n); depth + 1];
        for (deg, s) in series.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let mut k = start;
            while deg + step * k <= depth {
                let kk = (power * k as i64) as i32;
                let mono: Vec<i32> = m.iter().map(|x| x * kk).collect();
                let mut c = pow(&d.gamma, kk as i64);
                if sign < 0 {
                    c = -c;
                }
                let add = s.mul_monomial(&mono, &c);
                next[deg + step * k] = &next[deg + step * k] + &add;
                k += 1;
            }
        }
        series = next;
    }
    let mut num = LaurentPoly::zero(n);
    for (d, p) in split.range(..=0) {
        let s = &series[(-d) as usize];
        if !s.is_zero() {
            num = &num + &(p * s);
        }
    }
    if num.is_zero() {
        return None;
    }
    Some(Term { num, dens: passive })
}

/// Residue of `f / z_v` at the simple pole of `dens[k] = 1 - g M / z_v`,
/// i.e. `f` with `1/dens[k]` removed, evaluated at `z_v = g M`.
fn residue_at_pole(term: &Term, v: usize, k: usize) -> Result<Option<Term>> {
    let pole = &term.dens[k];
    debug_assert_eq!(pole.exp[v], -1);
    let g = pole.gamma.clone();
    let mut m = pole.exp.clone();
    m[v] = 0;
    let num = term.num.substitute(v, &g, &m);
    if num.is_zero() {
        return Ok(None);
    }
    let mut dens = Vec::with_capacity(term.dens.len() - 1);
    for (i, d) in term.dens.iter().enumerate() {
        if i == k {
            continue;
        }
        let e = d.exp[v];
        if e == 0 {
            dens.push(d.clone());
            continue;
        }
        let mut exp = d.exp.clone();
        exp[v] = 0;
        for (x, y) in exp.iter_mut().zip(&m) {
            *x += e * y;
        }
        dens.push(DenominatorFactor::new(&d.gamma * pow(&g, e as i64), exp));
    }
    normalize(num, dens, v)
}
