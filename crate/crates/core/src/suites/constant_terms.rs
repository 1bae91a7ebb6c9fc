use num_traits::{One, Zero};

use super::{at_point, Check, Report, Suite, SuiteConfig};
use crate::ct::{self, closed_form, DensityKind};
use crate::error::Result;
use crate::params::{Mode, ParameterPoint};
use crate::scalar::Q;

/// Engine against the closed forms for both densities, the two-term
/// recurrence, elimination-order independence and the `a = b = 0`
/// specialization. `n_max` defaults to 3, `points` to 5.
pub struct ConstantTerms;

impl Suite for ConstantTerms {
    fn name(&self) -> &'static str {
        "constant-terms"
    }

    fn description(&self) -> &'static str {
        "exact density constant terms against closed forms and the residue recurrence"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let n_max = cfg.n_max(3);
        let mut sampler = cfg.sampler();
        let mut checks = Vec::new();
        for k in 0..cfg.points(5) {
            checks.extend(at_point(&mut sampler, Mode::Nonsymmetric, |p| nonsymmetric_checks(p, n_max, k))?);
            checks.extend(at_point(&mut sampler, Mode::Symmetric, |p| symmetric_checks(p, n_max, k))?);
        }
        Ok(Report::new(self.name(), cfg.seed, checks))
    }
}

fn nonsymmetric_checks(p: &ParameterPoint, n_max: usize, k: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let (t, a, b, c, d) = (&p.t, &p.a, &p.b, &p.c, &p.d);
    for n in 1..=n_max {
        let v = ct::nonsymmetric_ct(n, p)?;
        let closed = closed_form::nonsymmetric_ct_closed(n, t, a, b, c, d);
        out.push(Check::equal(format!("nonsymmetric n={n} point={k}"), &v, &closed));
        if n >= 2 {
            let tc = ParameterPoint { c: t * c, ..p.clone() };
            let td = ParameterPoint { d: t * d, ..p.clone() };
            let rhs = closed_form::recurrence_rhs(a, b, c, d, &ct::nonsymmetric_ct(n - 1, &tc)?, &ct::nonsymmetric_ct(n - 1, &td)?);
            out.push(Check::equal(format!("recurrence n={n} point={k}"), &v, &rhs));
        }
        if n == 2 {
            let density = ct::build_density(DensityKind::Nonsymmetric, 2, p)?;
            let swapped = ct::constant_term_with_order(&density, &[1, 0])?;
            out.push(Check::equal(format!("order independence nonsymmetric point={k}"), &swapped, &v));
        }
    }
    Ok(out)
}

fn symmetric_checks(p: &ParameterPoint, n_max: usize, k: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let t = &p.t;
    for n in 1..=n_max {
        let v = ct::symmetric_ct(n, p)?;
        let closed = closed_form::symmetric_ct_closed(n, t, &p.t0, &p.t1, &p.t2, &p.t3);
        out.push(Check::equal(format!("symmetric n={n} point={k}"), &v, &closed));
        if n == 2 {
            let density = ct::build_density(DensityKind::Symmetric, 2, p)?;
            let swapped = ct::constant_term_with_order(&density, &[1, 0])?;
            out.push(Check::equal(format!("order independence symmetric point={k}"), &swapped, &v));
        }
        if n <= 2 {
            // t0 = t1 = 0: the symmetric integral is the nonsymmetric one over [n]_t!
            let zero = Q::zero();
            let sp = ParameterPoint::symmetric(t.clone(), p.a.clone(), p.b.clone(), [zero.clone(), zero.clone(), p.t2.clone(), p.t3.clone()]);
            let lhs = ct::symmetric_ct(n, &sp)?;
            let mut fact = Q::one();
            let mut sum = Q::zero();
            let mut tj = Q::one();
            for _ in 0..n {
                sum += &tj;
                tj *= t;
                fact *= &sum;
            }
            let rhs = closed_form::nonsymmetric_ct_closed(n, t, &zero, &zero, &p.t2, &p.t3) / fact;
            out.push(Check::equal(format!("t0=t1=0 specialization n={n} point={k}"), &lhs, &rhs));
        }
    }
    Ok(out)
}
