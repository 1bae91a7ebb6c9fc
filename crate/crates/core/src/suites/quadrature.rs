use rayon::prelude::*;

use super::{Check, Report, Suite, SuiteConfig};
use crate::ct::{self, DensityKind, FactoredIntegrand};
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::nonsymmetric::e_composition;
use crate::params::{retry_generic, Mode, ParameterPoint};
use crate::partition::{Composition, Partition};
use crate::scalar::{q, to_f64};
use crate::symmetric::{application_points, k_poly};

pub const GRID: usize = 128;
pub const TOLERANCE: f64 = 1e-8;

/// Exact engine against the trapezoidal rule on a `128^n` grid for the
/// `n <= 2` integrands of the other suites: both densities, `K K Δ̃` with
/// `|lambda|, |mu| <= 2`, `E_lambda Ē_mu^ι Δ_K` and the vanishing-integral
/// integrands. Parameters are capped at modulus 3/4 so the rule converges
/// well inside the tolerance. `points` defaults to 2.
pub struct Quadrature;

struct Job {
    name: String,
    integrand: FactoredIntegrand,
}

impl Suite for Quadrature {
    fn name(&self) -> &'static str {
        "quadrature"
    }

    fn description(&self) -> &'static str {
        "exact constant terms against 128-point torus quadrature"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let n_max = cfg.n_max(2).min(2);
        let mut sampler = cfg.sampler().with_modulus_cap(q(3, 4));
        let mut checks = Vec::new();
        for k in 0..cfg.points(2) {
            let (_, batch) = retry_generic(&mut sampler, Mode::Symmetric, 20, |sp| {
                let np = ParameterPoint::nonsymmetric(sp.t.clone(), sp.t0.clone(), sp.t1.clone(), sp.t2.clone(), sp.t3.clone());
                let jobs = jobs(sp, &np, n_max, k)?;
                jobs.par_iter()
                    .map(|job| {
                        let exact = to_f64(&ct::constant_term(&job.integrand)?);
                        let approx = ct::ct_quadrature(&job.integrand, GRID)?;
                        Ok(Check::new(
                            job.name.clone(),
                            (approx.re - exact).abs() < TOLERANCE && approx.im.abs() < TOLERANCE,
                            format!("{:.17e}{:+.3e}i", approx.re, approx.im),
                            format!("{exact:.17e}"),
                        ))
                    })
                    .collect::<Result<Vec<_>>>()
            })?;
            checks.extend(batch);
        }
        Ok(Report::new(self.name(), cfg.seed, checks))
    }
}

fn jobs(sp: &ParameterPoint, np: &ParameterPoint, n_max: usize, k: usize) -> Result<Vec<Job>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let sym = ct::build_density(DensityKind::Symmetric, n, sp)?;
        let non = ct::build_density(DensityKind::Nonsymmetric, n, np)?;
        out.push(Job { name: format!("symmetric density n={n} point={k}"), integrand: sym.clone() });
        out.push(Job { name: format!("nonsymmetric density n={n} point={k}"), integrand: non.clone() });
        let lams = Partition::all_by_weight(n, 2);
        let ks: Vec<LaurentPoly> = lams.iter().map(|l| k_poly(l, sp)).collect::<Result<_>>()?;
        for (i, a) in lams.iter().enumerate() {
            for (j, b) in lams.iter().enumerate().skip(i) {
                out.push(Job {
                    name: format!("K{a} K{b} density point={k}"),
                    integrand: sym.mul_poly(&(&ks[i] * &ks[j]))?,
                });
            }
        }
        let mus = Composition::all_in_box(n, -1, 1);
        let inv = np.inverted();
        for a in &mus {
            let ea = e_composition(a, np)?;
            for b in &mus {
                let eb = e_composition(b, &inv)?.reflect();
                out.push(Job { name: format!("E{a} E{b} pairing point={k}"), integrand: non.mul_poly(&(&ea * &eb))? });
            }
        }
        let (s, a, b) = (&sp.t, &sp.a, &sp.b);
        let (pp, dp) = application_points(s, a, b);
        let density = ct::build_density(DensityKind::Symmetric, n, &dp)?;
        for lam in Partition::all_by_weight(n, 4) {
            out.push(Job { name: format!("vanishing integral {lam} point={k}"), integrand: density.mul_poly(&k_poly(&lam, &pp)?)? });
        }
    }
    Ok(out)
}
