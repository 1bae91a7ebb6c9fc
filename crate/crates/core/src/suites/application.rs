use rayon::prelude::*;

use super::{Check, Report, Suite, SuiteConfig};
use crate::error::Result;
use crate::params::retry_generic;
use crate::params::Mode;
use crate::partition::Partition;
use crate::symmetric::{application_closed, application_integral};

/// `CT(K_lambda(t^2; a, b; a, b, ta, tb) Δ̃(t; s, -s, a, b))` with `t = s^2`:
/// zero when `lambda` has an odd part, the product formula otherwise.
/// `n_max` defaults to 2, `m_max` (weight bound) to 4, `points` to 3.
pub struct Application;

impl Suite for Application {
    fn name(&self) -> &'static str {
        "application"
    }

    fn description(&self) -> &'static str {
        "vanishing integral of K_lambda unless lambda is even"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let (n_max, w_max) = (cfg.n_max(2), cfg.m_max(4) as i32);
        let mut sampler = cfg.sampler();
        let mut checks = Vec::new();
        let lams: Vec<Partition> = (1..=n_max).flat_map(|n| Partition::all_by_weight(n, w_max)).collect();
        for k in 0..cfg.points(3) {
            let (_, batch) = retry_generic(&mut sampler, Mode::Symmetric, 20, |p| {
                let (s, a, b) = (&p.t, &p.a, &p.b);
                lams.par_iter()
                    .map(|lam| {
                        let v = application_integral(lam, s, a, b)?;
                        let expect = application_closed(lam, s, a, b)?;
                        let kind = if lam.is_even() { "even" } else { "vanishes" };
                        Ok(Check::equal(format!("{lam} {kind} s={s} point={k}"), &v, &expect))
                    })
                    .collect::<Result<Vec<_>>>()
            })?;
            checks.extend(batch);
        }
        Ok(Report::new(self.name(), cfg.seed, checks))
    }
}
