use num_traits::One;

use super::{at_point, Check, Report, Suite, SuiteConfig};
use crate::error::{Error, Result};
use crate::params::{Mode, ParameterPoint};
use crate::partition::Partition;
use crate::scalar::format_fraction;
use crate::symmetric::{decompose_monomial_basis, k_poly, k_rational_sum_at, r_times_delta, v_lambda};

/// Monic dominance-triangular expansion of `K_lambda` in the orbit-sum
/// basis, B_n-invariance, independence from `(a, b)`, the leading
/// coefficient of the antisymmetrization and the rational-sum oracle.
/// `n_max` defaults to 3, `m_max` (the weight bound) to 5, `points` to 1.
pub struct Triangularity;

impl Suite for Triangularity {
    fn name(&self) -> &'static str {
        "triangularity"
    }

    fn description(&self) -> &'static str {
        "monic dominance triangularity, invariance and (a,b)-independence of K_lambda"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let (n_max, w_max) = (cfg.n_max(3), cfg.m_max(5) as i32);
        let mut sampler = cfg.sampler();
        let mut checks = Vec::new();
        for k in 0..cfg.points(1) {
            let other = sampler.distinct(2);
            let z = sampler.distinct(2);
            checks.extend(at_point(&mut sampler, Mode::Symmetric, |p| {
                let mut out = Vec::new();
                let mut p2 = p.clone();
                p2.a = other[0].clone();
                p2.b = other[1].clone();
                for n in 1..=n_max {
                    for lam in Partition::all_by_weight(n, w_max) {
                        out.extend(checks_for(&lam, p, &p2, &z, k)?);
                    }
                }
                Ok(out)
            })?);
        }
        Ok(Report::new(self.name(), cfg.seed, checks))
    }
}

fn checks_for(lam: &Partition, p: &ParameterPoint, p2: &ParameterPoint, z: &[crate::Q], k: usize) -> Result<Vec<Check>> {
    let n = lam.n();
    let tag = format!("{lam} point={k}");
    let mut out = Vec::new();
    let kp = k_poly(lam, p)?;
    match decompose_monomial_basis(&kp) {
        Ok(c) => {
            let lead = c.get(lam).cloned().unwrap_or_default();
            out.push(Check::new(format!("invariant {tag}"), true, "invariant", "invariant"));
            out.push(Check::equal(format!("monic {tag}"), &lead, &crate::Q::one()));
            let outside: Vec<String> = c.keys().filter(|mu| !mu.dominance_le(lam)).map(|mu| mu.to_string()).collect();
            out.push(Check::new(format!("dominance support {tag}"), outside.is_empty(), outside.join(" "), "none"));
        }
        Err(Error::NotInvariant) => out.push(Check::new(format!("invariant {tag}"), false, "not invariant", "invariant")),
        Err(e) => return Err(e),
    }
    let kp2 = k_poly(lam, p2)?;
    out.push(Check::new(format!("(a,b)-independent {tag}"), kp == kp2, format!("{} terms", kp.len()), format!("{} terms", kp2.len())));
    let top: Vec<i32> = lam.parts().iter().zip((1..=n as i32).rev()).map(|(a, b)| a + b).collect();
    let lead = r_times_delta(lam, p)?.coeff(&top);
    out.push(Check::equal(format!("coefficient of z^(lambda+rho) {tag}"), &lead, &v_lambda(lam, p)));
    if n <= 2 {
        let lhs = kp.eval(&z[..n]);
        let rhs = k_rational_sum_at(lam, p, &z[..n])?;
        out.push(Check::new(format!("rational sum oracle {tag}"), lhs == rhs, format_fraction(&lhs), format_fraction(&rhs)));
    }
    Ok(out)
}
