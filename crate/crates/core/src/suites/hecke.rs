use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{at_point, Check, Report, Suite, SuiteConfig};
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::nonsymmetric::{e_composition, hecke_t, pq_coefficients, reflect_index, verify_hecke_relations};
use crate::params::Mode;
use crate::partition::Composition;

/// Quadratic, commutation and braid relations of `T_1..T_n` on random
/// Laurent polynomials for `2 <= n <= n_max` (default 4), `points` (default
/// 20) polynomials per `n`; then the recursion `T_i E = p E + q E'` on every
/// composition in `{-2..2}^n` for `n <= 3`.
pub struct Hecke;

impl Suite for Hecke {
    fn name(&self) -> &'static str {
        "hecke"
    }

    fn description(&self) -> &'static str {
        "Hecke algebra relations and the recursion for E_mu"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let n_max = cfg.n_max(4);
        let trials = cfg.points(20);
        let mut sampler = cfg.sampler();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut checks = Vec::new();
        let p = sampler.nonsymmetric();
        for n in 2..=n_max {
            let fs: Vec<LaurentPoly> = (0..trials).map(|_| LaurentPoly::random(&mut rng, n, 5, 2)).collect();
            let rels = verify_hecke_relations(n, &p, &fs)?;
            for (idx, r) in rels.iter().enumerate() {
                let f = idx / (rels.len() / trials);
                checks.push(Check::new(format!("n={n} f#{f} {}", r.relation), r.holds, if r.holds { "0" } else { "nonzero" }, "0"));
            }
        }
        checks.extend(at_point(&mut sampler, Mode::Nonsymmetric, |p| {
            let mut out = Vec::new();
            for n in 2..=n_max.min(3) {
                for lam in Composition::all_in_box(n, -2, 2) {
                    let e = e_composition(&lam, p)?;
                    for i in 1..=n {
                        let (pi, qi) = pq_coefficients(&lam, i, p)?;
                        let rest = &(&hecke_t(i, &e, p)? - &e.scale(&pi)) - &e_composition(&reflect_index(&lam, i), p)?.scale(&qi);
                        out.push(Check::new(
                            format!("T{i} E{lam} = p E + q E_s"),
                            rest.is_zero(),
                            format!("{} residual terms", rest.len()),
                            "0",
                        ));
                    }
                }
            }
            Ok(out)
        })?);
        Ok(Report::new(self.name(), cfg.seed, checks))
    }
}
