use num_traits::Zero;
use rayon::prelude::*;

use super::{at_point, Check, Report, Suite, SuiteConfig};
use crate::ct;
use crate::error::Result;
use crate::params::{Mode, ParameterPoint};
use crate::partition::Partition;
use crate::scalar::Q;
use crate::symmetric::{k_poly, norm_n};

/// `<K_lambda, K_mu> = N_lambda delta` against the symmetric density for
/// every pair of partitions with parts at most `m_max` (default 3) at
/// `n = 2`, plus a few pairs at `n = 3` when `n_max >= 3` (default 3).
/// `points` defaults to 3.
pub struct SymmetricOrthogonality;

const SPOT_N3: &[(&[i32], &[i32])] = &[
    (&[0, 0, 0], &[1, 0, 0]),
    (&[1, 0, 0], &[1, 0, 0]),
    (&[1, 0, 0], &[1, 1, 0]),
    (&[1, 1, 1], &[1, 1, 1]),
];

impl Suite for SymmetricOrthogonality {
    fn name(&self) -> &'static str {
        "symmetric-orthogonality"
    }

    fn description(&self) -> &'static str {
        "orthogonality and norms of K_lambda under the symmetric density"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let (n_max, part_max) = (cfg.n_max(3), cfg.m_max(3) as i32);
        let mut sampler = cfg.sampler();
        let mut checks = Vec::new();
        for k in 0..cfg.points(3) {
            checks.extend(at_point(&mut sampler, Mode::Symmetric, |p| {
                let lams = Partition::all_bounded(2.min(n_max), part_max);
                let mut pairs = Vec::new();
                for (i, a) in lams.iter().enumerate() {
                    for b in &lams[i..] {
                        pairs.push((a.clone(), b.clone()));
                    }
                }
                if n_max >= 3 {
                    for (a, b) in SPOT_N3 {
                        pairs.push((Partition::new(a.to_vec())?, Partition::new(b.to_vec())?));
                    }
                }
                pairs.par_iter().map(|(a, b)| pair_check(a, b, p, k)).collect()
            })?);
        }
        Ok(Report::new(self.name(), cfg.seed, checks))
    }
}

fn pair_check(a: &Partition, b: &Partition, p: &ParameterPoint, k: usize) -> Result<Check> {
    let v = ct::symmetric_inner(&k_poly(a, p)?, &k_poly(b, p)?, p)?;
    let expect = if a == b { norm_n(a, p)? } else { Q::zero() };
    Ok(Check::equal(format!("<K{a}, K{b}> point={k}"), &v, &expect))
}
