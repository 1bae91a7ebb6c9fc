use num_traits::{One, Zero};

use super::{Check, Report, Suite, SuiteConfig};
use crate::error::Result;
use crate::partition::Partition;
use crate::scalar::{pow, Q};
use crate::signed_perm::{bn_iter, enumerate_sn, special_subsets};

/// Generating-function identities for `n(w)` and `c_lambda(w)`.
/// `m_max` (default 5) bounds the symmetric-group identity; the two
/// hyperoctahedral identities run to `min(m_max, 4)` with `m_0 in {0,1,2}`.
/// `points` (default 5) random parameter values per identity.
pub struct Statistics;

fn t_factorial(m: usize, t: &Q) -> Q {
    (1..=m as i64).map(|j| (Q::one() - pow(t, j)) / (Q::one() - t)).product()
}

impl Suite for Statistics {
    fn name(&self) -> &'static str {
        "statistics"
    }

    fn description(&self) -> &'static str {
        "permutation statistic generating functions over S_m and B_m"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let m_max = cfg.m_max(5);
        let mut sampler = cfg.sampler();
        let mut checks = Vec::new();
        for k in 0..cfg.points(5) {
            let v = sampler.distinct(3);
            let (t, big_t, ab) = (&v[0], &v[1], &v[2]);
            for m in 1..=m_max {
                let lhs: Q = enumerate_sn(m)?.iter().map(|w| pow(t, w.stat_n() as i64)).sum();
                checks.push(Check::equal(format!("stat1 m={m} point={k}"), &lhs, &t_factorial(m, t)));
            }
            for m in 1..=m_max.min(4) {
                let ones = Partition::new(vec![1; m])?;
                let zeros = Partition::zero(m);
                for m0 in 0..=2i64 {
                    let rhs: Q = t_factorial(m, t)
                        * (1..=m as i64).map(|j| Q::one() - big_t * pow(t, j - 1 + 2 * m0)).product::<Q>();
                    let (mut literal, mut corrected) = (Q::zero(), Q::zero());
                    for w in bn_iter(m)? {
                        let (_, n1) = w.negated_sets(&ones);
                        let base = pow(t, (w.stat_n() + 2 * w.stat_c(&ones)) as i64);
                        let neg = pow(&-big_t.clone(), n1.len() as i64);
                        literal += &base * pow(t, 2 * m0) * &neg;
                        corrected += &base * &neg * pow(t, 2 * m0 * n1.len() as i64);
                    }
                    let name = format!("stat2 m={m} m0={m0} point={k}");
                    checks.push(Check::equal(format!("{name} as stated"), &literal, &rhs).divergent());
                    checks.push(Check::equal(format!("{name} with t^(2 m0 |N1|)"), &corrected, &rhs));
                }
                let rhs: Q = t_factorial(m, t) * (1..=m as i64).map(|j| Q::one() - ab * pow(t, j - 1)).product::<Q>();
                let lhs: Q = bn_iter(m)?
                    .map(|w| {
                        let (n0, _) = w.negated_sets(&zeros);
                        pow(t, (w.stat_n() + 2 * w.stat_c(&zeros)) as i64) * pow(&-ab.clone(), n0.len() as i64)
                    })
                    .sum();
                checks.push(Check::equal(format!("stat3 m={m} point={k}"), &lhs, &rhs));
            }
        }
        for parts in [vec![1, 1, 0], vec![2, 1, 1, 0], vec![3, 2], vec![0, 0], vec![2, 2, 0, 0]] {
            let lam = Partition::new(parts)?;
            let (p, _) = special_subsets(&lam)?;
            let m0 = lam.multiplicity(0);
            let m1 = lam.multiplicity(1);
            let mut expect = 1usize << (m0 + m1);
            let mut values: Vec<i32> = lam.parts().to_vec();
            values.dedup();
            for v in values {
                expect *= (1..=lam.multiplicity(v)).product::<usize>();
            }
            checks.push(Check::new(format!("|P| for {lam}"), p.len() == expect, p.len().to_string(), expect.to_string()));
        }
        Ok(Report::new(self.name(), cfg.seed, checks))
    }
}
