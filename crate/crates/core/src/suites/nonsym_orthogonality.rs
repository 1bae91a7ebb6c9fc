use num_traits::One;
use rayon::prelude::*;

use super::{at_point, Check, Report, Suite, SuiteConfig};
use crate::ct;
use crate::error::Result;
use crate::nonsymmetric::{
    e_along_word, e_composition, e_gram_schmidt, e_partition, inner_with_e, norm_closed, recursion_word, PqTable,
    WordOrder,
};
use crate::params::{Mode, ParameterPoint};
use crate::partition::{Composition, Partition};

/// The nonsymmetric theory at `q = 0`: triangularity of `E_mu`, vanishing
/// of `<E_lambda, z^mu>_0` below a partition, norms, pairwise
/// orthogonality, word independence of the recursion and agreement with the
/// Gram–Schmidt oracle. `n_max` defaults to 3, `points` to 1.
pub struct NonsymOrthogonality;

impl Suite for NonsymOrthogonality {
    fn name(&self) -> &'static str {
        "nonsym-orthogonality"
    }

    fn description(&self) -> &'static str {
        "triangularity, orthogonality, norms and the recursion for E_mu"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<Report> {
        let n_max = cfg.n_max(3);
        let mut sampler = cfg.sampler();
        let mut checks = Vec::new();
        for k in 0..cfg.points(1) {
            checks.extend(at_point(&mut sampler, Mode::Nonsymmetric, |p| {
                let mut out = Vec::new();
                out.extend(triangularity(p, n_max, k)?);
                out.extend(partition_orthogonality(p, n_max, k)?);
                out.extend(norms(p, n_max, k)?);
                out.extend(word_independence(p, n_max, k)?);
                if n_max >= 2 {
                    out.extend(oracle(p, k)?);
                    out.extend(pairwise(p, k)?);
                }
                Ok(out)
            })?);
        }
        Ok(Report::new(self.name(), cfg.seed, checks))
    }
}

fn triangularity(p: &ParameterPoint, n_max: usize, k: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for mu in Composition::all_in_box(n, -2, 2) {
            let e = e_composition(&mu, p)?;
            let lead = e.coeff(mu.parts());
            let stray: Vec<String> = e
                .terms()
                .map(|(x, _)| Composition::new(x.clone()))
                .filter(|nu| nu != &mu && !nu.precedes(&mu))
                .map(|nu| nu.to_string())
                .collect();
            out.push(Check::new(
                format!("E{mu} = z^mu + lower point={k}"),
                lead.is_one() && stray.is_empty(),
                format!("lead {lead}, stray [{}]", stray.join(" ")),
                "lead 1, stray []",
            ));
        }
    }
    Ok(out)
}

fn partition_orthogonality(p: &ParameterPoint, n_max: usize, k: usize) -> Result<Vec<Check>> {
    let mut jobs = Vec::new();
    for n in 1..=n_max.min(2) {
        for lam in Partition::all_bounded(n, 3) {
            let lam = lam.as_composition();
            let top = lam.plus().parts()[0];
            for mu in Composition::all_in_box(n, -top, top) {
                if mu.precedes(&lam) {
                    jobs.push((lam.clone(), mu));
                }
            }
        }
    }
    jobs.par_iter()
        .map(|(lam, mu)| {
            let v = ct::inner_product_0_monomial(&e_partition(lam, p)?, mu.parts(), p)?;
            Ok(Check::zero(format!("<E{lam}, z^{mu}>_0 point={k}"), &v))
        })
        .collect()
}

fn norms(p: &ParameterPoint, n_max: usize, k: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for lam in Partition::all_bounded(n, 2) {
            let lam = lam.as_composition();
            let e = e_partition(&lam, p)?;
            let closed = norm_closed(&lam, p);
            let full = inner_with_e(&e, &lam, p)?;
            let mono = ct::inner_product_0_monomial(&e, lam.parts(), p)?;
            out.push(Check::equal(format!("<E{lam}, E{lam}>_0 point={k}"), &full, &closed));
            out.push(Check::equal(format!("<E{lam}, z^lambda>_0 point={k}"), &mono, &closed));
        }
    }
    Ok(out)
}

fn word_independence(p: &ParameterPoint, n_max: usize, k: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=n_max.min(3) {
        let span = if n == 2 { 2 } else { 1 };
        for mu in Composition::all_in_box(n, -span, span) {
            let w1 = recursion_word(&mu, WordOrder::LowestFirst)?;
            let w2 = recursion_word(&mu, WordOrder::HighestFirst)?;
            if w1 == w2 {
                continue;
            }
            let e1 = e_along_word(&mu, &w1, p, PqTable::Corrected)?;
            let e2 = e_along_word(&mu, &w2, p, PqTable::Corrected)?;
            out.push(Check::new(format!("word independence E{mu} {w1:?} vs {w2:?} point={k}"), e1 == e2, format!("{} terms", e1.len()), format!("{} terms", e2.len())));
            let s1 = e_along_word(&mu, &w1, p, PqTable::Stated)?;
            let s2 = e_along_word(&mu, &w2, p, PqTable::Stated)?;
            out.push(
                Check::new(format!("word independence E{mu} stated table point={k}"), s1 == s2, format!("{} terms", s1.len()), format!("{} terms", s2.len()))
                    .divergent(),
            );
        }
    }
    Ok(out)
}

fn oracle(p: &ParameterPoint, k: usize) -> Result<Vec<Check>> {
    let mus: Vec<Composition> = (1..=2).flat_map(|n| Composition::all_in_box(n, -1, 2)).collect();
    mus.par_iter()
        .map(|mu| {
            let gs = e_gram_schmidt(mu, p)?;
            let word = recursion_word(mu, WordOrder::LowestFirst)?;
            let rec = e_along_word(mu, &word, p, PqTable::Corrected)?;
            let stated = e_along_word(mu, &word, p, PqTable::Stated)?;
            Ok(vec![
                Check::new(format!("E{mu} recursion = Gram-Schmidt point={k}"), rec == gs, format!("{} terms", rec.len()), format!("{} terms", gs.len())),
                Check::new(format!("E{mu} stated table = Gram-Schmidt point={k}"), stated == gs, format!("{} terms", stated.len()), format!("{} terms", gs.len()))
                    .divergent(),
            ])
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

fn pairwise(p: &ParameterPoint, k: usize) -> Result<Vec<Check>> {
    let mus = Composition::all_in_box(2, -1, 2);
    let es: Vec<_> = mus.iter().map(|m| e_composition(m, p)).collect::<Result<_>>()?;
    let mut jobs = Vec::new();
    for (i, a) in mus.iter().enumerate() {
        for b in &mus {
            if a != b {
                jobs.push((i, a, b));
            }
        }
    }
    jobs.par_iter()
        .map(|(i, a, b)| {
            let v = inner_with_e(&es[*i], b, p)?;
            let check = Check::zero(format!("<E{a}, E{b}>_0 point={k}"), &v);
            Ok(if b.precedes(a) { check } else { Check { name: format!("{} (full orthogonality)", check.name), ..check }.divergent() })
        })
        .collect()
}
