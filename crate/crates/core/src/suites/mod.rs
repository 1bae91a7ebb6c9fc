//! Named verification suites. Each suite samples parameter points from a
//! seed, runs exact checks and returns a JSON-serializable report.
//!
//! A check is `pass`, `fail` or `divergent`. `divergent` marks a statement
//! checked in the literal form it was stated in and known not to hold; the
//! report carries it, but it does not count as a failure. The corrected
//! statement is always checked alongside it.

mod application;
mod constant_terms;
mod hecke;
mod nonsym_orthogonality;
mod quadrature;
mod statistics;
mod symmetric_orthogonality;
mod triangularity;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::{retry_generic, Mode, ParamSampler, ParameterPoint};
use crate::scalar::{format_fraction, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Divergent,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, lhs: impl Into<String>, rhs: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub fn equal(name: impl Into<String>, lhs: &Q, rhs: &Q) -> Check {
        Check::new(name, lhs == rhs, format_fraction(lhs), format_fraction(rhs))
    }

    pub fn zero(name: impl Into<String>, value: &Q) -> Check {
        Check::equal(name, value, &Q::default())
    }

    /// `|lhs - rhs| < tol` for floating-point cross-checks.
    pub fn close(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Check {
        Check::new(name, (lhs - rhs).abs() < tol, format!("{lhs:.17e}"), format!("{rhs:.17e}"))
    }

    /// Downgrades a failure to a documented divergence.
    pub fn divergent(mut self) -> Check {
        if self.status == Status::Fail {
            self.status = Status::Divergent;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub checked: usize,
    pub failures: Vec<String>,
    pub divergences: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str, seed: u64, checks: Vec<Check>) -> Report {
        let names = |s: Status| checks.iter().filter(|c| c.status == s).map(|c| c.name.clone()).collect();
        Report {
            suite: suite.to_string(),
            seed,
            checked: checks.len(),
            failures: names(Status::Fail),
            divergences: names(Status::Divergent),
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Knobs shared by all suites. Each suite documents how it reads them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub n_max: Option<usize>,
    pub m_max: Option<usize>,
    pub points: Option<usize>,
}

impl SuiteConfig {
    pub fn new(seed: u64) -> Self {
        SuiteConfig { seed, n_max: None, m_max: None, points: None }
    }

    fn n_max(&self, default: usize) -> usize {
        self.n_max.unwrap_or(default)
    }

    fn m_max(&self, default: usize) -> usize {
        self.m_max.unwrap_or(default)
    }

    fn points(&self, default: usize) -> usize {
        self.points.unwrap_or(default)
    }

    fn sampler(&self) -> ParamSampler {
        ParamSampler::new(self.seed)
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, cfg: &SuiteConfig) -> Result<Report>;
}

pub fn registry() -> Vec<Box<dyn Suite>> {
    vec![
        Box::new(triangularity::Triangularity),
        Box::new(symmetric_orthogonality::SymmetricOrthogonality),
        Box::new(constant_terms::ConstantTerms),
        Box::new(statistics::Statistics),
        Box::new(hecke::Hecke),
        Box::new(nonsym_orthogonality::NonsymOrthogonality),
        Box::new(application::Application),
        Box::new(quadrature::Quadrature),
    ]
}

pub fn find(name: &str) -> Result<Box<dyn Suite>> {
    registry()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::Unknown { kind: "suite", name: name.to_string() })
}

const ATTEMPTS: usize = 20;

/// Runs `f` at a fresh point, resampling on genericity failures.
fn at_point(
    sampler: &mut ParamSampler,
    mode: Mode,
    f: impl FnMut(&ParameterPoint) -> Result<Vec<Check>>,
) -> Result<Vec<Check>> {
    retry_generic(sampler, mode, ATTEMPTS, f).map(|(_, v)| v)
}
