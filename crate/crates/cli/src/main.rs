//! `koornwinder`: build q=0 Koornwinder polynomials, integrate against the
//! densities and run the verification suites.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use koornwinder::ct::{build_density, closed_form, constant_term, ct_quadrature, DensityKind, FactoredIntegrand};
use koornwinder::error::{Error, Result};
use koornwinder::families::{self, Operand};
use koornwinder::laurent::{LaurentPoly, PolyJson};
use koornwinder::params::{Assignments, Mode, ParamSampler, ParameterPoint};
use koornwinder::scalar::{format_fraction, to_f64, Q};
use koornwinder::suites::{self, Report, SuiteConfig};
use serde_json::{json, Value};

const ATTEMPTS: usize = 20;

#[derive(Parser)]
#[command(name = "koornwinder", version, about = "Exact q=0 Koornwinder polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Density {
    Symmetric,
    Nonsymmetric,
}

/// Parameter sources shared by every subcommand that needs a point. Values
/// from `--params` override the file, which overrides the seeded sample.
#[derive(clap::Args)]
struct ParamArgs {
    /// Comma-separated `name=p/q` assignments
    #[arg(long)]
    params: Option<String>,
    /// File of `name=p/q` lines
    #[arg(long, env = "KOORNWINDER_PARAMS")]
    params_file: Option<PathBuf>,
    /// Seed for the parameters not given explicitly
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print a polynomial of a family
    Expand {
        #[arg(long, default_value = "symmetric")]
        family: String,
        /// Partition or composition, e.g. `2,1` or `0,-1,2`
        #[arg(long = "lambda", visible_alias = "mu", value_delimiter = ',', allow_hyphen_values = true)]
        index: Vec<i32>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        params: ParamArgs,
        /// Also integrate to get the norm and its closed form
        #[arg(long)]
        with_norm: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification suites
    Verify {
        /// Suite name, or `all`
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long)]
        points: Option<usize>,
        /// Worker threads for the parallel sums
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Constant term of a density, optionally times a numerator polynomial
    Ct {
        #[arg(long, value_enum)]
        density: Density,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        params: ParamArgs,
        /// Numerator in the JSON polynomial format
        #[arg(long)]
        numerator: Option<PathBuf>,
        /// Trapezoidal grid size for a floating-point cross-check
        #[arg(long)]
        quadrature: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Inner product of two family members, or of a member and a monomial
    InnerProduct {
        #[arg(long, default_value = "symmetric")]
        family: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        left: Vec<i32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "monomial")]
        right: Option<Vec<i32>>,
        /// Pair with `z^monomial` instead of a family member
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        monomial: Option<Vec<i32>>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        quadrature: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List the registered suites and families
    List,
}

/// Failures the process reports through its exit status.
enum Failure {
    Checks,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            if e.is_usage() {
                ExitCode::from(2)
            } else if e.is_genericity() {
                ExitCode::from(3)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(command: Command) -> std::result::Result<(), Failure> {
    match command {
        Command::Expand { family, index, n, params, with_norm, format } => {
            let family = families::find(&family)?;
            let n = n.unwrap_or(index.len());
            let fixed = params.assignments()?;
            let (point, (poly, norm)) = resolve(&params, &fixed, family.mode(), |p| {
                if with_norm {
                    p.check_moduli(family.density().parameter_names())?;
                }
                let poly = family.build(&index, n, p)?;
                let norm = if with_norm {
                    let exact = family.inner(&index, Operand::Member(&index), n, p)?;
                    Some((exact, family.norm(&index, n, p)?))
                } else {
                    None
                };
                Ok((poly, norm))
            })?;
            match format {
                Format::Text => {
                    println!("{poly}");
                    if let Some((exact, closed)) = &norm {
                        println!("norm = {}", format_fraction(exact));
                        if let Some(c) = closed {
                            println!("closed form = {}", format_fraction(c));
                        }
                    }
                }
                Format::Json => match &norm {
                    None => println!("{}", serde_json::to_string(&poly.to_json()).expect("serializable")),
                    Some((exact, closed)) => emit(&json!({
                        "params": point.to_json(),
                        "poly": poly.to_json(),
                        "norm": format_fraction(exact),
                        "closed_form": closed.as_ref().map(format_fraction),
                    })),
                },
            }
            if let Some((exact, Some(closed))) = norm {
                if exact != closed {
                    return Err(Failure::Checks);
                }
            }
            Ok(())
        }
        Command::Verify { suite, seed, n_max, m_max, points, jobs, format } => {
            if let Some(j) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build_global()
                    .map_err(|e| Error::Parse(format!("--jobs: {e}")))?;
            }
            let selected = if suite == "all" { suites::registry() } else { vec![suites::find(&suite)?] };
            let cfg = SuiteConfig { seed, n_max, m_max, points };
            let mut reports = Vec::new();
            for s in &selected {
                let report = s.run(&cfg)?;
                if format == Format::Text {
                    print_report(&report);
                }
                reports.push(report);
            }
            if format == Format::Json {
                if reports.len() == 1 {
                    emit(&json!(reports[0]));
                } else {
                    emit(&json!(reports));
                }
            }
            if reports.iter().all(Report::passed) {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Ct { density, n, params, numerator, quadrature, format } => {
            let kind = match density {
                Density::Symmetric => DensityKind::Symmetric,
                Density::Nonsymmetric => DensityKind::Nonsymmetric,
            };
            let mode = match kind {
                DensityKind::Symmetric => Mode::Symmetric,
                DensityKind::Nonsymmetric => Mode::Nonsymmetric,
            };
            let numerator = match numerator {
                Some(path) => Some(read_poly(&path)?),
                None => None,
            };
            if let Some(f) = &numerator {
                if f.n() != n {
                    return Err(Error::VariableMismatch { left: f.n(), right: n }.into());
                }
            }
            let fixed = params.assignments()?;
            let (point, (integrand, value)) = resolve_for_quadrature(&params, &fixed, mode, quadrature, |p| {
                p.check_moduli(kind.parameter_names())?;
                let mut integrand = build_density(kind, n, p)?;
                if let Some(f) = &numerator {
                    integrand = integrand.mul_poly(f)?;
                }
                let value = constant_term(&integrand)?;
                Ok((integrand, value))
            })?;
            let closed = match (&numerator, kind) {
                (Some(_), _) => None,
                (None, DensityKind::Symmetric) => Some(closed_form::symmetric_ct_closed(
                    n, &point.t, &point.t0, &point.t1, &point.t2, &point.t3,
                )),
                (None, DensityKind::Nonsymmetric) => Some(closed_form::nonsymmetric_ct_closed(
                    n, &point.t, &point.a, &point.b, &point.c, &point.d,
                )),
            };
            let mut out = value_json(&point, &value, &integrand, quadrature)?;
            if let Some(c) = &closed {
                out["closed_form"] = json!(format_fraction(c));
            }
            print_value(&out, format);
            match closed {
                Some(c) if c != value => Err(Failure::Checks),
                _ => Ok(()),
            }
        }
        Command::InnerProduct { family, left, right, monomial, n, params, quadrature, format } => {
            let family = families::find(&family)?;
            let right_index = match (&right, &monomial) {
                (Some(r), None) => r.clone(),
                (None, Some(m)) => m.clone(),
                _ => return Err(Error::Parse("give exactly one of --right and --monomial".into()).into()),
            };
            let operand = if right.is_some() { Operand::Member(&right_index) } else { Operand::Monomial(&right_index) };
            let n = n.unwrap_or(left.len().max(right_index.len()));
            let fixed = params.assignments()?;
            let (point, (integrand, value)) = resolve_for_quadrature(&params, &fixed, family.mode(), quadrature, |p| {
                p.check_moduli(family.density().parameter_names())?;
                let integrand = family.integrand(&left, operand, n, p)?;
                let value = constant_term(&integrand)?;
                Ok((integrand, value))
            })?;
            print_value(&value_json(&point, &value, &integrand, quadrature)?, format);
            Ok(())
        }
        Command::List => {
            println!("suites:");
            for s in suites::registry() {
                println!("  {:<26} {}", s.name(), s.description());
            }
            println!("families:");
            for f in families::registry() {
                println!("  {:<26} {}", f.name(), f.description());
            }
            Ok(())
        }
    }
}

impl ParamArgs {
    fn assignments(&self) -> Result<Assignments> {
        let mut out = Assignments::default();
        if let Some(path) = &self.params_file {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let body: String = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or(""))
                .collect::<Vec<_>>()
                .join("\n");
            out = Assignments::parse(&body)?;
        }
        if let Some(s) = &self.params {
            out = out.merge(&Assignments::parse(s)?);
        }
        Ok(out)
    }
}

/// Samples the missing parameters from the seed, overrides them with the
/// fixed ones and runs `f`, resampling on genericity failures. When every
/// parameter is fixed a genericity failure is final.
fn resolve<T>(
    args: &ParamArgs,
    fixed: &Assignments,
    mode: Mode,
    f: impl FnMut(&ParameterPoint) -> Result<T>,
) -> Result<(ParameterPoint, T)> {
    resolve_with(ParamSampler::new(args.seed), fixed, mode, f)
}

/// Sampled moduli are kept at most 1/2 when a quadrature cross-check is
/// requested, so that small grids converge; explicit values are not capped.
fn resolve_for_quadrature<T>(
    args: &ParamArgs,
    fixed: &Assignments,
    mode: Mode,
    grid: Option<usize>,
    f: impl FnMut(&ParameterPoint) -> Result<T>,
) -> Result<(ParameterPoint, T)> {
    let mut sampler = ParamSampler::new(args.seed);
    if grid.is_some() {
        sampler = sampler.with_modulus_cap(Q::new(1.into(), 2.into()));
    }
    resolve_with(sampler, fixed, mode, f)
}

fn resolve_with<T>(
    mut sampler: ParamSampler,
    fixed: &Assignments,
    mode: Mode,
    mut f: impl FnMut(&ParameterPoint) -> Result<T>,
) -> Result<(ParameterPoint, T)> {
    let mut last = None;
    for _ in 0..ATTEMPTS {
        let p = sampler.point(mode).with_assignments(fixed)?;
        match f(&p) {
            Ok(v) => return Ok((p, v)),
            Err(e) if e.is_genericity() => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

fn read_poly(path: &PathBuf) -> Result<LaurentPoly> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let j: PolyJson = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    LaurentPoly::from_json(&j)
}

fn value_json(point: &ParameterPoint, value: &Q, integrand: &FactoredIntegrand, grid: Option<usize>) -> Result<Value> {
    let mut out = json!({ "params": point.to_json(), "value": format_fraction(value) });
    if let Some(grid) = grid {
        let z = ct_quadrature(integrand, grid)?;
        out["quadrature"] = json!({ "re": z.re, "im": z.im, "grid": grid });
        out["discrepancy"] = json!((z.re - to_f64(value)).hypot(z.im));
    }
    Ok(out)
}

fn print_value(v: &Value, format: Format) {
    match format {
        Format::Json => emit(v),
        Format::Text => {
            println!("{}", v["value"].as_str().unwrap_or_default());
            if let Some(c) = v.get("closed_form") {
                println!("closed form = {}", c.as_str().unwrap_or_default());
            }
            if let Some(q) = v.get("quadrature") {
                println!("quadrature({}) = {} + {}i", q["grid"], q["re"], q["im"]);
                println!("discrepancy = {}", v["discrepancy"]);
            }
        }
    }
}

fn print_report(r: &Report) {
    let verdict = if r.passed() { "pass" } else { "FAIL" };
    println!(
        "{:<24} {verdict}  checked {}, failed {}, divergent {}",
        r.suite,
        r.checked,
        r.failures.len(),
        r.divergences.len()
    );
    for name in &r.failures {
        println!("    failed: {name}");
    }
    for name in &r.divergences {
        println!("    divergent: {name}");
    }
}

fn emit(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}
