//! Parameter points and seeded sampling of generic points.
//!
//! Identities between rational functions of `(t, a, b, c, d, t0..t3)` are
//! checked by specializing every parameter to an exact rational. A point is
//! usable when the computation never divides by zero and never sees two
//! poles collide; the sampler draws small fractions with pairwise distinct
//! moduli and callers resample whenever a genericity error surfaces.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{cmp_abs_one, format_fraction, parse_fraction, q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// `t`, the free pair `(a, b)` used by `K_lambda`, and `t0..t3`.
    Symmetric,
    /// `t, a, b, c, d` with `t0..t3` mirroring `(a, b, c, d)`.
    Nonsymmetric,
}

pub const NAMES: [&str; 9] = ["t", "a", "b", "c", "d", "t0", "t1", "t2", "t3"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterPoint {
    pub t: Q,
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub d: Q,
    pub t0: Q,
    pub t1: Q,
    pub t2: Q,
    pub t3: Q,
    pub mode: Mode,
}

impl ParameterPoint {
    pub fn nonsymmetric(t: Q, a: Q, b: Q, c: Q, d: Q) -> Self {
        ParameterPoint {
            t0: a.clone(),
            t1: b.clone(),
            t2: c.clone(),
            t3: d.clone(),
            t,
            a,
            b,
            c,
            d,
            mode: Mode::Nonsymmetric,
        }
    }

    /// `c` and `d` are set to `t2` and `t3`; nothing in the symmetric
    /// theory reads them.
    pub fn symmetric(t: Q, a: Q, b: Q, ts: [Q; 4]) -> Self {
        let [t0, t1, t2, t3] = ts;
        ParameterPoint {
            c: t2.clone(),
            d: t3.clone(),
            t,
            a,
            b,
            t0,
            t1,
            t2,
            t3,
            mode: Mode::Symmetric,
        }
    }

    pub fn get(&self, name: &str) -> Option<&Q> {
        Some(match name {
            "t" => &self.t,
            "a" => &self.a,
            "b" => &self.b,
            "c" => &self.c,
            "d" => &self.d,
            "t0" => &self.t0,
            "t1" => &self.t1,
            "t2" => &self.t2,
            "t3" => &self.t3,
            _ => return None,
        })
    }

    fn slot(&mut self, name: &str) -> Option<&mut Q> {
        Some(match name {
            "t" => &mut self.t,
            "a" => &mut self.a,
            "b" => &mut self.b,
            "c" => &mut self.c,
            "d" => &mut self.d,
            "t0" => &mut self.t0,
            "t1" => &mut self.t1,
            "t2" => &mut self.t2,
            "t3" => &mut self.t3,
            _ => return None,
        })
    }

    pub fn ts(&self) -> [Q; 4] {
        [self.t0.clone(), self.t1.clone(), self.t2.clone(), self.t3.clone()]
    }

    /// Overrides the named entries. In nonsymmetric mode `t0..t3` are
    /// re-mirrored from `(a, b, c, d)` afterwards.
    pub fn with_assignments(mut self, assignments: &Assignments) -> Result<Self> {
        for (name, value) in &assignments.0 {
            let slot = self.slot(name).ok_or_else(|| Error::Unknown {
                kind: "parameter",
                name: name.clone(),
            })?;
            *slot = value.clone();
        }
        if self.mode == Mode::Nonsymmetric {
            self.t0 = self.a.clone();
            self.t1 = self.b.clone();
            self.t2 = self.c.clone();
            self.t3 = self.d.clone();
        }
        Ok(self)
    }

    /// The involution inverting every parameter. Zero entries stay zero so
    /// that degenerate points remain representable; integration code never
    /// checks moduli on an inverted point.
    pub fn inverted(&self) -> Self {
        let inv = |x: &Q| if x.is_zero() { Q::zero() } else { x.recip() };
        ParameterPoint {
            t: inv(&self.t),
            a: inv(&self.a),
            b: inv(&self.b),
            c: inv(&self.c),
            d: inv(&self.d),
            t0: inv(&self.t0),
            t1: inv(&self.t1),
            t2: inv(&self.t2),
            t3: inv(&self.t3),
            mode: self.mode,
        }
    }

    /// Checks `|p| < 1` for each named parameter. Zero is accepted: it only
    /// removes factors from a density.
    pub fn check_moduli(&self, names: &[&str]) -> Result<()> {
        for name in names {
            let v = self.get(name).ok_or_else(|| Error::Unknown {
                kind: "parameter",
                name: name.to_string(),
            })?;
            if cmp_abs_one(v) != std::cmp::Ordering::Less {
                return Err(Error::Modulus {
                    name: name.to_string(),
                    value: format_fraction(v),
                });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for name in NAMES {
            map.insert(
                name.to_string(),
                serde_json::Value::String(format_fraction(self.get(name).unwrap())),
            );
        }
        map.insert("mode".into(), serde_json::to_value(self.mode).unwrap());
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for ParameterPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = NAMES
            .iter()
            .map(|n| format!("{n}={}", format_fraction(self.get(n).unwrap())))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parsed `name=p/q` assignments, as given on the command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignments(pub BTreeMap<String, Q>);

impl Assignments {
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = BTreeMap::new();
        for item in s.split([',', '\n', ';']).map(str::trim).filter(|x| !x.is_empty()) {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected name=value, got `{item}`")))?;
            let name = name.trim();
            if !NAMES.contains(&name) {
                return Err(Error::Unknown {
                    kind: "parameter",
                    name: name.to_string(),
                });
            }
            out.insert(name.to_string(), parse_fraction(value)?);
        }
        Ok(Assignments(out))
    }

    pub fn merge(mut self, other: &Assignments) -> Self {
        for (k, v) in &other.0 {
            self.0.insert(k.clone(), v.clone());
        }
        self
    }
}

/// Seeded generator of small random fractions `±k/m`, `1 <= k < m <= max_den`.
#[derive(Debug, Clone)]
pub struct ParamSampler {
    rng: ChaCha8Rng,
    max_den: i64,
    cap: Option<Q>,
}

impl ParamSampler {
    pub fn new(seed: u64) -> Self {
        ParamSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_den: 50,
            cap: None,
        }
    }

    /// Restricts every sampled modulus to at most `cap`. Quadrature checks
    /// need this: the trapezoidal error decays like `max|pole|^N`.
    pub fn with_modulus_cap(mut self, cap: Q) -> Self {
        self.cap = Some(cap);
        self
    }

    pub fn with_max_denominator(mut self, max_den: i64) -> Self {
        assert!(max_den >= 2);
        self.max_den = max_den;
        self
    }

    pub fn scalar(&mut self) -> Q {
        loop {
            let m = self.rng.gen_range(2..=self.max_den);
            let k = self.rng.gen_range(1..m);
            let mut x = q(k, m);
            if let Some(cap) = &self.cap {
                if &x > cap {
                    continue;
                }
            }
            if self.rng.gen_bool(0.5) {
                x = -x;
            }
            return x;
        }
    }

    /// `count` scalars with pairwise distinct absolute values.
    pub fn distinct(&mut self, count: usize) -> Vec<Q> {
        let mut out: Vec<Q> = Vec::with_capacity(count);
        while out.len() < count {
            let x = self.scalar();
            if out.iter().all(|y| y.abs() != x.abs()) {
                out.push(x);
            }
        }
        out
    }

    pub fn nonsymmetric(&mut self) -> ParameterPoint {
        let v = self.distinct(5);
        ParameterPoint::nonsymmetric(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), v[4].clone())
    }

    pub fn symmetric(&mut self) -> ParameterPoint {
        let v = self.distinct(7);
        ParameterPoint::symmetric(
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            [v[3].clone(), v[4].clone(), v[5].clone(), v[6].clone()],
        )
    }

    pub fn point(&mut self, mode: Mode) -> ParameterPoint {
        match mode {
            Mode::Symmetric => self.symmetric(),
            Mode::Nonsymmetric => self.nonsymmetric(),
        }
    }
}

/// Runs `f` on freshly sampled points until it succeeds or fails for a
/// reason other than genericity. Gives up after `attempts` tries.
pub fn retry_generic<T>(
    sampler: &mut ParamSampler,
    mode: Mode,
    attempts: usize,
    mut f: impl FnMut(&ParameterPoint) -> Result<T>,
) -> Result<(ParameterPoint, T)> {
    let mut last = None;
    for _ in 0..attempts {
        let p = sampler.point(mode);
        match f(&p) {
            Ok(v) => return Ok((p, v)),
            Err(e) if e.is_genericity() => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::NonGeneric("no attempts".into())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assignments_override_and_mirror() {
        let base = ParamSampler::new(1).nonsymmetric();
        let p = base
            .with_assignments(&Assignments::parse("c=1/3, d=1/5").unwrap())
            .unwrap();
        assert_eq!(p.c, q(1, 3));
        assert_eq!(p.t2, q(1, 3));
        assert_eq!(p.t3, q(1, 5));
        assert!(Assignments::parse("e=1/2").is_err());
        assert!(Assignments::parse("t").is_err());
    }

    #[test]
    fn sampler_is_seeded_and_distinct() {
        let a = ParamSampler::new(7).symmetric();
        let b = ParamSampler::new(7).symmetric();
        assert_eq!(a, b);
        let v = [&a.t, &a.a, &a.b, &a.t0, &a.t1, &a.t2, &a.t3];
        for i in 0..v.len() {
            assert!(a.check_moduli(&["t", "a", "b", "t0", "t1", "t2", "t3"]).is_ok());
            for j in 0..i {
                assert_ne!(v[i].abs(), v[j].abs());
            }
        }
    }

    #[test]
    fn modulus_violation_names_the_parameter() {
        let p = ParamSampler::new(3)
            .nonsymmetric()
            .with_assignments(&Assignments::parse("t=3/2").unwrap())
            .unwrap();
        match p.check_moduli(&["t", "a"]) {
            Err(Error::Modulus { name, .. }) => assert_eq!(name, "t"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cap_bounds_moduli() {
        let mut s = ParamSampler::new(11).with_modulus_cap(q(3, 4));
        for _ in 0..200 {
            assert!(s.scalar().abs() <= q(3, 4));
        }
    }
}
