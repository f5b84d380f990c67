//! Accuracy benchmark: every solver formula against an extended-precision oracle.
//!
//! Instances come from seeded coefficient families. Each (instance, method)
//! pair yields two [`BenchRecord`]s, one for the smaller and one for the
//! larger oracle root, after matching candidate roots to oracle roots by the
//! pairing with the smaller total relative error.

pub mod oracle;

use std::fmt;
use std::io;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::normal_forms::{to_uv, Quadratic, RootPair};
use crate::scalar::{is_finite, CScalar};
use crate::solvers::{
    solve_alternative, solve_classical, solve_reciprocal, solve_robust, solve_trig_hyp,
};

pub use oracle::{oracle_solve, ORACLE_PRECISION_BITS};

/// Generator used for instance coefficients. Instance `i` of a run with seed
/// `s` draws from `ChaCha8Rng::seed_from_u64(s)` on stream `i`.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng";

/// Floor on the denominator of a relative error.
pub const REL_ERROR_FLOOR: f64 = 1e-300;

pub const CSV_HEADER: [&str; 6] = [
    "family",
    "instance_id",
    "method",
    "root_index",
    "rel_error",
    "oracle_precision_bits",
];

macro_rules! named_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $label:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(&self) -> &'static str {
                match self {
                    $($name::$variant => $label),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($label => Ok($name::$variant),)+
                    _ => Err(Error::InvalidParameter(concat!("unknown ", stringify!($name)))),
                }
            }
        }
    };
}

named_enum!(
    /// Coefficient family.
    FamilyKind {
        CancellationSmallRoot => "cancellation_small_root",
        NearDouble => "near_double",
        LargeB => "large_b",
        RandomComplex => "random_complex",
        RandomReal => "random_real",
    }
);

named_enum!(
    Method {
        Classical => "classical",
        Reciprocal => "reciprocal",
        Alternative => "alternative",
        Robust => "robust",
        TrigHyp => "trig_hyp",
    }
);

named_enum!(
    RootIndex {
        Small => "small",
        Large => "large",
    }
);

impl FamilyKind {
    /// Severity used when none is given.
    pub fn default_parameter(&self) -> f64 {
        match self {
            FamilyKind::CancellationSmallRoot => 1e-12,
            FamilyKind::NearDouble => 1e-8,
            FamilyKind::LargeB => 1e-8,
            FamilyKind::RandomComplex | FamilyKind::RandomReal => 1.0,
        }
    }
}

impl Method {
    pub fn solve(&self, eq: &Quadratic) -> Result<RootPair> {
        match self {
            Method::Classical => solve_classical(eq),
            Method::Reciprocal => solve_reciprocal(eq),
            Method::Alternative => solve_alternative(&to_uv(eq)?),
            Method::Robust => solve_robust(eq),
            Method::TrigHyp => solve_trig_hyp(eq),
        }
    }
}

/// A seeded family of benchmark instances.
///
/// * `cancellation_small_root`: `(1, −(1+ε), ε)` with roots `{1, ε}`.
/// * `near_double`: `(1, −2(1+ε), (1+ε)²)` with a double root near `1+ε`.
/// * `large_b`: `a, c ∈ ±[0.5, 1.5)`, `|b| ∈ [1, 2)/parameter`.
/// * `random_real`, `random_complex`: coefficient parts uniform on
///   `[−parameter, parameter]`, with `|a|` kept above `10⁻³·parameter`.
///
/// For the first two families each instance draws `ε = parameter·(0.5 + U)`,
/// `U` uniform on `[0, 1)`, so instances differ while keeping the severity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchFamily {
    pub name: FamilyKind,
    pub parameter: f64,
    pub count: usize,
    pub seed: u64,
}

impl BenchFamily {
    pub fn new(name: FamilyKind, parameter: f64, count: usize, seed: u64) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidParameter("count must be at least 1"));
        }
        if !(parameter.is_finite() && parameter > 0.0) {
            return Err(Error::InvalidParameter("family parameter must be positive"));
        }
        Ok(BenchFamily {
            name,
            parameter,
            count,
            seed,
        })
    }

    pub fn instance(&self, instance_id: usize) -> Quadratic {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(instance_id as u64);
        let p = self.parameter;
        let r = CScalar::from;
        match self.name {
            FamilyKind::CancellationSmallRoot => {
                let eps = p * (0.5 + rng.gen::<f64>());
                Quadratic {
                    a: r(1.0),
                    b: r(-(1.0 + eps)),
                    c: r(eps),
                }
            }
            FamilyKind::NearDouble => {
                let eps = p * (0.5 + rng.gen::<f64>());
                let root = 1.0 + eps;
                Quadratic {
                    a: r(1.0),
                    b: r(-2.0 * root),
                    c: r(root * root),
                }
            }
            FamilyKind::LargeB => {
                let mut signed = |lo: f64, hi: f64| {
                    let magnitude = rng.gen_range(lo..hi);
                    if rng.gen::<bool>() {
                        magnitude
                    } else {
                        -magnitude
                    }
                };
                let a = signed(0.5, 1.5);
                let b = signed(1.0, 2.0) / p;
                let c = signed(0.5, 1.5);
                Quadratic {
                    a: r(a),
                    b: r(b),
                    c: r(c),
                }
            }
            FamilyKind::RandomReal => {
                let mut draw = || rng.gen_range(-p..=p);
                let mut a = draw();
                while a.abs() < 1e-3 * p {
                    a = draw();
                }
                Quadratic {
                    a: r(a),
                    b: r(draw()),
                    c: r(draw()),
                }
            }
            FamilyKind::RandomComplex => {
                let mut draw = || CScalar::new(rng.gen_range(-p..=p), rng.gen_range(-p..=p));
                let mut a = draw();
                while a.norm() < 1e-3 * p {
                    a = draw();
                }
                Quadratic {
                    a,
                    b: draw(),
                    c: draw(),
                }
            }
        }
    }

    pub fn instances(&self) -> impl Iterator<Item = (usize, Quadratic)> + '_ {
        (0..self.count).map(|id| (id, self.instance(id)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRecord {
    pub family: FamilyKind,
    pub instance_id: usize,
    pub method: Method,
    pub root_index: RootIndex,
    /// `None` when the method is not applicable to the instance; infinite
    /// when the method returned a non-finite root.
    pub rel_error: Option<f64>,
    pub oracle_precision_bits: usize,
}

/// `|x − reference| / max(|reference|, 1e−300)`.
pub fn rel_error(x: CScalar, reference: CScalar) -> f64 {
    if !is_finite(x) {
        // e.g. the reciprocal formula dividing by a zero denominator
        return f64::INFINITY;
    }
    (x - reference).norm() / reference.norm().max(REL_ERROR_FLOOR)
}

/// Relative errors `(small, large)` of `candidate` against `oracle` roots,
/// using whichever pairing has the smaller total error.
pub fn matched_errors(candidate: &RootPair, oracle: &RootPair) -> Option<(f64, f64)> {
    let (small, large) = oracle.by_magnitude()?;
    let c2 = candidate.x2?;
    let c1 = candidate.x1;
    let straight = (rel_error(c1, small), rel_error(c2, large));
    let crossed = (rel_error(c2, small), rel_error(c1, large));
    if straight.0 + straight.1 <= crossed.0 + crossed.1 {
        Some(straight)
    } else {
        Some(crossed)
    }
}

/// Deterministic in `(family, methods)`: records are ordered by instance,
/// then by method in the given order (duplicates dropped), then small before
/// large.
pub fn run_bench(family: &BenchFamily, methods: &[Method]) -> Vec<BenchRecord> {
    let mut unique: Vec<Method> = Vec::with_capacity(methods.len());
    for m in methods {
        if !unique.contains(m) {
            unique.push(*m);
        }
    }

    let mut records = Vec::with_capacity(family.count * unique.len() * 2);
    for (instance_id, eq) in family.instances() {
        let oracle = oracle_solve(&eq, ORACLE_PRECISION_BITS).ok();
        for &method in &unique {
            let errors = oracle.as_ref().and_then(|o| {
                let candidate = method.solve(&eq).ok()?;
                matched_errors(&candidate, o)
            });
            let record = |root_index, rel_error| BenchRecord {
                family: family.name,
                instance_id,
                method,
                root_index,
                rel_error,
                oracle_precision_bits: ORACLE_PRECISION_BITS,
            };
            records.push(record(RootIndex::Small, errors.map(|e| e.0)));
            records.push(record(RootIndex::Large, errors.map(|e| e.1)));
        }
    }
    records
}

/// 17 significant digits in scientific notation.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv<W: io::Write>(records: &[BenchRecord], writer: W) -> io::Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record(CSV_HEADER)?;
    for rec in records {
        let rel_error = rec
            .rel_error
            .map_or_else(|| "NA".to_string(), format_number);
        out.write_record([
            rec.family.as_str(),
            &rec.instance_id.to_string(),
            rec.method.as_str(),
            rec.root_index.as_str(),
            &rel_error,
            &rec.oracle_precision_bits.to_string(),
        ])?;
    }
    out.flush()
}

/// Median of the applicable errors for one method and root; `None` if there are none.
pub fn median_rel_error(
    records: &[BenchRecord],
    method: Method,
    root_index: RootIndex,
) -> Option<f64> {
    let mut errors: Vec<f64> = records
        .iter()
        .filter(|r| r.method == method && r.root_index == root_index)
        .filter_map(|r| r.rel_error)
        .collect();
    if errors.is_empty() {
        return None;
    }
    errors.sort_by(f64::total_cmp);
    let mid = errors.len() / 2;
    Some(if errors.len().is_multiple_of(2) {
        0.5 * (errors[mid - 1] + errors[mid])
    } else {
        errors[mid]
    })
}
