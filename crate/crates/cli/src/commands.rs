use std::fmt::{self, Write as _};

use quadform::bench::{self, oracle::ORACLE_PRECISION_BITS, BenchFamily};
use quadform::muller::MullerOptions;
use quadform::{
    muller_solve, solve_alternative, solve_classical, solve_hyperbolic, solve_reciprocal,
    solve_robust, solve_trigonometric, to_uv, well_depth, well_series, CScalar, Error, NormalUV,
    Quadratic, RootPair, SeriesOrder, WellParams,
};
use serde_json::{json, Value};

use crate::report::{complex, num, sig6, sig6_complex};
use crate::{BenchArgs, ClassifyArgs, Format, MullerArgs, SolveArgs, SolveMethod, WellArgs};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn status(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

pub struct Report {
    pub text: String,
    pub json: Value,
}

pub struct Outcome {
    pub report: Option<Report>,
    pub status: u8,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome {
            report: Some(report),
            status: 0,
        }
    }
}

const SOLVE_METHODS: [SolveMethod; 6] = [
    SolveMethod::Classical,
    SolveMethod::Reciprocal,
    SolveMethod::Alternative,
    SolveMethod::Hyperbolic,
    SolveMethod::Trigonometric,
    SolveMethod::Robust,
];

impl SolveMethod {
    fn name(&self) -> &'static str {
        match self {
            SolveMethod::Classical => "classical",
            SolveMethod::Reciprocal => "reciprocal",
            SolveMethod::Alternative => "alternative",
            SolveMethod::Hyperbolic => "hyperbolic",
            SolveMethod::Trigonometric => "trigonometric",
            SolveMethod::Robust => "robust",
            SolveMethod::All => "all",
        }
    }

    fn run(&self, eq: &Quadratic) -> quadform::Result<(RootPair, Option<NormalUV>)> {
        // the parametrizations assume a > 0
        let positive = if eq.is_real() && eq.a.re < 0.0 {
            eq.negated()
        } else {
            *eq
        };
        match self {
            SolveMethod::Classical => Ok((solve_classical(eq)?, None)),
            SolveMethod::Reciprocal => Ok((solve_reciprocal(eq)?, None)),
            SolveMethod::Alternative => {
                let nf = to_uv(eq)?;
                Ok((solve_alternative(&nf)?, Some(nf)))
            }
            SolveMethod::Hyperbolic => Ok((solve_hyperbolic(&positive)?, None)),
            SolveMethod::Trigonometric => Ok((solve_trigonometric(&positive)?, None)),
            SolveMethod::Robust => Ok((solve_robust(eq)?, None)),
            SolveMethod::All => unreachable!("expanded by the caller"),
        }
    }
}

fn method_entry(
    method: SolveMethod,
    eq: &Quadratic,
    outcome: &quadform::Result<(RootPair, Option<NormalUV>)>,
    text: &mut String,
) -> Value {
    let name = method.name();
    let (roots, nf) = match outcome {
        Ok(r) => r,
        Err(e) => {
            let reason = match e {
                Error::NotApplicable(m) => m.to_string(),
                other => other.to_string(),
            };
            let _ = writeln!(text, "{name:<14} not applicable: {reason}");
            return json!({ "method": name, "applicable": false, "reason": reason });
        }
    };
    let values: Vec<CScalar> = roots.roots().collect();
    let residuals: Vec<f64> = values.iter().map(|&x| eq.eval(x).norm()).collect();
    let _ = write!(
        text,
        "{name:<14} roots {}  residuals {}",
        values
            .iter()
            .map(|&z| sig6_complex(z))
            .collect::<Vec<_>>()
            .join(", "),
        residuals
            .iter()
            .map(|&r| sig6(r))
            .collect::<Vec<_>>()
            .join(", "),
    );
    if roots.is_double {
        text.push_str("  double");
    }
    if roots.is_degenerate_linear {
        text.push_str("  degenerate_linear");
    }
    if let Some(nf) = nf {
        let _ = write!(text, "  u={} v={}", sig6_complex(nf.u), sig6_complex(nf.v));
    }
    text.push('\n');

    let mut entry = json!({
        "method": name,
        "applicable": true,
        "roots": values.iter().map(|&z| complex(z)).collect::<Vec<_>>(),
        "residuals": residuals.iter().map(|&r| num(r)).collect::<Vec<_>>(),
        "is_double": roots.is_double,
        "is_degenerate_linear": roots.is_degenerate_linear,
    });
    if let Some(nf) = nf {
        entry["u"] = complex(nf.u);
        entry["v"] = complex(nf.v);
    }
    entry
}

pub fn solve(args: &SolveArgs) -> Result<Outcome, CliError> {
    let eq = Quadratic::new(args.a, args.b, args.c)?;
    if eq.is_degenerate() && eq.b == CScalar::new(0.0, 0.0) {
        return Err(Error::NoRoot.into());
    }
    let methods: &[SolveMethod] = match args.method {
        SolveMethod::All => &SOLVE_METHODS,
        ref single => std::slice::from_ref(single),
    };

    let mut text = String::new();
    let mut entries = Vec::new();
    let mut applicable = 0;
    for &method in methods {
        let outcome = method.run(&eq);
        applicable += usize::from(outcome.is_ok());
        entries.push(method_entry(method, &eq, &outcome, &mut text));
    }
    let json = json!({
        "command": "solve",
        "a": complex(eq.a),
        "b": complex(eq.b),
        "c": complex(eq.c),
        "method": args.method.name(),
        "results": entries,
    });
    Ok(Outcome {
        report: Some(Report { text, json }),
        status: if applicable == 0 { 1 } else { 0 },
    })
}

pub fn classify(args: &ClassifyArgs) -> Result<Outcome, CliError> {
    let verdict = quadform::classify(args.u, args.v2, args.tol)?;
    let mut text = verdict.kind.to_string();
    if let Some(x) = verdict.double_value {
        let _ = write!(text, " {}", sig6(x));
    }
    text.push('\n');
    let json = json!({
        "command": "classify",
        "u": num(args.u),
        "v2": num(args.v2),
        "tol": num(args.tol),
        "kind": verdict.kind.as_str(),
        "double_value": verdict.double_value.map_or(Value::Null, num),
    });
    Ok(Outcome::ok(Report { text, json }))
}

pub fn well(args: &WellArgs) -> Result<Outcome, CliError> {
    let params = WellParams::new(args.t, args.c, args.g)?;
    let sol = well_depth(&params)?;
    let mut rows = vec![
        ("depth", sol.depth),
        ("fall_time", sol.fall_time),
        ("sound_time", sol.sound_time),
        ("tau", sol.tau),
        ("char_length", sol.char_length),
        ("other_root", sol.other_root),
    ];
    let mut json = json!({
        "command": "well",
        "t": num(args.t),
        "c": num(args.c),
        "g": num(args.g),
        "series": Value::Null,
    });
    if let Some(order) = args.series {
        let order = SeriesOrder::try_from(order)?;
        let value = well_series(&params, order)?;
        json["series"] = json!({
            "order": args.series,
            "value": num(value),
            "deviation": num(value - sol.depth),
        });
        rows.push(("series", value));
        rows.push(("series_deviation", value - sol.depth));
    }
    let mut text = String::new();
    for (key, value) in rows.iter().take(6) {
        json[*key] = num(*value);
        let note = if *key == "other_root" {
            "  (nonphysical)"
        } else {
            ""
        };
        let _ = writeln!(text, "{key:<17} {}{note}", sig6(*value));
    }
    if let Some(order) = args.series {
        let _ = writeln!(text, "{:<17} {}", "series_order", order);
        for (key, value) in &rows[6..] {
            let _ = writeln!(text, "{key:<17} {}", sig6(*value));
        }
    }
    Ok(Outcome::ok(Report { text, json }))
}

pub fn muller(args: &MullerArgs) -> Result<Outcome, CliError> {
    let mut options = MullerOptions::default();
    if let Some(tol) = args.tol {
        options.residual_tol = tol;
    }
    if let Some(max_iter) = args.max_iter {
        options.max_iter = max_iter;
    }
    let poly = &args.poly;
    let result = muller_solve(|x| poly.eval(x), args.x0, args.x1, args.x2, &options)?;
    let text = format!(
        "root        {}\nresidual    {}\niterations  {}\nconverged   {}\n",
        sig6_complex(result.root),
        sig6(result.residual.norm()),
        result.iterations,
        result.converged,
    );
    let json = json!({
        "command": "muller",
        "root": complex(result.root),
        "residual": complex(result.residual),
        "residual_norm": num(result.residual.norm()),
        "iterations": result.iterations,
        "converged": result.converged,
    });
    Ok(Outcome {
        report: Some(Report { text, json }),
        status: if result.converged { 0 } else { 1 },
    })
}

pub fn bench(args: &BenchArgs, format: Format) -> Result<Outcome, CliError> {
    let parameter = args
        .param
        .unwrap_or_else(|| args.family.default_parameter());
    let family = BenchFamily::new(args.family, parameter, args.count, args.seed)?;
    let records = bench::run_bench(&family, &args.methods.0);

    let report = match format {
        Format::Text | Format::Csv => {
            let mut body = Vec::new();
            bench::write_csv(&records, &mut body).map_err(|e| CliError::Failure(e.to_string()))?;
            Report {
                text: String::from_utf8(body).expect("csv is utf-8"),
                json: Value::Null,
            }
        }
        Format::Json => {
            let rows: Vec<Value> = records
                .iter()
                .map(|r| {
                    json!({
                        "family": r.family.as_str(),
                        "instance_id": r.instance_id,
                        "method": r.method.as_str(),
                        "root_index": r.root_index.as_str(),
                        "rel_error": match r.rel_error {
                            None => Value::Null,
                            Some(e) if e.is_infinite() => json!("inf"),
                            Some(e) => num(e),
                        },
                        "oracle_precision_bits": r.oracle_precision_bits,
                    })
                })
                .collect();
            let json = json!({
                "command": "bench",
                "family": family.name.as_str(),
                "parameter": num(family.parameter),
                "count": family.count,
                "seed": family.seed,
                "rng": bench::RNG_ALGORITHM,
                "oracle_precision_bits": ORACLE_PRECISION_BITS,
                "records": rows,
            });
            Report {
                text: format!("{json}\n"),
                json,
            }
        }
    };

    match &args.out {
        Some(path) => {
            std::fs::write(path, &report.text)
                .map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
            Ok(Outcome {
                report: None,
                status: 0,
            })
        }
        None => Ok(Outcome::ok(report)),
    }
}
