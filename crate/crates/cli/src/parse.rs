//! Literal parsing for command-line values.

use quadform::CScalar;

fn parse_real(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let x: f64 = s.parse().map_err(|_| format!("invalid number '{s}'"))?;
    if !x.is_finite() {
        return Err(format!("non-finite number '{s}'"));
    }
    Ok(x)
}

/// `re` or `re,im`.
pub fn parse_scalar(s: &str) -> Result<CScalar, String> {
    match s.split_once(',') {
        None => Ok(CScalar::new(parse_real(s)?, 0.0)),
        Some((re, im)) => Ok(CScalar::new(parse_real(re)?, parse_real(im)?)),
    }
}

pub fn parse_finite(s: &str) -> Result<f64, String> {
    parse_real(s)
}

/// Polynomial coefficients, highest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<CScalar>);

impl Poly {
    /// Horner evaluation.
    pub fn eval(&self, x: CScalar) -> CScalar {
        self.0
            .iter()
            .fold(CScalar::new(0.0, 0.0), |acc, &c| acc * x + c)
    }
}

/// Comma-separated coefficients, highest degree first. A complex coefficient
/// is written `(re,im)`, e.g. `1,(0,2),-3`.
pub fn parse_poly(s: &str) -> Result<Poly, String> {
    let mut coeffs = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let (item, tail) = if let Some(inner) = rest.strip_prefix('(') {
            let close = inner
                .find(')')
                .ok_or_else(|| format!("unclosed '(' in '{s}'"))?;
            let z = parse_scalar(&inner[..close])?;
            if !inner[..close].contains(',') {
                return Err(format!("complex coefficient needs '(re,im)' in '{s}'"));
            }
            (z, inner[close + 1..].trim_start())
        } else {
            let end = rest.find(',').unwrap_or(rest.len());
            (CScalar::new(parse_real(&rest[..end])?, 0.0), &rest[end..])
        };
        coeffs.push(item);
        rest = match tail.strip_prefix(',') {
            Some(t) if t.trim().is_empty() => return Err(format!("trailing ',' in '{s}'")),
            Some(t) => t.trim_start(),
            None if tail.is_empty() => tail,
            None => return Err(format!("expected ',' in '{s}'")),
        };
    }
    if coeffs.is_empty() {
        return Err("empty coefficient list".into());
    }
    Ok(Poly(coeffs))
}
