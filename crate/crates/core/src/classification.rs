//! Root-type verdicts for real `u` and `v²` in `x² − 4ux + 4v² = 0`.
//!
//! Reading the symmetric formula `(√(u+v) ± √(u−v))²` off directly: the roots
//! coincide at `2u` iff `u² = v²`, are real and distinct iff `u² > v²`, and
//! are real with opposite signs iff `v² < 0` (their product is `4v²`).

use crate::error::{Error, Result};

pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootKind {
    DoubleRoot,
    TwoDistinctReal,
    /// Always also two distinct real roots; this is the more specific label.
    TwoRealOppositeSign,
    ComplexConjugatePair,
}

impl RootKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RootKind::DoubleRoot => "double_root",
            RootKind::TwoDistinctReal => "two_distinct_real",
            RootKind::TwoRealOppositeSign => "two_real_opposite_sign",
            RootKind::ComplexConjugatePair => "complex_conjugate_pair",
        }
    }
}

impl std::fmt::Display for RootKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub kind: RootKind,
    /// `2u`, present iff `kind` is [`RootKind::DoubleRoot`].
    pub double_value: Option<f64>,
}

/// Classifies with a tolerance band around the exact conditions.
///
/// Checked in order: `|u² − v²| ≤ tol·max(1, u², |v²|)` is a double root,
/// `v² < −tol` is opposite-sign, `u² > v² + tol` is distinct real, anything
/// else a complex-conjugate pair.
pub fn classify(u: f64, v_squared: f64, tol: f64) -> Result<Classification> {
    if !u.is_finite() || !v_squared.is_finite() {
        return Err(Error::Domain("classification needs finite u and v^2"));
    }
    if tol.is_nan() || tol < 0.0 {
        return Err(Error::InvalidParameter("tolerance must be nonnegative"));
    }
    let u2 = u * u;
    let kind = if (u2 - v_squared).abs() <= tol * 1f64.max(u2).max(v_squared.abs()) {
        RootKind::DoubleRoot
    } else if v_squared < -tol {
        RootKind::TwoRealOppositeSign
    } else if u2 > v_squared + tol {
        RootKind::TwoDistinctReal
    } else {
        RootKind::ComplexConjugatePair
    };
    Ok(Classification {
        kind,
        double_value: (kind == RootKind::DoubleRoot).then_some(2.0 * u),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_root_at_two_u() {
        let verdict = classify(3.0, 9.0, DEFAULT_CLASSIFY_TOL).unwrap();
        assert_eq!(verdict.kind, RootKind::DoubleRoot);
        assert_eq!(verdict.double_value, Some(6.0));
        assert_eq!(classify(-3.0, 9.0, 0.0).unwrap().double_value, Some(-6.0));
    }

    #[test]
    fn distinct_real() {
        // roots 4 and 16
        let verdict = classify(5.0, 16.0, DEFAULT_CLASSIFY_TOL).unwrap();
        assert_eq!(verdict.kind, RootKind::TwoDistinctReal);
        assert_eq!(verdict.double_value, None);
    }

    #[test]
    fn opposite_sign_wins_over_distinct() {
        // x² − 4 = 0
        let verdict = classify(0.0, -1.0, DEFAULT_CLASSIFY_TOL).unwrap();
        assert_eq!(verdict.kind, RootKind::TwoRealOppositeSign);
        assert_eq!(
            classify(7.0, -1.0, 0.0).unwrap().kind,
            RootKind::TwoRealOppositeSign
        );
    }

    #[test]
    fn complex_pair() {
        assert_eq!(
            classify(1.0, 4.0, 0.0).unwrap().kind,
            RootKind::ComplexConjugatePair
        );
    }

    #[test]
    fn tolerance_band() {
        assert_eq!(
            classify(1.0, 1.0 + 1e-12, 1e-10).unwrap().kind,
            RootKind::DoubleRoot
        );
        assert_eq!(
            classify(1.0, 1.0 + 1e-12, 0.0).unwrap().kind,
            RootKind::ComplexConjugatePair
        );
        assert_eq!(
            classify(1.0, -1e-12, 1e-10).unwrap().kind,
            RootKind::TwoDistinctReal
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            classify(f64::NAN, 1.0, 0.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            classify(1.0, f64::INFINITY, 0.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            classify(1.0, 1.0, -1.0),
            Err(Error::InvalidParameter(_))
        ));
    }
}
