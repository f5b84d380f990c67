//! Complex scalars and the principal square root.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Working scalar type. Real inputs are complex numbers with zero imaginary part.
pub type CScalar = Complex64;

/// Default mixed absolute/relative comparison tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Unit roundoff of `f64`, half the machine epsilon.
pub const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

// Rescaling thresholds for `principal_sqrt`; both are even powers of two so
// the square root of the scale factor is exact.
const SQRT_BIG: f64 = 1.0e300;
const SQRT_SMALL: f64 = 1.0e-300;
const DOWN_SCALE: f64 = 5.421_010_862_427_522e-20; // 2^-64
const UP_SCALE: f64 = 340_282_366_920_938_463_463_374_607_431_768_211_456.0; // 2^128

pub fn is_finite(z: CScalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub fn is_zero(z: CScalar) -> bool {
    z.re == 0.0 && z.im == 0.0
}

/// `|z₁ − z₂| ≤ tol·max(1, |z₁|, |z₂|)`.
pub fn approx_eq(z1: CScalar, z2: CScalar, tol: f64) -> bool {
    (z1 - z2).norm() <= tol * 1f64.max(z1.norm()).max(z2.norm())
}

/// Purely relative comparison `|z₁ − z₂| ≤ tol·max(|z₁|, |z₂|)`, exact at zero.
pub fn rel_eq(z1: CScalar, z2: CScalar, tol: f64) -> bool {
    (z1 - z2).norm() <= tol * z1.norm().max(z2.norm())
}

/// Principal square root with the branch cut on the negative real axis.
///
/// The result `w` satisfies `Re(w) ≥ 0`, and `Im(w) ≥ 0` whenever `Re(w) = 0`.
/// A negative real argument with a negative-zero imaginary part still maps to
/// the upper half-axis.
pub fn principal_sqrt(z: CScalar) -> Result<CScalar> {
    if !is_finite(z) {
        return Err(Error::Domain("square root of a non-finite value"));
    }
    if is_zero(z) {
        return Ok(CScalar::new(0.0, 0.0));
    }

    let magnitude = z.re.abs().max(z.im.abs());
    let (w, unscale) = if magnitude > SQRT_BIG {
        (z * DOWN_SCALE, 4294967296.0) // 2^32
    } else if magnitude < SQRT_SMALL {
        (z * UP_SCALE, DOWN_SCALE)
    } else {
        (z, 1.0)
    };

    let r = w.norm();
    let root = if w.re >= 0.0 {
        let t = (0.5 * (r + w.re)).sqrt();
        CScalar::new(t, w.im / (2.0 * t))
    } else {
        let t = (0.5 * (r - w.re)).sqrt();
        let im = if w.im < 0.0 { -t } else { t };
        CScalar::new(w.im.abs() / (2.0 * t), im)
    };
    Ok(root * unscale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> CScalar {
        CScalar::new(re, im)
    }

    #[test]
    fn positive_real() {
        assert_eq!(principal_sqrt(c(4.0, 0.0)).unwrap(), c(2.0, 0.0));
    }

    #[test]
    fn minus_one_maps_to_i() {
        assert_eq!(principal_sqrt(c(-1.0, 0.0)).unwrap(), c(0.0, 1.0));
        assert_eq!(principal_sqrt(c(-1.0, -0.0)).unwrap(), c(0.0, 1.0));
    }

    #[test]
    fn three_plus_four_i() {
        // (2 + i)² = 4 − 1 + 4i
        assert_eq!(c(2.0, 1.0) * c(2.0, 1.0), c(3.0, 4.0));
        let w = principal_sqrt(c(3.0, 4.0)).unwrap();
        assert!(approx_eq(w, c(2.0, 1.0), 1e-15));
    }

    #[test]
    fn lower_half_plane_keeps_positive_real_part() {
        let w = principal_sqrt(c(-3.0, -4.0)).unwrap();
        assert!(approx_eq(w, c(1.0, -2.0), 1e-15));
    }

    #[test]
    fn zero_and_extremes() {
        assert_eq!(principal_sqrt(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        let big = principal_sqrt(c(-1e308, 1e308)).unwrap();
        assert!(is_finite(big));
        assert!(approx_eq(big * big, c(-1e308, 1e308), 1e-15));
        let tiny = principal_sqrt(c(5e-324, 0.0)).unwrap();
        assert!(tiny.re > 0.0);
    }

    #[test]
    fn non_finite_is_a_domain_error() {
        assert!(matches!(
            principal_sqrt(c(f64::NAN, 0.0)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            principal_sqrt(c(0.0, f64::INFINITY)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn scale_constants_are_exact_powers_of_two() {
        assert_eq!(DOWN_SCALE, 2f64.powi(-64));
        assert_eq!(UP_SCALE, 2f64.powi(128));
    }

    #[test]
    fn tolerance_model() {
        assert!(approx_eq(c(1e-20, 0.0), c(0.0, 0.0), 1e-12));
        assert!(!rel_eq(c(1e-20, 0.0), c(0.0, 0.0), 1e-12));
        assert!(approx_eq(c(1e6, 0.0), c(1e6 + 1e-7, 0.0), 1e-12));
    }
}
