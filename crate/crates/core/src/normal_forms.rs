//! Coefficient representations of a quadratic and conversions between them.
//!
//! * [`Quadratic`]: `ax² + bx + c = 0`, with `a = 0` allowed.
//! * [`NormalPQ`]: the monic form `x² − 2px + q = 0`.
//! * [`NormalUV`]: the symmetric form `x² − 4ux + 4v² = 0`.

use std::iter;

use crate::error::{Error, Result};
use crate::scalar::{approx_eq, is_finite, is_zero, principal_sqrt, rel_eq, CScalar, DEFAULT_TOL};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadratic {
    pub a: CScalar,
    pub b: CScalar,
    pub c: CScalar,
}

impl Quadratic {
    /// Rejects non-finite coefficients and the all-zero equation.
    pub fn new(a: CScalar, b: CScalar, c: CScalar) -> Result<Self> {
        let eq = Quadratic { a, b, c };
        eq.validate()?;
        Ok(eq)
    }

    pub fn real(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into())
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(is_finite(self.a) && is_finite(self.b) && is_finite(self.c)) {
            return Err(Error::Domain("non-finite coefficient"));
        }
        if is_zero(self.a) && is_zero(self.b) && is_zero(self.c) {
            return Err(Error::Domain("all coefficients are zero"));
        }
        Ok(())
    }

    pub fn is_real(&self) -> bool {
        self.a.im == 0.0 && self.b.im == 0.0 && self.c.im == 0.0
    }

    pub fn is_degenerate(&self) -> bool {
        is_zero(self.a)
    }

    /// Horner evaluation of `ax² + bx + c`.
    pub fn eval(&self, x: CScalar) -> CScalar {
        (self.a * x + self.b) * x + self.c
    }

    /// `|a||x|² + |b||x| + |c|`, the natural scale for residuals at `x`.
    pub fn residual_scale(&self, x: CScalar) -> f64 {
        let m = x.norm();
        self.a.norm() * m * m + self.b.norm() * m + self.c.norm()
    }

    /// Multiplies every coefficient by `factor`; the root set is unchanged for `factor ≠ 0`.
    pub fn scaled(&self, factor: CScalar) -> Self {
        Quadratic {
            a: self.a * factor,
            b: self.b * factor,
            c: self.c * factor,
        }
    }

    pub fn negated(&self) -> Self {
        Quadratic {
            a: -self.a,
            b: -self.b,
            c: -self.c,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalPQ {
    pub p: CScalar,
    pub q: CScalar,
}

/// `x² − 4ux + 4v² = 0`. Only `v²` enters the equation, so `v` and `−v`
/// describe the same quadratic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalUV {
    pub u: CScalar,
    pub v: CScalar,
}

impl NormalUV {
    pub fn new(u: CScalar, v: CScalar) -> Self {
        NormalUV { u, v }
    }

    /// Builds the form from `u` and `v²`, taking `v` as the principal root.
    pub fn from_v_squared(u: CScalar, v_squared: CScalar) -> Result<Self> {
        Ok(NormalUV {
            u,
            v: principal_sqrt(v_squared)?,
        })
    }

    pub fn v_squared(&self) -> CScalar {
        self.v * self.v
    }
}

/// An unordered pair of roots.
///
/// For degenerate linear equations only `x1` is meaningful and `x2` is `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootPair {
    pub x1: CScalar,
    pub x2: Option<CScalar>,
    pub is_double: bool,
    pub is_degenerate_linear: bool,
}

impl RootPair {
    /// Two roots; `is_double` is set when they agree within [`DEFAULT_TOL`].
    pub fn pair(x1: CScalar, x2: CScalar) -> Self {
        RootPair {
            x1,
            x2: Some(x2),
            is_double: approx_eq(x1, x2, DEFAULT_TOL),
            is_degenerate_linear: false,
        }
    }

    pub fn double(x: CScalar) -> Self {
        RootPair {
            x1: x,
            x2: Some(x),
            is_double: true,
            is_degenerate_linear: false,
        }
    }

    /// The single root of a linear equation.
    pub fn linear(x: CScalar) -> Self {
        RootPair {
            x1: x,
            x2: None,
            is_double: false,
            is_degenerate_linear: true,
        }
    }

    pub fn roots(&self) -> impl Iterator<Item = CScalar> + '_ {
        iter::once(self.x1).chain(self.x2)
    }

    /// `(smaller, larger)` by magnitude; `None` for linear results.
    pub fn by_magnitude(&self) -> Option<(CScalar, CScalar)> {
        let x2 = self.x2?;
        if self.x1.norm() <= x2.norm() {
            Some((self.x1, x2))
        } else {
            Some((x2, self.x1))
        }
    }

    /// Multiset equality under [`approx_eq`].
    pub fn multiset_eq(&self, other: &RootPair, tol: f64) -> bool {
        self.matches_with(other, |x, y| approx_eq(x, y, tol))
    }

    /// Multiset equality under the purely relative [`rel_eq`].
    pub fn multiset_rel_eq(&self, other: &RootPair, tol: f64) -> bool {
        self.matches_with(other, |x, y| rel_eq(x, y, tol))
    }

    /// Bitwise multiset equality (`-0.0 == 0.0`).
    pub fn multiset_identical(&self, other: &RootPair) -> bool {
        self.matches_with(other, |x, y| x == y)
    }

    fn matches_with(&self, other: &RootPair, eq: impl Fn(CScalar, CScalar) -> bool) -> bool {
        match (self.x2, other.x2) {
            (None, None) => eq(self.x1, other.x1),
            (Some(s2), Some(o2)) => {
                (eq(self.x1, other.x1) && eq(s2, o2)) || (eq(self.x1, o2) && eq(s2, other.x1))
            }
            _ => false,
        }
    }
}

/// Monic rescaling to `x² − 2px + q = 0`.
pub fn to_pq(eq: &Quadratic) -> Result<NormalPQ> {
    eq.validate()?;
    if eq.is_degenerate() {
        return Err(Error::DegenerateInput);
    }
    Ok(NormalPQ {
        p: -eq.b / (eq.a * 2.0),
        q: eq.c / eq.a,
    })
}

/// Rescaling to `x² − 4ux + 4v² = 0` with `v = √(c/(4a))` principal.
pub fn to_uv(eq: &Quadratic) -> Result<NormalUV> {
    eq.validate()?;
    if eq.is_degenerate() {
        return Err(Error::DegenerateInput);
    }
    let four_a = eq.a * 4.0;
    Ok(NormalUV {
        u: -eq.b / four_a,
        v: principal_sqrt(eq.c / four_a)?,
    })
}

pub fn from_uv(nf: &NormalUV) -> Quadratic {
    Quadratic {
        a: CScalar::new(1.0, 0.0),
        b: nf.u * -4.0,
        c: nf.v_squared() * 4.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> CScalar {
        CScalar::new(x, 0.0)
    }

    fn c(re: f64, im: f64) -> CScalar {
        CScalar::new(re, im)
    }

    #[test]
    fn pq_reads_off_monic_coefficients() {
        let nf = to_pq(&Quadratic::real(1.0, -4.0, 3.0).unwrap()).unwrap();
        assert_eq!(
            nf,
            NormalPQ {
                p: r(2.0),
                q: r(3.0)
            }
        );
        let nf = to_pq(&Quadratic::real(2.0, -8.0, 6.0).unwrap()).unwrap();
        assert_eq!(
            nf,
            NormalPQ {
                p: r(2.0),
                q: r(3.0)
            }
        );
    }

    #[test]
    fn pq_with_complex_coefficients() {
        let eq = Quadratic::new(r(1.0), c(0.0, 2.0), r(-1.0)).unwrap();
        let nf = to_pq(&eq).unwrap();
        assert!(approx_eq(nf.p, c(0.0, -1.0), 0.0));
        assert!(approx_eq(nf.q, r(-1.0), 0.0));
        // x = −i is a double root of both x² + 2ix − 1 and x² − 2px + q
        let x = c(0.0, -1.0);
        assert!(eq.eval(x).norm() < 1e-15);
        assert!((x * x - nf.p * x * 2.0 + nf.q).norm() < 1e-15);
    }

    #[test]
    fn uv_examples() {
        let nf = to_uv(&Quadratic::real(1.0, -20.0, 64.0).unwrap()).unwrap();
        assert_eq!(nf, NormalUV::new(r(5.0), r(4.0)));
        let nf = to_uv(&Quadratic::real(1.0, 0.0, 0.0).unwrap()).unwrap();
        assert!(is_zero(nf.u) && is_zero(nf.v));
        let nf = to_uv(&Quadratic::real(1.0, -4.0, -4.0).unwrap()).unwrap();
        assert_eq!(nf, NormalUV::new(r(1.0), c(0.0, 1.0)));
    }

    #[test]
    fn from_uv_examples() {
        assert_eq!(
            from_uv(&NormalUV::new(r(5.0), r(4.0))),
            Quadratic::real(1.0, -20.0, 64.0).unwrap()
        );
        let zero = from_uv(&NormalUV::new(r(0.0), r(0.0)));
        assert!(is_zero(zero.b) && is_zero(zero.c));
        let eq = from_uv(&NormalUV::new(r(1.0), c(0.0, 1.0)));
        assert_eq!((eq.b, eq.c.re), (r(-4.0), -4.0));
    }

    #[test]
    fn degenerate_input_is_rejected() {
        let eq = Quadratic::real(0.0, 2.0, -6.0).unwrap();
        assert_eq!(to_pq(&eq), Err(Error::DegenerateInput));
        assert_eq!(to_uv(&eq), Err(Error::DegenerateInput));
    }

    #[test]
    fn invalid_quadratics() {
        assert!(matches!(
            Quadratic::real(0.0, 0.0, 0.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            Quadratic::real(f64::NAN, 1.0, 0.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn v_sign_is_unobservable() {
        let nf = NormalUV::new(c(0.3, -1.2), c(2.5, 0.7));
        let flipped = NormalUV::new(nf.u, -nf.v);
        assert_eq!(from_uv(&nf), from_uv(&flipped));
    }

    #[test]
    fn root_pair_multisets() {
        let a = RootPair::pair(r(2.0), r(3.0));
        let b = RootPair::pair(r(3.0), r(2.0));
        assert!(a.multiset_identical(&b));
        assert!(!a.is_double);
        assert!(!a.multiset_eq(&RootPair::linear(r(2.0)), 1e-12));
        assert_eq!(b.by_magnitude(), Some((r(2.0), r(3.0))));
        assert_eq!(RootPair::linear(r(3.0)).roots().count(), 1);
        assert!(RootPair::pair(r(1.0), r(1.0 + 1e-14)).is_double);
    }
}
