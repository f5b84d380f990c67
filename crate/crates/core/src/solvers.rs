//! Closed-form solvers. Each returns the roots as an unordered [`RootPair`].

use crate::error::{Error, Result};
use crate::normal_forms::{NormalPQ, NormalUV, Quadratic, RootPair};
use crate::scalar::{is_zero, principal_sqrt, CScalar, UNIT_ROUNDOFF};

// Coefficients larger than 2^500 (or smaller than 2^-500) are rescaled by a
// power of two before b² − 4ac is formed.
const PRESCALE_HI: f64 = 3.273390607896142e150;
const PRESCALE_LO: f64 = 3.054936363499605e-151;

fn prescaled(eq: &Quadratic) -> Quadratic {
    let magnitude = [eq.a, eq.b, eq.c]
        .iter()
        .map(|z| z.re.abs().max(z.im.abs()))
        .fold(0.0, f64::max);
    if magnitude > PRESCALE_HI || (magnitude < PRESCALE_LO && magnitude > 0.0) {
        let exponent = magnitude.log2().floor() as i32;
        eq.scaled(CScalar::new(2f64.powi(-exponent), 0.0))
    } else {
        *eq
    }
}

fn discriminant(eq: &Quadratic) -> CScalar {
    eq.b * eq.b - eq.a * eq.c * 4.0
}

/// Roots of the linear equation `bx + c = 0` and of `ax² + bx = 0`, shared by
/// the solvers that accept `a = 0`.
fn degenerate_roots(eq: &Quadratic) -> Result<Option<RootPair>> {
    if is_zero(eq.a) {
        if is_zero(eq.b) {
            return Err(Error::NoRoot);
        }
        // sqrt(b²) = ±b, so the surviving branch of −2c/(b ± √(b²)) is −2c/(2b).
        return Ok(Some(RootPair::linear(-eq.c / eq.b)));
    }
    if is_zero(eq.c) {
        return Ok(Some(RootPair::pair(CScalar::new(0.0, 0.0), -eq.b / eq.a)));
    }
    Ok(None)
}

/// `x = (−b ± √(b² − 4ac)) / 2a`.
pub fn solve_classical(eq: &Quadratic) -> Result<RootPair> {
    eq.validate()?;
    if eq.is_degenerate() {
        return Err(Error::DegenerateInput);
    }
    let eq = prescaled(eq);
    let sqrt_disc = principal_sqrt(discriminant(&eq))?;
    let two_a = eq.a * 2.0;
    Ok(RootPair::pair(
        (-eq.b + sqrt_disc) / two_a,
        (-eq.b - sqrt_disc) / two_a,
    ))
}

/// `x = p ± √(p² − q)` for `x² − 2px + q = 0`.
pub fn solve_pq(nf: &NormalPQ) -> Result<RootPair> {
    let w = principal_sqrt(nf.p * nf.p - nf.q)?;
    Ok(RootPair::pair(nf.p + w, nf.p - w))
}

/// `x = −2c / (b ± √(b² − 4ac))`.
///
/// The formula stays meaningful when `a = 0`: one branch divides by zero and
/// the other yields the linear root `−c/b`, returned with
/// `is_degenerate_linear` set. When `c = 0` both numerators vanish, so the
/// roots `{0, −b/a}` are returned directly.
pub fn solve_reciprocal(eq: &Quadratic) -> Result<RootPair> {
    eq.validate()?;
    let eq = prescaled(eq);
    if let Some(roots) = degenerate_roots(&eq)? {
        return Ok(roots);
    }
    let sqrt_disc = principal_sqrt(discriminant(&eq))?;
    let numerator = eq.c * -2.0;
    Ok(RootPair::pair(
        numerator / (eq.b + sqrt_disc),
        numerator / (eq.b - sqrt_disc),
    ))
}

/// Cancellation-free hybrid of the classical and reciprocal formulas.
///
/// With `σ = ±1` chosen so that `|b + σ√(b² − 4ac)|` is maximal, the roots are
/// `q/a` and `c/q` where `q = −(b + σ√(b² − 4ac))/2`. For real `b` this is the
/// familiar `σ = sign(b)`.
pub fn solve_robust(eq: &Quadratic) -> Result<RootPair> {
    eq.validate()?;
    let eq = prescaled(eq);
    if let Some(roots) = degenerate_roots(&eq)? {
        return Ok(roots);
    }
    let sqrt_disc = principal_sqrt(discriminant(&eq))?;
    // |b ± s|² = |b|² + |s|² ± 2·Re(conj(b)·s)
    let aligned = if (eq.b.conj() * sqrt_disc).re >= 0.0 {
        eq.b + sqrt_disc
    } else {
        eq.b - sqrt_disc
    };
    let q = aligned * -0.5;
    Ok(RootPair::pair(q / eq.a, eq.c / q))
}

/// `x = (√(u+v) ± √(u−v))²` for `x² − 4ux + 4v² = 0`.
pub fn solve_alternative(nf: &NormalUV) -> Result<RootPair> {
    let s = principal_sqrt(nf.u + nf.v)?;
    let t = principal_sqrt(nf.u - nf.v)?;
    Ok(alternative_roots(s, t))
}

/// `{(s+t)², (s−t)²}` for any choice of square roots `s² = u+v`, `t² = u−v`.
///
/// The multiset does not depend on which root of `u ± v` is taken.
pub fn alternative_roots(s: CScalar, t: CScalar) -> RootPair {
    let sum = s + t;
    let diff = s - t;
    RootPair::pair(sum * sum, diff * diff)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// `c > 0`: `y² + dy + 1 = 0`, `y = tanh α`.
    Hyperbolic,
    /// `c < 0`: `y² + dy − 1 = 0`, `y = tan α`.
    Trigonometric,
}

/// Parametrization of a real quadratic with `a > 0` after the scaling
/// `x = scale·y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigHypParam {
    /// Infinite on the hyperbolic boundary `b² = 4ac`.
    pub alpha: f64,
    pub d: f64,
    /// `√(c/a)` or `√(−c/a)`.
    pub scale: f64,
    pub flavor: Flavor,
}

impl TrigHypParam {
    pub fn hyperbolic(eq: &Quadratic) -> Result<Self> {
        let (a, b, c) = real_positive_leading(eq)?;
        if c <= 0.0 {
            return Err(Error::NotApplicable("hyperbolic form needs c > 0"));
        }
        if b == 0.0 {
            return Err(Error::NotApplicable("hyperbolic form needs b != 0"));
        }
        let sqrt_ac = a.sqrt() * c.sqrt();
        // tanh 2α = −2√(ac)/b
        let tanh_2alpha = -2.0 * sqrt_ac / b;
        if tanh_2alpha.abs() > 1.0 + 4.0 * f64::EPSILON {
            return Err(Error::NotApplicable("hyperbolic form needs b^2 >= 4ac"));
        }
        let alpha = if tanh_2alpha.abs() >= 1.0 {
            f64::INFINITY.copysign(tanh_2alpha)
        } else {
            0.5 * tanh_2alpha.atanh()
        };
        Ok(TrigHypParam {
            alpha,
            d: b / sqrt_ac,
            scale: (c / a).sqrt(),
            flavor: Flavor::Hyperbolic,
        })
    }

    pub fn trigonometric(eq: &Quadratic) -> Result<Self> {
        let (a, b, c) = real_positive_leading(eq)?;
        if c >= 0.0 {
            return Err(Error::NotApplicable("trigonometric form needs c < 0"));
        }
        let sqrt_neg_ac = a.sqrt() * (-c).sqrt();
        // tan 2α = 2√(−ac)/b, α = π/4 in the limit b → 0
        let alpha = if b == 0.0 {
            std::f64::consts::FRAC_PI_4
        } else {
            0.5 * (2.0 * sqrt_neg_ac / b).atan()
        };
        Ok(TrigHypParam {
            alpha,
            d: b / sqrt_neg_ac,
            scale: (-c / a).sqrt(),
            flavor: Flavor::Trigonometric,
        })
    }

    /// Roots `(y₁, y₂)` of the normalized equation: `(tanh α, coth α)` or
    /// `(tan α, −cot α)`.
    pub fn normalized_roots(&self) -> (f64, f64) {
        match self.flavor {
            Flavor::Hyperbolic => {
                let y = self.alpha.tanh();
                (y, 1.0 / y)
            }
            Flavor::Trigonometric => {
                let y = self.alpha.tan();
                (y, -1.0 / y)
            }
        }
    }

    pub fn is_boundary(&self) -> bool {
        self.alpha.is_infinite()
    }

    fn roots(&self) -> RootPair {
        let (y1, y2) = self.normalized_roots();
        let x1 = CScalar::new(self.scale * y1, 0.0);
        if self.is_boundary() {
            RootPair::double(x1)
        } else {
            RootPair::pair(x1, CScalar::new(self.scale * y2, 0.0))
        }
    }
}

fn real_positive_leading(eq: &Quadratic) -> Result<(f64, f64, f64)> {
    eq.validate()?;
    if !eq.is_real() {
        return Err(Error::NotApplicable(
            "parametrization needs real coefficients",
        ));
    }
    if eq.a.re <= 0.0 {
        return Err(Error::NotApplicable("parametrization needs a > 0"));
    }
    Ok((eq.a.re, eq.b.re, eq.c.re))
}

/// Hyperbolic parametrization for real `a > 0`, `c > 0`, `b² ≥ 4ac`, `b ≠ 0`:
/// `x = √(c/a)·tanh α` and `√(c/a)·coth α` with `tanh 2α = −2√(ac)/b`.
///
/// On the boundary `b² = 4ac` the double root `−sign(b)·√(c/a)` is returned.
pub fn solve_hyperbolic(eq: &Quadratic) -> Result<RootPair> {
    Ok(TrigHypParam::hyperbolic(eq)?.roots())
}

/// Trigonometric parametrization for real `a > 0`, `c < 0`:
/// `x = √(−c/a)·tan α` and `−√(−c/a)·cot α` with `tan 2α = 2√(−ac)/b`.
pub fn solve_trigonometric(eq: &Quadratic) -> Result<RootPair> {
    Ok(TrigHypParam::trigonometric(eq)?.roots())
}

/// Dispatches a real quadratic to the hyperbolic (`c > 0`) or trigonometric
/// (`c < 0`) parametrization, negating all coefficients first when `a < 0`.
pub fn solve_trig_hyp(eq: &Quadratic) -> Result<RootPair> {
    eq.validate()?;
    if !eq.is_real() {
        return Err(Error::NotApplicable(
            "parametrization needs real coefficients",
        ));
    }
    let eq = if eq.a.re < 0.0 { eq.negated() } else { *eq };
    if eq.c.re > 0.0 {
        solve_hyperbolic(&eq)
    } else if eq.c.re < 0.0 {
        solve_trigonometric(&eq)
    } else {
        Err(Error::NotApplicable("parametrization needs c != 0"))
    }
}

/// Residual `|ax² + bx + c|` bound used by the solver tests:
/// `K·u·(|a||x|² + |b||x| + |c|)` with `K = 8`.
pub fn residual_bound(eq: &Quadratic, x: CScalar) -> f64 {
    8.0 * UNIT_ROUNDOFF * eq.residual_scale(x)
}
