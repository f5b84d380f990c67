//! Muller's method: interpolate the last three iterates by a parabola and
//! step to its nearer root.
//!
//! The parabola `A·h² + B·h + C` in `h = x − x_curr` is solved with the
//! reciprocal formula `h = −2C / (B ± √(B² − 4AC))`, which stays finite when
//! the parabola degenerates to a line (`A = 0`). The sign is chosen to
//! maximize the denominator, i.e. to take the smaller step.

use crate::error::{Error, Result};
use crate::scalar::{is_finite, is_zero, principal_sqrt, CScalar};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MullerState {
    pub x_prev2: CScalar,
    pub x_prev1: CScalar,
    pub x_curr: CScalar,
    pub f_prev2: CScalar,
    pub f_prev1: CScalar,
    pub f_curr: CScalar,
    pub iteration: usize,
}

impl MullerState {
    pub fn new<F>(f: &F, x0: CScalar, x1: CScalar, x2: CScalar) -> Result<Self>
    where
        F: Fn(CScalar) -> CScalar,
    {
        let state = MullerState {
            x_prev2: x0,
            x_prev1: x1,
            x_curr: x2,
            f_prev2: f(x0),
            f_prev1: f(x1),
            f_curr: f(x2),
            iteration: 0,
        };
        state.check()?;
        Ok(state)
    }

    fn check(&self) -> Result<()> {
        let xs = [self.x_prev2, self.x_prev1, self.x_curr];
        let fs = [self.f_prev2, self.f_prev1, self.f_curr];
        if !xs.iter().chain(&fs).all(|&z| is_finite(z)) {
            return Err(Error::Domain("non-finite abscissa or function value"));
        }
        let coincide =
            |p: CScalar, q: CScalar| (p - q).norm() <= f64::EPSILON * p.norm().max(q.norm());
        if coincide(xs[0], xs[1]) || coincide(xs[1], xs[2]) || coincide(xs[0], xs[2]) {
            return Err(Error::Stagnation);
        }
        Ok(())
    }

    /// Coefficients `(A, B, C)` of the interpolating parabola in `x − x_curr`,
    /// from Newton divided differences.
    pub fn parabola(&self) -> (CScalar, CScalar, CScalar) {
        let h1 = self.x_prev1 - self.x_prev2;
        let h2 = self.x_curr - self.x_prev1;
        let d1 = (self.f_prev1 - self.f_prev2) / h1;
        let d2 = (self.f_curr - self.f_prev1) / h2;
        let a = (d2 - d1) / (h2 + h1);
        let b = a * h2 + d2;
        (a, b, self.f_curr)
    }
}

/// One parabola root increment with both candidate denominators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParabolaStep {
    pub increment: CScalar,
    /// `B ± √(B² − 4AC)` with the larger magnitude.
    pub denominator: CScalar,
    pub rejected_denominator: CScalar,
}

/// Increment `h = −2C / (B ± √(B² − 4AC))` toward the nearer root of
/// `A·h² + B·h + C`.
pub fn parabola_increment(a: CScalar, b: CScalar, c: CScalar) -> Result<ParabolaStep> {
    let sqrt_disc = principal_sqrt(b * b - a * c * 4.0)?;
    let plus = b + sqrt_disc;
    let minus = b - sqrt_disc;
    let (denominator, rejected_denominator) = if plus.norm() >= minus.norm() {
        (plus, minus)
    } else {
        (minus, plus)
    };
    if is_zero(denominator) {
        return Err(Error::Breakdown);
    }
    Ok(ParabolaStep {
        increment: c * -2.0 / denominator,
        denominator,
        rejected_denominator,
    })
}

/// Advances the window by one Muller step, dropping the oldest point.
pub fn muller_step<F>(state: &MullerState, f: &F) -> Result<MullerState>
where
    F: Fn(CScalar) -> CScalar,
{
    state.check()?;
    let (a, b, c) = state.parabola();
    let step = parabola_increment(a, b, c)?;
    let x_next = state.x_curr + step.increment;
    let next = MullerState {
        x_prev2: state.x_prev1,
        x_prev1: state.x_curr,
        x_curr: x_next,
        f_prev2: state.f_prev1,
        f_prev1: state.f_curr,
        f_curr: f(x_next),
        iteration: state.iteration + 1,
    };
    if !is_finite(next.x_curr) || !is_finite(next.f_curr) {
        return Err(Error::Domain("non-finite abscissa or function value"));
    }
    Ok(next)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MullerOptions {
    pub residual_tol: f64,
    /// Relative to `max(1, |x|)`.
    pub step_tol: f64,
    pub max_iter: usize,
}

impl Default for MullerOptions {
    fn default() -> Self {
        MullerOptions {
            residual_tol: 1e-12,
            step_tol: 1e-14,
            max_iter: 100,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MullerResult {
    pub root: CScalar,
    /// `f(root)`.
    pub residual: CScalar,
    pub iterations: usize,
    pub converged: bool,
    /// Size of the final step, infinite if no step was taken.
    pub last_step: f64,
}

/// Iterates from `(x0, x1, x2)` until `|f(x)| ≤ residual_tol`, the step drops
/// below `step_tol·max(1, |x|)`, or `max_iter` steps have been taken.
///
/// Running out of iterations is reported through `converged = false`, not as
/// an error.
pub fn muller_solve<F>(
    f: F,
    x0: CScalar,
    x1: CScalar,
    x2: CScalar,
    options: &MullerOptions,
) -> Result<MullerResult>
where
    F: Fn(CScalar) -> CScalar,
{
    if options.max_iter == 0 {
        return Err(Error::InvalidParameter("max_iter must be at least 1"));
    }
    let mut state = MullerState::new(&f, x0, x1, x2)?;
    let mut last_step = f64::INFINITY;
    let converged = loop {
        if state.f_curr.norm() <= options.residual_tol {
            break true;
        }
        if state.iteration >= options.max_iter {
            break false;
        }
        let next = muller_step(&state, &f)?;
        last_step = (next.x_curr - state.x_curr).norm();
        state = next;
        if last_step <= options.step_tol * 1f64.max(state.x_curr.norm()) {
            break true;
        }
    };
    Ok(MullerResult {
        root: state.x_curr,
        residual: state.f_curr,
        iterations: state.iteration,
        converged,
        last_step,
    })
}
