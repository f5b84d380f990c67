//! Depth of a well from the time between dropping a stone and hearing it land.
//!
//! With fall time `t₁ = √(2x/g)` and sound travel time `t₂ = x/c`, squaring
//! `t₁ = t − t₂` gives `x² − 2x·c(c + gt)/g + t²c² = 0`. In the form
//! `x² − 4ux + 4v² = 0` this is `u = c(c + gt)/(2g)`, `v = tc/2`, so the
//! symmetric formula collapses to
//!
//! ```text
//! x₁ = c²/(2g) · (√(1 + 2gt/c) − 1)²
//! ```
//!
//! `c²/(2g)` is the distance a stone falls before reaching the speed of sound
//! (after `τ = c/g`). Air resistance is neglected.
//!
//! The second root `x₂ = c²/(2g)·(√(1 + 2gt/c) + 1)²` solves the squared
//! equation with `t₁ = −√(2x/g)`, so it is not a depth for the stated
//! problem. It is reported without further interpretation.

use crate::error::{Error, Result};
use crate::normal_forms::Quadratic;
use crate::scalar::CScalar;

pub const DEFAULT_SOUND_SPEED: f64 = 343.0;
pub const DEFAULT_GRAVITY: f64 = 9.81;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellParams {
    /// Seconds until the sound is heard.
    pub t: f64,
    /// Speed of sound, m/s.
    pub c_sound: f64,
    /// Gravitational acceleration, m/s².
    pub g: f64,
}

impl WellParams {
    pub fn new(t: f64, c_sound: f64, g: f64) -> Result<Self> {
        let params = WellParams { t, c_sound, g };
        params.validate()?;
        Ok(params)
    }

    /// Defaults `c = 343 m/s`, `g = 9.81 m/s²`.
    pub fn with_defaults(t: f64) -> Result<Self> {
        Self::new(t, DEFAULT_SOUND_SPEED, DEFAULT_GRAVITY)
    }

    fn validate(&self) -> Result<()> {
        if !(self.t.is_finite() && self.t >= 0.0) {
            return Err(Error::InvalidParameter("t must be finite and nonnegative"));
        }
        if !(self.c_sound.is_finite() && self.c_sound > 0.0) {
            return Err(Error::InvalidParameter("speed of sound must be positive"));
        }
        if !(self.g.is_finite() && self.g > 0.0) {
            return Err(Error::InvalidParameter("g must be positive"));
        }
        Ok(())
    }

    /// `τ = c/g`, the time for a falling body to reach the speed of sound.
    pub fn tau(&self) -> f64 {
        self.c_sound / self.g
    }

    /// `c²/(2g)`, the distance fallen during `τ`.
    pub fn char_length(&self) -> f64 {
        self.c_sound * self.c_sound / (2.0 * self.g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellSolution {
    pub depth: f64,
    pub other_root: f64,
    pub fall_time: f64,
    pub sound_time: f64,
    pub tau: f64,
    pub char_length: f64,
}

/// Coefficients of `x² − 2x·c(c + gt)/g + t²c² = 0`.
pub fn well_quadratic(params: &WellParams) -> Result<Quadratic> {
    params.validate()?;
    let WellParams { t, c_sound: c, g } = *params;
    Ok(Quadratic {
        a: CScalar::new(1.0, 0.0),
        b: CScalar::new(-2.0 * c * (c + g * t) / g, 0.0),
        c: CScalar::new(t * t * c * c, 0.0),
    })
}

/// `(√(1 + h) − 1, √(1 + h) + 1)` with `h = 2gt/c`; the difference is formed
/// as `h / (√(1 + h) + 1)`.
fn brackets(params: &WellParams) -> (f64, f64) {
    let h = 2.0 * params.g * params.t / params.c_sound;
    let plus = (1.0 + h).sqrt() + 1.0;
    (h / plus, plus)
}

pub fn well_depth(params: &WellParams) -> Result<WellSolution> {
    params.validate()?;
    let (minus, plus) = brackets(params);
    let char_length = params.char_length();
    let depth = char_length * minus * minus;
    Ok(WellSolution {
        depth,
        other_root: char_length * plus * plus,
        fall_time: (2.0 * depth / params.g).sqrt(),
        sound_time: depth / params.c_sound,
        tau: params.tau(),
        char_length,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOrder {
    /// `gt²/2`: infinitely fast sound.
    Second,
    /// `gt²/2 − g²t³/(2c)`: first correction in `1/c`.
    Third,
}

impl TryFrom<u32> for SeriesOrder {
    type Error = Error;

    fn try_from(order: u32) -> Result<Self> {
        match order {
            2 => Ok(SeriesOrder::Second),
            3 => Ok(SeriesOrder::Third),
            _ => Err(Error::InvalidParameter("series order must be 2 or 3")),
        }
    }
}

/// Truncated expansion of the depth around `t = 0`; the remainder is `O(t⁴)`.
pub fn well_series(params: &WellParams, order: SeriesOrder) -> Result<f64> {
    params.validate()?;
    let WellParams { t, c_sound: c, g } = *params;
    let free_fall = g * t * t / 2.0;
    Ok(match order {
        SeriesOrder::Second => free_fall,
        SeriesOrder::Third => free_fall - g * g * t * t * t / (2.0 * c),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_coefficients() {
        let eq = well_quadratic(&WellParams::new(0.0, 343.0, 9.81).unwrap()).unwrap();
        assert_eq!(eq.b.re, -2.0 * 343.0 * 343.0 / 9.81);
        assert_eq!(eq.c.re, 0.0);

        let eq = well_quadratic(&WellParams::new(2.0, 343.0, 9.81).unwrap()).unwrap();
        assert!((eq.b.re - (-2.0 * 343.0 * (343.0 + 19.62) / 9.81)).abs() < 1e-9);
        assert_eq!(eq.c.re, 4.0 * 343.0 * 343.0);

        let eq = well_quadratic(&WellParams::new(1.0, 1.0, 2.0).unwrap()).unwrap();
        assert_eq!((eq.a.re, eq.b.re, eq.c.re), (1.0, -3.0, 1.0));
    }

    #[test]
    fn zero_time_zero_depth() {
        let solution = well_depth(&WellParams::with_defaults(0.0).unwrap()).unwrap();
        assert_eq!(solution.depth, 0.0);
        assert_eq!(solution.fall_time + solution.sound_time, 0.0);
    }

    #[test]
    fn unit_parameters() {
        // x² − 3x + 1 = 0; 2gt/c = 4, so depth = ¼(√5 − 1)² = (3 − √5)/2
        let params = WellParams::new(1.0, 1.0, 2.0).unwrap();
        let solution = well_depth(&params).unwrap();
        let expected = 0.25 * (5f64.sqrt() - 1.0).powi(2);
        assert!((expected - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!((solution.depth - expected).abs() < 1e-15);
        let eq = well_quadratic(&params).unwrap();
        for x in [solution.depth, solution.other_root] {
            assert!(eq.eval(x.into()).norm() < 1e-14);
        }
        assert!((solution.depth * solution.other_root - 1.0).abs() < 1e-14);
    }

    #[test]
    fn derived_quantities() {
        let params = WellParams::new(2.0, 343.0, 9.81).unwrap();
        let solution = well_depth(&params).unwrap();
        assert_eq!(solution.tau, 343.0 / 9.81);
        assert!((solution.char_length - 343.0 * solution.tau / 2.0).abs() < 1e-9);
        assert!(((solution.fall_time + solution.sound_time) - 2.0).abs() < 1e-14);
        assert!(solution.depth <= solution.other_root);
    }

    #[test]
    fn series_values() {
        let params = WellParams::new(2.0, 1e12, 9.81).unwrap();
        assert_eq!(well_series(&params, SeriesOrder::Second).unwrap(), 19.62);
        let params = WellParams::new(0.0, 343.0, 9.81).unwrap();
        assert_eq!(well_series(&params, SeriesOrder::Third).unwrap(), 0.0);
        let params = WellParams::new(1.0, 343.0, 9.81).unwrap();
        let expected = 4.905 - 9.81 * 9.81 / (2.0 * 343.0);
        assert!((well_series(&params, SeriesOrder::Third).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn invalid_parameters() {
        assert!(WellParams::new(-1.0, 343.0, 9.81).is_err());
        assert!(WellParams::new(1.0, 0.0, 9.81).is_err());
        assert!(WellParams::new(1.0, 343.0, -9.81).is_err());
        assert!(SeriesOrder::try_from(4).is_err());
        let bogus = WellParams {
            t: -1.0,
            c_sound: 343.0,
            g: 9.81,
        };
        assert!(well_depth(&bogus).is_err());
    }
}
