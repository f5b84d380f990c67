//! Extended-precision ground truth for the accuracy benchmark.
//!
//! The cancellation-free algorithm of [`solve_robust`](crate::solve_robust) run
//! in binary floating point of the requested precision and rounded back to
//! `f64` at the end.

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;

use crate::error::{Error, Result};
use crate::normal_forms::{Quadratic, RootPair};
use crate::scalar::CScalar;

pub const ORACLE_PRECISION_BITS: usize = 256;

/// Smallest accepted precision: twice the 53-bit `f64` significand.
pub const MIN_PRECISION_BITS: usize = 106;

type Big = FBig<HalfEven>;

#[derive(Clone, Debug)]
struct BigComplex {
    re: Big,
    im: Big,
}

fn big(x: f64, precision: usize) -> Big {
    // finite f64 values convert exactly
    Big::try_from(x)
        .expect("finite coefficient")
        .with_precision(precision)
        .value()
}

impl BigComplex {
    fn from_scalar(z: CScalar, precision: usize) -> Self {
        BigComplex {
            re: big(z.re, precision),
            im: big(z.im, precision),
        }
    }

    fn to_scalar(&self) -> CScalar {
        CScalar::new(self.re.to_f64().value(), self.im.to_f64().value())
    }

    fn is_zero(&self) -> bool {
        self.re == Big::ZERO && self.im == Big::ZERO
    }

    fn add(&self, other: &Self) -> Self {
        BigComplex {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    fn sub(&self, other: &Self) -> Self {
        BigComplex {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    fn neg(&self) -> Self {
        BigComplex {
            re: -&self.re,
            im: -&self.im,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        BigComplex {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    fn scale(&self, factor: i32) -> Self {
        let factor = Big::from(factor);
        BigComplex {
            re: &self.re * &factor,
            im: &self.im * &factor,
        }
    }

    fn halve(&self) -> Self {
        let two = Big::from(2);
        BigComplex {
            re: &self.re / &two,
            im: &self.im / &two,
        }
    }

    /// Caller guarantees `other ≠ 0`.
    fn div(&self, other: &Self) -> Self {
        let denom = &other.re * &other.re + &other.im * &other.im;
        BigComplex {
            re: (&self.re * &other.re + &self.im * &other.im) / &denom,
            im: (&self.im * &other.re - &self.re * &other.im) / &denom,
        }
    }

    /// Principal branch, same convention as [`principal_sqrt`](crate::principal_sqrt).
    fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let two = Big::from(2);
        let modulus = (&self.re * &self.re + &self.im * &self.im).sqrt();
        if self.re >= Big::ZERO {
            let t = ((&modulus + &self.re) / &two).sqrt();
            let im = &self.im / (&t * &two);
            BigComplex { re: t, im }
        } else {
            let t = ((&modulus - &self.re) / &two).sqrt();
            let abs_im = if self.im < Big::ZERO {
                -&self.im
            } else {
                self.im.clone()
            };
            let re = abs_im / (&t * &two);
            let im = if self.im < Big::ZERO { -t } else { t };
            BigComplex { re, im }
        }
    }
}

/// Roots of `eq` computed at `precision_bits` and rounded to `f64`.
pub fn oracle_solve(eq: &Quadratic, precision_bits: usize) -> Result<RootPair> {
    if precision_bits < MIN_PRECISION_BITS {
        return Err(Error::InvalidParameter(
            "oracle precision must be at least 106 bits",
        ));
    }
    eq.validate()?;
    let a = BigComplex::from_scalar(eq.a, precision_bits);
    let b = BigComplex::from_scalar(eq.b, precision_bits);
    let c = BigComplex::from_scalar(eq.c, precision_bits);

    if a.is_zero() {
        if b.is_zero() {
            return Err(Error::NoRoot);
        }
        return Ok(RootPair::linear(c.neg().div(&b).to_scalar()));
    }
    if c.is_zero() {
        return Ok(RootPair::pair(
            CScalar::new(0.0, 0.0),
            b.neg().div(&a).to_scalar(),
        ));
    }

    let disc = b.mul(&b).sub(&a.mul(&c).scale(4));
    let sqrt_disc = disc.sqrt();
    let alignment = &b.re * &sqrt_disc.re + &b.im * &sqrt_disc.im;
    let aligned = if alignment >= Big::ZERO {
        b.add(&sqrt_disc)
    } else {
        b.sub(&sqrt_disc)
    };
    let q = aligned.halve().neg();
    let x1 = q.div(&a).to_scalar();
    if disc.is_zero() {
        return Ok(RootPair::double(x1));
    }
    Ok(RootPair::pair(x1, c.div(&q).to_scalar()))
}
