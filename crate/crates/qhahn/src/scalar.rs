//! Scalar backends: exact rationals and complex doubles behind one interface.
//!
//! Everything upstream of root finding is written against [`Scalar`] so the
//! same formulas run either exactly (identities, residue calculus) or in
//! floating point (Bethe roots, spectra). The exact backend is
//! [`Rat`] = `num::BigRational`; the floating backend is `num::Complex<f64>`.

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::traits::{One, Pow, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Complex double-precision scalar.
pub type C64 = Complex64;

/// Field operations needed by the q-series, normal-ordering and residue code.
///
/// Implementations must be closed under `+ - * /` (nonzero divisor); the
/// exact backend never rounds, the floating backend compares through
/// [`Scalar::approx`] with an explicit tolerance.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True for backends with exact arithmetic.
    const EXACT: bool;

    fn from_int(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    /// Integer power; negative exponents require a nonzero base.
    fn powi(&self, e: i32) -> Self;

    /// Multiplicative inverse; base must be nonzero.
    fn recip(&self) -> Self {
        Self::one().div(self.clone())
    }

    /// Magnitude as a double, used for pole geometry and tolerances.
    fn magnitude(&self) -> f64;

    /// Lossy view as a complex double.
    fn to_c64(&self) -> C64;

    /// Equality up to `tol` in magnitude (exact backends ignore `tol` only in
    /// the sense that exact equality implies it).
    fn approx(&self, other: &Self, tol: f64) -> bool {
        (self.clone() - other.clone()).magnitude() <= tol
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn powi(&self, e: i32) -> Self {
        if e == 0 {
            return Self::one();
        }
        if e < 0 {
            assert!(!self.is_zero(), "negative power of exact zero");
        }
        Pow::pow(self, e)
    }

    fn magnitude(&self) -> f64 {
        self.to_f64().map(f64::abs).unwrap_or(f64::INFINITY)
    }

    fn to_c64(&self) -> C64 {
        C64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn approx(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

impl Scalar for C64 {
    const EXACT: bool = false;

    fn from_int(n: i64) -> Self {
        C64::new(n as f64, 0.0)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        C64::new(num as f64 / den as f64, 0.0)
    }

    fn powi(&self, e: i32) -> Self {
        self.powi(e)
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn to_c64(&self) -> C64 {
        *self
    }
}

/// Parse "a/b" or a plain decimal string into an exact rational.
///
/// Decimals are read digit-exactly: "0.125" becomes 1/8, not the nearest
/// double.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits = format!("{}{}", int_part, frac_part);
    let value: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
    Some(BigRational::new(value * BigInt::from(sign), scale))
}

/// Render an exact rational as a decimal string with `digits` places after
/// the point, rounding half away from zero. Exact long division, no f64.
pub fn rat_to_decimal(x: &Rat, digits: usize) -> String {
    let negative = x < &Rat::zero();
    let abs = if negative { -x.clone() } else { x.clone() };
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = abs * BigRational::from_integer(scale.clone());
    // round half away from zero
    let twice = scaled.numer() * BigInt::from(2) + scaled.denom();
    let rounded: BigInt = twice / (scaled.denom() * BigInt::from(2));
    let int_part = &rounded / &scale;
    let frac_part = &rounded % &scale;
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{}{}", sign, int_part)
    } else {
        format!("{}{}.{:0>width$}", sign, int_part, frac_part.to_string(), width = digits)
    }
}
