//! Real scalars that are either exact rationals or doubles.
//!
//! Arithmetic between two exact values stays exact; anything touching a
//! float is carried out in floating point. Integrality tests on floats use
//! [`INTEGER_TOL`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Distance from an integer below which a float is treated as that integer.
pub const INTEGER_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn int(v: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn float(v: f64) -> Self {
        Scalar::Float(v)
    }

    pub fn zero() -> Self {
        Scalar::int(0)
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Float(_) => Mode::Float,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => rational_to_f64(r),
            Scalar::Float(x) => *x,
        }
    }

    /// Converts to the requested arithmetic mode. Floats cannot be promoted
    /// to exact and are returned unchanged.
    pub fn in_mode(&self, mode: Mode) -> Scalar {
        match (self, mode) {
            (Scalar::Exact(_), Mode::Float) => Scalar::Float(self.to_f64()),
            _ => self.clone(),
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(x) => Scalar::Float(x.abs()),
        }
    }

    /// Sign of the value; floats within [`INTEGER_TOL`] of zero count as zero.
    pub fn signum(&self) -> i8 {
        match self {
            Scalar::Exact(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Float(x) => {
                if x.abs() < INTEGER_TOL {
                    0
                } else if *x > 0.0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == 0
    }

    /// The integer this value equals: exactly for rationals, within
    /// [`INTEGER_TOL`] for floats.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Scalar::Exact(r) => {
                if r.is_integer() {
                    r.to_integer().to_i64()
                } else {
                    None
                }
            }
            Scalar::Float(x) => {
                let k = x.round();
                if (x - k).abs() < INTEGER_TOL && k.abs() < 9.0e15 {
                    Some(k as i64)
                } else {
                    None
                }
            }
        }
    }

    pub fn is_integer(&self) -> bool {
        self.as_integer().is_some()
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> i64 {
        if let Some(k) = self.as_integer() {
            return k;
        }
        match self {
            Scalar::Exact(r) => r.floor().to_integer().to_i64().unwrap_or(i64::MAX),
            Scalar::Float(x) => x.floor() as i64,
        }
    }

    /// True when the value lies in `{0, -1, ..., -(n-1)}`.
    pub fn in_excluded_set(&self, n: u32) -> bool {
        matches!(self.as_integer(), Some(k) if k <= 0 && k > -(n as i64))
    }

    /// Strict comparison that reports `None` when the two values coincide
    /// (exactly, or within [`INTEGER_TOL`] in float mode).
    pub fn strict_cmp(&self, other: &Scalar) -> Option<Ordering> {
        match (self - other).signum() {
            0 => None,
            1 => Some(Ordering::Greater),
            _ => Some(Ordering::Less),
        }
    }

    pub fn gt(&self, other: &Scalar) -> bool {
        self.strict_cmp(other) == Some(Ordering::Greater)
    }

    pub fn lt(&self, other: &Scalar) -> bool {
        self.strict_cmp(other) == Some(Ordering::Less)
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    match r.to_f64() {
        Some(v) if v.is_finite() => v,
        _ => {
            // Numerator or denominator overflowed a double.
            let shift = r.numer().bits().max(r.denom().bits()) as i64 - 1000;
            if shift <= 0 {
                return f64::NAN;
            }
            let n = (r.numer() >> shift as usize).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift as usize).to_f64().unwrap_or(0.0);
            n / d
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl From<f64> for Scalar {
    fn from(v: f64) -> Self {
        Scalar::Float(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::Exact(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Float(x) => {
                if x.fract() == 0.0 && x.abs() < 1e15 {
                    write!(f, "{x:.1}")
                } else {
                    write!(f, "{x}")
                }
            }
        }
    }
}

/// `"p/q"` and plain integers parse exactly; anything else is read as a
/// double.
impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || Error::Parse(s.to_string());
        if let Some((num, den)) = t.split_once('/') {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            return Ok(Scalar::Exact(BigRational::new(num, den)));
        }
        if let Ok(i) = t.parse::<BigInt>() {
            return Ok(Scalar::Exact(BigRational::from_integer(i)));
        }
        let x: f64 = t.parse().map_err(|_| bad())?;
        if !x.is_finite() {
            return Err(bad());
        }
        Ok(Scalar::Float(x))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    _ => Scalar::Float(self.to_f64() $op rhs.to_f64()),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                &self $op &rhs
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                &self $op rhs
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self $op &rhs
            }
        }
        impl $trait<i64> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: i64) -> Scalar {
                self $op &Scalar::int(rhs)
            }
        }
        impl $trait<i64> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: i64) -> Scalar {
                &self $op &Scalar::int(rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                assert!(!b.is_zero(), "exact division by zero");
                Scalar::Exact(a / b)
            }
            _ => Scalar::Float(self.to_f64() / rhs.to_f64()),
        }
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Div<&Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        &self / rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(x) => Scalar::Float(-x),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::int(1)
    }
}
