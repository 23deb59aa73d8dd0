//! Parameter maps induced by the reflection, inversion and Pfaff identities,
//! the interval correspondences they carry, and detection of the twelve
//! quadratic-transformation templates.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeom::{hyp2f1_poly, pochhammer, Params};
use crate::scalar::Scalar;

/// The three open intervals of the real line cut at 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Interval {
    /// `(1, inf)`
    AboveOne,
    /// `(0, 1)`
    Unit,
    /// `(-inf, 0)`
    Negative,
}

impl Interval {
    pub const ALL: [Interval; 3] = [Interval::AboveOne, Interval::Unit, Interval::Negative];

    pub fn contains(self, x: f64) -> bool {
        match self {
            Interval::AboveOne => x > 1.0,
            Interval::Unit => x > 0.0 && x < 1.0,
            Interval::Negative => x < 0.0,
        }
    }

    /// Image under `w = 1 - 2/z`, the argument map of the Jacobi form.
    pub fn jacobi_argument_image(self) -> (f64, f64) {
        match self {
            Interval::Negative => (1.0, f64::INFINITY),
            Interval::Unit => (f64::NEG_INFINITY, -1.0),
            Interval::AboveOne => (-1.0, 1.0),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Interval::AboveOne => "(1,inf)",
            Interval::Unit => "(0,1)",
            Interval::Negative => "(-inf,0)",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Transform {
    /// `z -> 1 - z`
    Euler,
    /// `z -> 1/z`
    Invert,
    /// `z -> z/(z - 1)`
    Pfaff,
}

impl Transform {
    pub fn name(self) -> &'static str {
        match self {
            Transform::Euler => "euler",
            Transform::Invert => "invert",
            Transform::Pfaff => "pfaff",
        }
    }

    /// Where a real zero in `source` lands. Each map is an involution, so
    /// this also gives the preimage.
    pub fn map_interval(self, source: Interval) -> Interval {
        use Interval::*;
        match (self, source) {
            (Transform::Euler, AboveOne) => Negative,
            (Transform::Euler, Negative) => AboveOne,
            (Transform::Euler, Unit) => Unit,
            (Transform::Invert, AboveOne) => Unit,
            (Transform::Invert, Unit) => AboveOne,
            (Transform::Invert, Negative) => Negative,
            (Transform::Pfaff, Negative) => Unit,
            (Transform::Pfaff, Unit) => Negative,
            (Transform::Pfaff, AboveOne) => AboveOne,
        }
    }

    pub fn interval_map(self, source: Interval) -> IntervalMap {
        IntervalMap { source, target: self.map_interval(source), transform: self }
    }

    /// Image of a point. `None` where the map sends it to infinity.
    pub fn map_point(self, z: Complex64) -> Option<Complex64> {
        let one = Complex64::new(1.0, 0.0);
        match self {
            Transform::Euler => Some(one - z),
            Transform::Invert => (z.norm() > 0.0).then(|| one / z),
            Transform::Pfaff => (z != one).then(|| z / (z - one)),
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntervalMap {
    pub source: Interval,
    pub target: Interval,
    pub transform: Transform,
}

/// `F(-n, b; c; 1 - z) = scale * F(-n, b; 1 - n + b - c; z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Reflected {
    pub params: Params,
    pub scale: Scalar,
}

/// `F(-n, b; c; z) = coefficient * (-z)^n * F(-n, 1 - c - n; 1 - b - n; 1/z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Inverted {
    pub params: Params,
    pub coefficient: Scalar,
    pub power: u32,
}

/// `F(-n, b; c; z) = (1 - z)^n F(-n, c - b; c; z/(z - 1))`.
#[derive(Clone, Debug, PartialEq)]
pub struct Pfaffed {
    pub params: Params,
    /// Degree lost when `c - b = -m` truncates the target to degree `m`.
    /// The lost zeros sit at `z = 1` in the source.
    pub lost_degree: u32,
}

pub fn euler_reflect(p: &Params) -> Result<Reflected> {
    let n = p.n();
    let target_c = Scalar::int(1 - n as i64) + p.b() - p.c();
    if target_c.in_excluded_set(n) {
        return Err(Error::InvalidTarget(format!(
            "reflected c = 1 - n + b - c = {target_c} is in the excluded set"
        )));
    }
    let scale = pochhammer(&p.c_minus_b(), n) / pochhammer(p.c(), n);
    let params = Params::new(n, p.b().clone(), target_c)?;
    Ok(Reflected { params, scale })
}

pub fn invert(p: &Params) -> Result<Inverted> {
    let n = p.n() as i64;
    let target_b = Scalar::int(1 - n) - p.c();
    let target_c = Scalar::int(1 - n) - p.b();
    if target_c.in_excluded_set(p.n()) {
        return Err(Error::InvalidTarget(format!(
            "inverted c = 1 - b - n = {target_c} is in the excluded set"
        )));
    }
    let coefficient = pochhammer(p.b(), p.n()) / pochhammer(p.c(), p.n());
    let params = Params::new(p.n(), target_b, target_c)?;
    Ok(Inverted { params, coefficient, power: p.n() })
}

pub fn pfaff(p: &Params) -> Pfaffed {
    let cmb = p.c_minus_b();
    let lost_degree = if cmb.in_excluded_set(p.n()) {
        p.n() - (-cmb.as_integer().unwrap_or(0)) as u32
    } else {
        0
    };
    let params = Params::new(p.n(), cmb, p.c().clone()).expect("c is unchanged and already valid");
    Pfaffed { params, lost_degree }
}

/// Left- and right-hand sides of a transformation identity at `z`.
pub fn identity_sides(which: Transform, p: &Params, z: Complex64) -> Result<(Complex64, Complex64)> {
    let one = Complex64::new(1.0, 0.0);
    let n = p.n();
    Ok(match which {
        Transform::Euler => {
            let r = euler_reflect(p)?;
            (hyp2f1_poly(p, one - z), hyp2f1_poly(&r.params, z) * r.scale.to_f64())
        }
        Transform::Invert => {
            let r = invert(p)?;
            let rhs = (-z).powu(r.power) * r.coefficient.to_f64() * hyp2f1_poly(&r.params, one / z);
            (hyp2f1_poly(p, z), rhs)
        }
        Transform::Pfaff => {
            let r = pfaff(p);
            let rhs = (one - z).powu(n) * hyp2f1_poly(&r.params, z / (z - one));
            (hyp2f1_poly(p, z), rhs)
        }
    })
}

/// The twelve parameter constraints admitting a quadratic transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuadraticTemplate {
    /// `c = 2b`
    DoubleB,
    /// `c = -n - b + 1`
    OneMinusNMinusB,
    /// `c = (-n + b + 1)/2`
    HalfOneMinusNPlusB,
    /// `c = 1/2`
    CHalf,
    /// `b = -n + 1/2`
    BMinusNPlusHalf,
    /// `c = -n + b + 1/2`
    BMinusNPlusHalfC,
    /// `c = 3/2`
    CThreeHalves,
    /// `b = -n - 1/2`
    BMinusNMinusHalf,
    /// `c = -n + b - 1/2`
    BMinusNMinusHalfC,
    /// `c = -2n`
    CMinusTwoN,
    /// `c = b + n + 1`
    BPlusNPlusOne,
    /// `b = n + 1`
    BNPlusOne,
}

impl QuadraticTemplate {
    pub const ALL: [QuadraticTemplate; 12] = [
        QuadraticTemplate::DoubleB,
        QuadraticTemplate::OneMinusNMinusB,
        QuadraticTemplate::HalfOneMinusNPlusB,
        QuadraticTemplate::CHalf,
        QuadraticTemplate::BMinusNPlusHalf,
        QuadraticTemplate::BMinusNPlusHalfC,
        QuadraticTemplate::CThreeHalves,
        QuadraticTemplate::BMinusNMinusHalf,
        QuadraticTemplate::BMinusNMinusHalfC,
        QuadraticTemplate::CMinusTwoN,
        QuadraticTemplate::BPlusNPlusOne,
        QuadraticTemplate::BNPlusOne,
    ];

    pub fn tag(self) -> &'static str {
        use QuadraticTemplate::*;
        match self {
            DoubleB => "c=2b",
            OneMinusNMinusB => "c=-n-b+1",
            HalfOneMinusNPlusB => "c=(-n+b+1)/2",
            CHalf => "c=1/2",
            BMinusNPlusHalf => "b=-n+1/2",
            BMinusNPlusHalfC => "c=-n+b+1/2",
            CThreeHalves => "c=3/2",
            BMinusNMinusHalf => "b=-n-1/2",
            BMinusNMinusHalfC => "c=-n+b-1/2",
            CMinusTwoN => "c=-2n",
            BPlusNPlusOne => "c=b+n+1",
            BNPlusOne => "b=n+1",
        }
    }

    /// `lhs - rhs` of the defining constraint.
    fn residual(self, p: &Params) -> Scalar {
        use QuadraticTemplate::*;
        let n = p.n() as i64;
        let (b, c) = (p.b(), p.c());
        let half = Scalar::ratio(1, 2);
        match self {
            DoubleB => c - &(b * 2),
            OneMinusNMinusB => c - &(Scalar::int(1 - n) - b),
            HalfOneMinusNPlusB => c - &((b + (1 - n)) * &half),
            CHalf => c - &half,
            BMinusNPlusHalf => b - &(Scalar::int(-n) + &half),
            BMinusNPlusHalfC => c - &((b - n) + &half),
            CThreeHalves => c - &Scalar::ratio(3, 2),
            BMinusNMinusHalf => b - &(Scalar::int(-n) - &half),
            BMinusNMinusHalfC => c - &((b - n) - &half),
            CMinusTwoN => c - &Scalar::int(-2 * n),
            BPlusNPlusOne => c - &(b + (n + 1)),
            BNPlusOne => b - &Scalar::int(n + 1),
        }
    }

    pub fn matches(self, p: &Params, tol: f64) -> bool {
        match self.residual(p) {
            Scalar::Exact(r) => num_traits::Zero::is_zero(&r),
            Scalar::Float(x) => x.abs() <= tol,
        }
    }
}

impl fmt::Display for QuadraticTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Every template the parameters satisfy; templates overlap, so this can
/// return more than one.
pub fn quadratic_class_match(p: &Params, tol: f64) -> Vec<QuadraticTemplate> {
    QuadraticTemplate::ALL.into_iter().filter(|t| t.matches(p, tol)).collect()
}
