//! The terminating series `F(-n, b; c; z)` and its coefficient polynomial.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Mode, Scalar};

/// The parameter triple `(n, b, c)` of `F(-n, b; c; z)`.
///
/// Both `b` and `c` share one arithmetic mode: if either is a float the
/// other is converted on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    n: u32,
    b: Scalar,
    c: Scalar,
}

impl Params {
    pub fn new(n: u32, b: Scalar, c: Scalar) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("degree n must be at least 1".into()));
        }
        let mode = if b.is_exact() && c.is_exact() { Mode::Exact } else { Mode::Float };
        let (b, c) = (b.in_mode(mode), c.in_mode(mode));
        for (name, v) in [("b", &b), ("c", &c)] {
            if !v.to_f64().is_finite() {
                return Err(Error::InvalidParameter(format!("{name} = {v} is not finite")));
            }
        }
        if c.in_excluded_set(n) {
            return Err(Error::InvalidParameter(format!(
                "F(-{n}, b; c; z) is undefined for c = {c} (c in {{0, -1, ..., {}}})",
                1 - n as i64
            )));
        }
        Ok(Params { n, b, c })
    }

    pub fn exact(n: u32, b: BigRational, c: BigRational) -> Result<Self> {
        Params::new(n, Scalar::Exact(b), Scalar::Exact(c))
    }

    pub fn float(n: u32, b: f64, c: f64) -> Result<Self> {
        Params::new(n, Scalar::Float(b), Scalar::Float(c))
    }

    /// Parses `b` and `c` with [`Scalar`]'s rules (`"p/q"` and integers exact).
    pub fn parse(n: u32, b: &str, c: &str) -> Result<Self> {
        Params::new(n, b.parse()?, c.parse()?)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn mode(&self) -> Mode {
        self.b.mode()
    }

    /// `c - b`, which shows up in every count formula.
    pub fn c_minus_b(&self) -> Scalar {
        &self.c - &self.b
    }

    /// `m` when `b = -m` for an integer `0 <= m < n`, i.e. the series
    /// truncates early.
    pub fn degenerate_degree(&self) -> Option<u32> {
        if self.b.in_excluded_set(self.n) {
            self.b.as_integer().map(|k| (-k) as u32)
        } else {
            None
        }
    }

    pub fn to_float(&self) -> Params {
        Params {
            n: self.n,
            b: self.b.in_mode(Mode::Float),
            c: self.c.in_mode(Mode::Float),
        }
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F(-{}, {}; {}; z)", self.n, self.b, self.c)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Coefficients {
    Exact(Vec<BigRational>),
    Float(Vec<f64>),
}

/// Dense polynomial, coefficients in ascending degree order.
///
/// The stored length is `n + 1` for polynomials built from [`Params`], even
/// when the top coefficients vanish; [`Poly::effective_degree`] reports the
/// true degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    coeffs: Coefficients,
}

impl Poly {
    pub fn from_exact(coeffs: Vec<BigRational>) -> Self {
        Poly { coeffs: Coefficients::Exact(coeffs) }
    }

    pub fn from_f64(coeffs: Vec<f64>) -> Self {
        Poly { coeffs: Coefficients::Float(coeffs) }
    }

    pub fn from_scalars(coeffs: Vec<Scalar>) -> Self {
        if coeffs.iter().all(Scalar::is_exact) {
            Poly::from_exact(
                coeffs
                    .into_iter()
                    .map(|s| match s {
                        Scalar::Exact(r) => r,
                        Scalar::Float(_) => unreachable!(),
                    })
                    .collect(),
            )
        } else {
            Poly::from_f64(coeffs.iter().map(Scalar::to_f64).collect())
        }
    }

    pub fn coefficients(&self) -> &Coefficients {
        &self.coeffs
    }

    pub fn mode(&self) -> Mode {
        match self.coeffs {
            Coefficients::Exact(_) => Mode::Exact,
            Coefficients::Float(_) => Mode::Float,
        }
    }

    pub fn as_exact(&self) -> Option<&[BigRational]> {
        match &self.coeffs {
            Coefficients::Exact(c) => Some(c),
            Coefficients::Float(_) => None,
        }
    }

    pub fn len(&self) -> usize {
        match &self.coeffs {
            Coefficients::Exact(c) => c.len(),
            Coefficients::Float(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        match &self.coeffs {
            Coefficients::Exact(c) => Scalar::Exact(c[k].clone()),
            Coefficients::Float(c) => Scalar::Float(c[k]),
        }
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        match &self.coeffs {
            Coefficients::Exact(c) => c.iter().map(|r| Scalar::Exact(r.clone()).to_f64()).collect(),
            Coefficients::Float(c) => c.clone(),
        }
    }

    /// Largest index with a nonzero coefficient (0 for the zero polynomial).
    pub fn effective_degree(&self) -> usize {
        match &self.coeffs {
            Coefficients::Exact(c) => c.iter().rposition(|x| !x.is_zero()).unwrap_or(0),
            Coefficients::Float(c) => c.iter().rposition(|x| *x != 0.0).unwrap_or(0),
        }
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        horner(&self.to_f64_vec(), z)
    }

    /// `sum |a_k| |z|^k`, the natural scale for rounding errors in
    /// [`Poly::evaluate`].
    pub fn magnitude_at(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.to_f64_vec().iter().rev().fold(0.0, |acc, a| acc * r + a.abs())
    }

    /// Exact value at a rational point.
    pub fn evaluate_exact(&self, x: &BigRational) -> Option<BigRational> {
        self.as_exact().map(|c| {
            c.iter().rev().fold(BigRational::zero(), |acc, a| acc * x + a)
        })
    }
}

pub(crate) fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// Rising factorial `alpha (alpha + 1) ... (alpha + k - 1)`; `k = 0` gives 1.
pub fn pochhammer(alpha: &Scalar, k: u32) -> Scalar {
    (0..k).fold(Scalar::one().in_mode(alpha.mode()), |acc, i| acc * (alpha + i as i64))
}

pub fn pochhammer_f64(alpha: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (alpha + i as f64))
}

pub fn factorial(k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

/// Coefficients of `F(-n, b; c; z)`.
///
/// Built from the term ratio `(-n + k)(b + k) / ((c + k)(k + 1))`, so a
/// degenerate `b = -m` zeroes every coefficient past index `m`.
pub fn coefficients(p: &Params) -> Poly {
    let n = p.n() as i64;
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut term = Scalar::one().in_mode(p.mode());
    out.push(term.clone());
    for k in 0..n {
        if term.is_exact() && term.is_zero() {
            out.push(term.clone());
            continue;
        }
        let num = Scalar::int(k - n) * (p.b() + k);
        let den = (p.c() + k) * Scalar::int(k + 1);
        term = term * num / den;
        out.push(term.clone());
    }
    Poly::from_scalars(out)
}

pub fn evaluate(q: &Poly, z: Complex64) -> Complex64 {
    q.evaluate(z)
}

/// `F(-n, b; c; z)` evaluated directly from the parameters in floating point.
pub fn hyp2f1_poly(p: &Params, z: Complex64) -> Complex64 {
    coefficients(&p.to_float()).evaluate(z)
}
