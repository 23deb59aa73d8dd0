//! Jacobi and Gegenbauer polynomials for arbitrary real parameters, and the
//! identities tying them to `F(-n, b; c; z)`.
//!
//! Nothing here relies on orthogonality: Jacobi values come from the
//! explicit binomial double sum and Gegenbauer values from the three-term
//! recurrence, both valid for every real parameter.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hypergeom::{factorial, hyp2f1_poly, pochhammer_f64, Params};

/// Absolute agreement accepted when both sides of an identity are near zero.
pub const ABS_FLOOR: f64 = 1e-12;

/// Relative comparison with an absolute floor of [`ABS_FLOOR`].
pub fn approx_eq(lhs: Complex64, rhs: Complex64, tol: f64) -> bool {
    let diff = (lhs - rhs).norm();
    diff <= ABS_FLOOR || diff <= tol * lhs.norm().max(rhs.norm())
}

/// Generalized binomial coefficient `a (a-1) ... (a-k+1) / k!`.
pub fn binomial(a: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (a - i as f64) / (i + 1) as f64)
}

/// `P_n^{(alpha, beta)}(x)` at a complex argument.
pub fn jacobi_complex(n: u32, alpha: f64, beta: f64, x: Complex64) -> Complex64 {
    let minus = (x - 1.0) / 2.0;
    let plus = (x + 1.0) / 2.0;
    (0..=n)
        .map(|s| {
            let w = binomial(n as f64 + alpha, n - s) * binomial(n as f64 + beta, s);
            minus.powu(s) * plus.powu(n - s) * w
        })
        .sum()
}

/// `P_n^{(alpha, beta)}(x)` for real `x`.
pub fn jacobi(n: u32, alpha: f64, beta: f64, x: f64) -> f64 {
    jacobi_complex(n, alpha, beta, Complex64::new(x, 0.0)).re
}

/// `C_n^lambda(x)` from `k C_k = 2x (k + lambda - 1) C_{k-1} - (k + 2 lambda - 2) C_{k-2}`.
pub fn gegenbauer(n: u32, lambda: f64, x: Complex64) -> Complex64 {
    let mut prev = Complex64::new(1.0, 0.0);
    if n == 0 {
        return prev;
    }
    let mut cur = x * (2.0 * lambda);
    for k in 2..=n {
        let k = k as f64;
        let next = (x * (2.0 * (k + lambda - 1.0)) * cur - prev * (k + 2.0 * lambda - 2.0)) / k;
        prev = cur;
        cur = next;
    }
    cur
}

/// Both sides of `F(-n, b; c; z) = n! z^n / (c)_n P_n^{(a, b')}(1 - 2/z)`
/// with `a = -n - b` and `b' = b - c - n`. Requires `z != 0`.
pub fn jacobi_form_sides(p: &Params, z: Complex64) -> (Complex64, Complex64) {
    let n = p.n();
    let (b, c) = (p.b().to_f64(), p.c().to_f64());
    let alpha = -(n as f64) - b;
    let beta = b - c - n as f64;
    let lhs = hyp2f1_poly(p, z);
    let x = Complex64::new(1.0, 0.0) - Complex64::new(2.0, 0.0) / z;
    let rhs = z.powu(n) * (factorial(n) / pochhammer_f64(c, n)) * jacobi_complex(n, alpha, beta, x);
    (lhs, rhs)
}

pub fn jacobi_form_check(p: &Params, z: Complex64, tol: f64) -> bool {
    let (lhs, rhs) = jacobi_form_sides(p, z);
    approx_eq(lhs, rhs, tol)
}

/// Both sides of `F(-n, alpha + beta + 1 + n; alpha + 1; z) = n! / (alpha + 1)_n P_n^{(alpha, beta)}(1 - 2z)`.
pub fn jacobi_connection_sides(n: u32, alpha: f64, beta: f64, z: Complex64) -> Result<(Complex64, Complex64)> {
    if n == 0 {
        return Ok((Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)));
    }
    let p = Params::float(n, alpha + beta + 1.0 + n as f64, alpha + 1.0)?;
    let lhs = hyp2f1_poly(&p, z);
    let rhs = jacobi_complex(n, alpha, beta, Complex64::new(1.0, 0.0) - z * 2.0)
        * (factorial(n) / pochhammer_f64(alpha + 1.0, n));
    Ok((lhs, rhs))
}

pub fn jacobi_connection_check(n: u32, alpha: f64, beta: f64, z: Complex64, tol: f64) -> Result<bool> {
    let (lhs, rhs) = jacobi_connection_sides(n, alpha, beta, z)?;
    Ok(approx_eq(lhs, rhs, tol))
}

/// Both sides of `F(-n, n + 2 lambda; lambda + 1/2; z) = n! / (2 lambda)_n C_n^lambda(1 - 2z)`.
pub fn gegenbauer_sides(n: u32, lambda: f64, z: Complex64) -> Result<(Complex64, Complex64)> {
    if n == 0 {
        return Ok((Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)));
    }
    let norm = pochhammer_f64(2.0 * lambda, n);
    if norm.abs() < crate::scalar::INTEGER_TOL {
        return Err(Error::InvalidParameter(format!(
            "(2 lambda)_n vanishes for lambda = {lambda}, n = {n}"
        )));
    }
    let p = Params::float(n, n as f64 + 2.0 * lambda, lambda + 0.5)?;
    let lhs = hyp2f1_poly(&p, z);
    let rhs = gegenbauer(n, lambda, Complex64::new(1.0, 0.0) - z * 2.0) * (factorial(n) / norm);
    Ok((lhs, rhs))
}

pub fn gegenbauer_check(n: u32, lambda: f64, z: Complex64, tol: f64) -> Result<bool> {
    let (lhs, rhs) = gegenbauer_sides(n, lambda, z)?;
    Ok(approx_eq(lhs, rhs, tol))
}
