//! All complex roots of a real polynomial by Aberth–Ehrlich simultaneous
//! iteration, followed by Newton polishing and conjugate pairing.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Float, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeom::{horner, Poly};
use crate::oracle::sturm::IntPoly;
use crate::scalar::rational_to_f64;

/// Default sweep cap for [`all_roots`].
pub const MAX_SWEEPS: usize = 1000;
/// Highest degree the floating-point solver accepts.
pub const MAX_DEGREE: usize = 100;
/// Residual contract: `|q(z)| <= RESIDUAL_TOL * sum |a_k| |z|^k`.
pub const RESIDUAL_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: u32,
    /// `|q(value)|`
    pub residual: f64,
    /// `sum |a_k| |value|^k`, the rounding scale of the residual.
    pub scale: f64,
}

impl Root {
    pub fn is_real(&self, tol: f64) -> bool {
        self.value.im.abs() <= tol
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub roots: Vec<Root>,
    pub sweeps: usize,
    pub tolerance: f64,
}

impl RootSet {
    pub fn total_multiplicity(&self) -> u32 {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn values(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat(r.value).take(r.multiplicity as usize))
    }

    /// Non-real roots with no conjugate partner within `tol`.
    pub fn unpaired(&self, tol: f64) -> usize {
        self.roots
            .iter()
            .filter(|r| r.value.im.abs() > tol)
            .filter(|r| !self.roots.iter().any(|s| (s.value - r.value.conj()).norm() <= tol))
            .count()
    }
}

fn derivative(c: &[f64]) -> Vec<f64> {
    c.iter().enumerate().skip(1).map(|(k, a)| a * k as f64).collect()
}

/// Upper bound on root moduli (Fujiwara).
fn root_radius(c: &[f64]) -> f64 {
    let n = c.len() - 1;
    let lead = c[n].abs();
    (1..=n)
        .map(|k| {
            let a = (c[n - k] / lead).abs();
            if k == n {
                (a / 2.0).powf(1.0 / k as f64)
            } else {
                a.powf(1.0 / k as f64)
            }
        })
        .fold(0.0, f64::max)
        * 2.0
}

fn magnitude(c: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    c.iter().rev().fold(0.0, |acc, a| acc * r + a.abs())
}

/// Aberth–Ehrlich on monic-free coefficients (ascending, nonzero leading).
fn aberth(c: &[f64], max_sweeps: usize) -> Result<(Vec<Complex64>, usize)> {
    let n = c.len() - 1;
    let dc = derivative(c);
    // Initial guesses on a circle around the centroid, rotated off the axes
    // so conjugate symmetry does not trap the iteration.
    let centroid = -c[n - 1] / (n as f64 * c[n]);
    let radius = root_radius(c).max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / n as f64 + 0.4;
            Complex64::new(centroid, 0.0) + Complex64::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; n];
    let mut last_max = f64::INFINITY;
    for sweep in 1..=max_sweeps {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let zi = z[i];
            let p = horner(c, zi);
            if p.norm() <= 4.0 * f64::EPSILON * magnitude(c, zi) {
                done[i] = true;
                continue;
            }
            let ratio = p / horner(&dc, zi);
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (zi - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[i] = zi - step;
            let rel = step.norm() / zi.norm().max(1e-300);
            max_step = max_step.max(rel);
            if rel <= 4.0 * f64::EPSILON {
                done[i] = true;
            }
        }
        last_max = max_step;
        if done.iter().all(|&d| d) || max_step <= 4.0 * f64::EPSILON {
            return Ok((z, sweep));
        }
    }
    Err(Error::NonConvergence { iterations: max_sweeps, max_correction: last_max, best: z })
}

/// Newton steps while each halves the residual; keeps the best iterate.
fn polish(c: &[f64], dc: &[f64], z0: Complex64) -> Complex64 {
    let mut best = z0;
    let mut best_res = horner(c, z0).norm();
    for _ in 0..20 {
        if best_res == 0.0 {
            break;
        }
        let d = horner(dc, best);
        if d.norm() == 0.0 {
            break;
        }
        let cand = best - horner(c, best) / d;
        let res = horner(c, cand).norm();
        if res.is_finite() && res <= 0.5 * best_res {
            best = cand;
            best_res = res;
        } else {
            if res < best_res {
                best = cand;
            }
            break;
        }
    }
    best
}

/// `z` as `(X + iY) / 2^e` with integer `X`, `Y`.
fn dyadic(z: Complex64) -> (BigInt, BigInt, usize) {
    let parts = [z.re, z.im].map(|v| {
        let (m, e, sign) = Float::integer_decode(v);
        (BigInt::from(m) * sign, e as i64)
    });
    let e = parts.iter().filter(|(m, _)| !m.is_zero()).map(|(_, e)| -e).max().unwrap_or(0).max(0);
    let [x, y] = parts.map(|(m, k)| if m.is_zero() { m } else { m << (k + e) as usize });
    (x, y, e as usize)
}

/// `D^d p(w / D)` for integer coefficients `p`, `w = x + iy`, `D = 2^e`.
fn homogeneous_eval(p: &[BigInt], x: &BigInt, y: &BigInt, e: usize) -> (BigInt, BigInt) {
    let d = p.len() - 1;
    let (mut re, mut im) = (p[d].clone(), BigInt::zero());
    for k in (0..d).rev() {
        let next_re = &re * x - &im * y + (&p[k] << (e * (d - k)));
        im = &re * y + &im * x;
        re = next_re;
    }
    (re, im)
}

/// Newton ratio `p(z) / p'(z)` with both values computed exactly at the
/// rational value of `z`.
fn exact_ratio(p: &IntPoly, dp: &IntPoly, z: Complex64) -> Option<Complex64> {
    let (x, y, e) = dyadic(z);
    let (pr, pi) = homogeneous_eval(p.coeffs(), &x, &y, e);
    let (dr, di) = homogeneous_eval(dp.coeffs(), &x, &y, e);
    let den = (&dr * &dr + &di * &di) << e;
    if den.is_zero() {
        return None;
    }
    // (pr + i pi)(dr - i di) / |p'|^2, with one spare factor D
    let re = rational_to_f64(&BigRational::new(&pr * &dr + &pi * &di, den.clone()));
    let im = rational_to_f64(&BigRational::new(&pi * &dr - &pr * &di, den));
    (re.is_finite() && im.is_finite()).then(|| Complex64::new(re, im))
}

/// Aberth sweeps driven by exact Newton ratios. Accuracy is then limited by
/// the rounding of `z` itself rather than by cancellation among large
/// coefficients.
fn aberth_exact(p: &IntPoly, mut z: Vec<Complex64>, max_sweeps: usize) -> Vec<Complex64> {
    let dp = p.derivative();
    let n = z.len();
    let mut done = vec![false; n];
    for _ in 0..max_sweeps {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let Some(ratio) = exact_ratio(p, &dp, z[i]) else {
                done[i] = true;
                continue;
            };
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                done[i] = true;
                continue;
            }
            z[i] -= step;
            if step.norm() <= 2.0 * f64::EPSILON * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            break;
        }
    }
    z
}

/// Snaps near-real roots to the real axis and forces exact conjugate pairs.
fn pair_conjugates(mut z: Vec<Complex64>, tol: f64) -> Vec<Complex64> {
    let mut used = vec![false; z.len()];
    let mut out = Vec::with_capacity(z.len());
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(b.im.total_cmp(&a.im)));
    for i in 0..z.len() {
        if used[i] || z[i].im < 0.0 && z[i].im.abs() > tol {
            continue;
        }
        used[i] = true;
        if z[i].im.abs() <= tol {
            out.push(Complex64::new(z[i].re, 0.0));
            continue;
        }
        // nearest unused partner below the axis
        let partner = (0..z.len())
            .filter(|&j| !used[j] && z[j].im < 0.0)
            .min_by(|&a, &b| {
                (z[a] - z[i].conj()).norm().total_cmp(&(z[b] - z[i].conj()).norm())
            });
        match partner {
            Some(j) => {
                used[j] = true;
                let avg = (z[i] + z[j].conj()) / 2.0;
                out.push(avg);
                out.push(avg.conj());
            }
            None => out.push(Complex64::new(z[i].re, 0.0)),
        }
    }
    // lone roots below the axis whose partner was taken: treat as real
    for j in 0..z.len() {
        if !used[j] {
            out.push(Complex64::new(z[j].re, 0.0));
        }
    }
    out
}

/// Groups roots closer than `tol` (relative) into one root with
/// multiplicity.
fn cluster(z: Vec<Complex64>, tol: f64) -> Vec<(Complex64, u32)> {
    let mut out: Vec<(Complex64, u32)> = Vec::new();
    for v in z {
        match out
            .iter_mut()
            .find(|(w, _)| (*w - v).norm() <= tol * w.norm().max(1.0))
        {
            Some((w, m)) => {
                *w = (*w * *m as f64 + v) / (*m as f64 + 1.0);
                *m += 1;
            }
            None => out.push((v, 1)),
        }
    }
    out
}

/// Every complex root of `q` with multiplicities.
///
/// Exact polynomials have the root `z = 1` deflated exactly first (it is the
/// one place hypergeometric polynomials can carry a multiple zero away from
/// the origin); floating inputs merge roots that land within `1e-7` of each
/// other.
pub fn all_roots(q: &Poly) -> Result<RootSet> {
    all_roots_with(q, MAX_SWEEPS)
}

pub fn all_roots_with(q: &Poly, max_sweeps: usize) -> Result<RootSet> {
    let degree = q.effective_degree();
    if degree == 0 {
        return Err(Error::InvalidParameter("constant polynomial has no roots".into()));
    }
    if degree > MAX_DEGREE {
        return Err(Error::DegreeTooLarge { degree, cap: MAX_DEGREE });
    }
    let full = q.to_f64_vec()[..=degree].to_vec();
    let mut exact = None;
    let (work, at_one, at_zero) = match q.as_exact() {
        Some(c) => {
            let p = IntPoly::from_rationals(&c[..=degree]);
            let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
            let p = IntPoly::new(p.coeffs()[zeros..].to_vec());
            let (p, m) = p.deflate_at_one();
            let scale = p.coeffs().iter().map(|c| c.magnitude()).max().cloned().unwrap_or_default();
            let w: Vec<f64> = p
                .coeffs()
                .iter()
                .map(|c| rational_to_f64(&BigRational::new(c.clone(), scale.clone().into())))
                .collect();
            exact = Some(p);
            (w, m, zeros as u32)
        }
        None => {
            let zeros = full.iter().take_while(|c| **c == 0.0).count();
            (full[zeros..].to_vec(), 0, zeros as u32)
        }
    };

    let mut values = Vec::new();
    let mut sweeps = 0;
    if work.len() > 1 {
        let (z, s) = aberth(&work, max_sweeps)?;
        sweeps = s;
        let dfull = derivative(&full);
        values = z.into_iter().map(|v| polish(&work, &derivative(&work), v)).collect();
        values = values.into_iter().map(|v| polish(&full, &dfull, v)).collect();
        if let Some(p) = &exact {
            values = aberth_exact(p, values, 100);
        }
        values = pair_conjugates(values, 1e-9);
    }

    let merged = if q.as_exact().is_some() { values.into_iter().map(|v| (v, 1)).collect() } else { cluster(values, 1e-7) };
    let mut roots: Vec<Root> = merged
        .into_iter()
        .map(|(value, multiplicity)| Root {
            value,
            multiplicity,
            residual: horner(&full, value).norm(),
            scale: magnitude(&full, value),
        })
        .collect();
    for (point, m) in [(1.0, at_one), (0.0, at_zero)] {
        if m > 0 {
            let value = Complex64::new(point, 0.0);
            roots.push(Root { value, multiplicity: m, residual: 0.0, scale: magnitude(&full, value) });
        }
    }
    roots.sort_by(|a, b| a.value.re.total_cmp(&b.value.re).then(a.value.im.total_cmp(&b.value.im)));
    Ok(RootSet { roots, sweeps, tolerance: RESIDUAL_TOL })
}
