//! Prediction against oracle, field by field.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeom::{coefficients, Params};
use crate::klein::{classify_region, predict_counts, CountPrediction};
use crate::oracle::geometry::{geometry_report, GeometryObservation, Region, DEAD_BAND};
use crate::oracle::roots::all_roots;
use crate::oracle::sturm::sturm_counts;
use crate::scalar::Mode;
use crate::special::{Family, GeometryPrediction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    /// No prediction applies: the parameters sit on a window boundary.
    Boundary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Confidence {
    /// Interval counts come from a Sturm chain.
    Exact,
    /// Interval counts come from classifying numerical roots.
    Numeric,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCheck {
    pub field: String,
    pub predicted: String,
    pub observed: String,
    pub pass: bool,
}

impl FieldCheck {
    fn new(field: &str, predicted: impl fmt::Display, observed: impl fmt::Display, pass: bool) -> Self {
        FieldCheck {
            field: field.to_string(),
            predicted: predicted.to_string(),
            observed: observed.to_string(),
            pass,
        }
    }

    fn equal<T: fmt::Display + PartialEq>(field: &str, predicted: T, observed: T) -> Self {
        let pass = predicted == observed;
        Self::new(field, predicted, observed, pass)
    }
}

/// Observed real-zero counts per interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObservedCounts {
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
    pub mult_at_one: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: u32,
    pub b: String,
    pub c: String,
    pub mode: Mode,
    pub prediction: Option<CountPrediction>,
    /// One prediction per special family the parameters belong to.
    pub geometry: Vec<GeometryPrediction>,
    pub counts: ObservedCounts,
    pub observation: GeometryObservation,
    pub checks: Vec<FieldCheck>,
    pub outcome: Outcome,
    pub confidence: Confidence,
    /// Why a prediction was unavailable, when one was.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &FieldCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn count_checks(pred: &CountPrediction, obs: &ObservedCounts, label: &str) -> Vec<FieldCheck> {
    let mut out = vec![
        FieldCheck::equal(&format!("{label}n1"), pred.n1, obs.n1),
        FieldCheck::equal(&format!("{label}n2"), pred.n2, obs.n2),
        FieldCheck::equal(&format!("{label}n3"), pred.n3, obs.n3),
    ];
    if label.is_empty() {
        out.push(FieldCheck::equal("mult_at_one", 0, obs.mult_at_one));
    }
    out
}

fn geometry_checks(g: &GeometryPrediction, obs: &GeometryObservation, roots: &[num_complex::Complex64], tol: f64) -> Vec<FieldCheck> {
    let mut out = vec![
        FieldCheck::equal("degree", g.degree, obs.degree),
        FieldCheck::new("real_gt1", g.real_gt1, obs.real_gt1, obs.real_gt1 >= g.real_gt1),
        FieldCheck::new("real_in01", g.real_in01, obs.real_in01, obs.real_in01 >= g.real_in01),
        FieldCheck::new("real_neg", g.real_neg, obs.real_neg, obs.real_neg >= g.real_neg),
        FieldCheck::equal("real", g.real(), obs.real()),
        FieldCheck::equal("nonreal", g.nonreal, obs.nonreal),
    ];
    if let Some(k) = g.on_circle {
        out.push(FieldCheck::equal("on_circle", k, obs.on_circle));
    }
    if let Some(k) = g.per_region {
        for r in Region::ALL {
            out.push(FieldCheck::equal(&format!("region {r:?}"), k, obs.in_region(r)));
        }
    }
    for &x in &g.fixed_points {
        let hit = roots.iter().any(|z| (z - x).norm() <= tol.max(1e-12) * x.abs().max(1.0));
        out.push(FieldCheck::new("fixed_point", x, if hit { "present" } else { "absent" }, hit));
    }
    out
}

/// Verifies `p` with the default dead band.
pub fn verify(p: &Params) -> Result<VerificationReport> {
    verify_with(p, DEAD_BAND)
}

/// Verifies every available prediction for `p` against the oracles.
///
/// Exact parameters get Sturm interval counts; floating parameters fall
/// back to classifying numerical roots with a real-axis band of `tol`.
/// Boundary errors from the predictors become a `Boundary` outcome when no
/// prediction at all applies. Solver failures propagate.
pub fn verify_with(p: &Params, tol: f64) -> Result<VerificationReport> {
    let q = coefficients(p);
    let roots = all_roots(&q)?;
    let observation = geometry_report(&roots, tol);
    let (counts, confidence) = match sturm_counts(&q) {
        Ok(s) => (
            ObservedCounts { n1: s.n1, n2: s.n2, n3: s.n3, mult_at_one: s.mult_at_one },
            Confidence::Exact,
        ),
        Err(Error::ExactRequired) => {
            let at_one = roots
                .roots
                .iter()
                .filter(|r| r.value.im.abs() <= tol && (r.value.re - 1.0).abs() <= tol)
                .map(|r| r.multiplicity)
                .sum();
            (
                ObservedCounts {
                    n1: observation.real_gt1,
                    n2: observation.real_in01,
                    n3: observation.real_neg,
                    mult_at_one: at_one,
                },
                Confidence::Numeric,
            )
        }
        Err(e) => return Err(e),
    };

    let mut notes = Vec::new();
    let mut checks = Vec::new();
    let prediction = match classify_region(p) {
        Ok(pred) => Some(pred),
        Err(e) if e.is_boundary() => {
            notes.push(e.to_string());
            None
        }
        Err(e) => {
            notes.push(e.to_string());
            predict_counts(p).ok()
        }
    };
    if let Some(pred) = &prediction {
        checks.extend(count_checks(pred, &counts, ""));
        if let Ok(hk) = predict_counts(p) {
            checks.extend(count_checks(&hk, &counts, "hilbert_klein."));
        }
    }

    let mut geometry = Vec::new();
    let values: Vec<_> = roots.values().collect();
    for family in Family::of(p, 1e-12) {
        match family.predict(p.n(), p.b()) {
            Ok(g) => {
                checks.extend(geometry_checks(&g, &observation, &values, tol));
                geometry.push(g);
            }
            Err(e) => notes.push(e.to_string()),
        }
    }

    let outcome = if checks.is_empty() {
        Outcome::Boundary
    } else if checks.iter().all(|c| c.pass) {
        Outcome::Pass
    } else {
        Outcome::Fail
    };
    Ok(VerificationReport {
        n: p.n(),
        b: p.b().to_string(),
        c: p.c().to_string(),
        mode: p.mode(),
        prediction,
        geometry,
        counts,
        observation,
        checks,
        outcome,
        confidence,
        notes,
    })
}
