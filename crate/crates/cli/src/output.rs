//! Serializable views of library results and their text rendering.

use std::fmt::Write as _;
use std::io::{self, Write};

use hyperzero::oracle::{Confidence, FieldCheck, ObservedCounts, Outcome, RootSet, VerificationReport};
use hyperzero::{CountPrediction, Mode, Params};
use serde::{Deserialize, Serialize};

/// The sweep CSV header, written even when the grid is empty.
pub const SWEEP_HEADER: [&str; 10] =
    ["n", "b", "c", "mode", "provenance", "n1", "n2", "n3", "nonreal_pairs", "status"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsOut {
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
    pub nonreal_pairs: u32,
    pub provenance: String,
    pub mode: Mode,
}

impl CountsOut {
    pub fn new(pred: &CountPrediction, mode: Mode) -> Self {
        CountsOut {
            n1: pred.n1,
            n2: pred.n2,
            n3: pred.n3,
            nonreal_pairs: pred.nonreal_pairs,
            provenance: pred.provenance.tag(),
            mode,
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "(1,inf): {}  (0,1): {}  (-inf,0): {}  non-real pairs: {}  [{}, {}]",
            self.n1, self.n2, self.n3, self.nonreal_pairs, self.provenance, self.mode
        );
        if self.n1 + self.n2 + self.n3 == 0 {
            s.push_str("\nall zeros are non-real");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootOut {
    pub re: f64,
    pub im: f64,
    pub multiplicity: u32,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootsOut {
    pub n: u32,
    pub b: String,
    pub c: String,
    pub mode: Mode,
    pub roots: Vec<RootOut>,
}

impl RootsOut {
    pub fn new(p: &Params, set: &RootSet) -> Self {
        RootsOut {
            n: p.n(),
            b: p.b().to_string(),
            c: p.c().to_string(),
            mode: p.mode(),
            roots: set
                .roots
                .iter()
                .map(|r| RootOut {
                    re: r.value.re,
                    im: r.value.im,
                    multiplicity: r.multiplicity,
                    residual: r.residual,
                })
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.roots {
            s.push_str(&complex_text(r.re, r.im));
            if r.multiplicity > 1 {
                let _ = write!(s, " (multiplicity {})", r.multiplicity);
            }
            s.push('\n');
        }
        s
    }
}

/// Twelve decimals with trailing zeros dropped.
pub fn decimal_text(x: f64) -> String {
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    match s {
        "-0" => "0".to_string(),
        _ => s.to_string(),
    }
}

pub fn complex_text(re: f64, im: f64) -> String {
    let im_text = decimal_text(im.abs());
    if im_text == "0" {
        decimal_text(re)
    } else {
        let sign = if im < 0.0 { '-' } else { '+' };
        format!("{}{sign}{im_text}i", decimal_text(re))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOut {
    pub n: u32,
    pub b: String,
    pub c: String,
    pub mode: Mode,
    pub outcome: Outcome,
    pub confidence: Confidence,
    pub predicted: Option<CountsOut>,
    pub observed: ObservedCounts,
    pub geometry: Vec<String>,
    pub checks: Vec<FieldCheck>,
    pub notes: Vec<String>,
}

impl VerifyOut {
    pub fn new(r: &VerificationReport) -> Self {
        VerifyOut {
            n: r.n,
            b: r.b.clone(),
            c: r.c.clone(),
            mode: r.mode,
            outcome: r.outcome,
            confidence: r.confidence,
            predicted: r.prediction.as_ref().map(|p| CountsOut::new(p, r.mode)),
            observed: r.counts,
            geometry: r.geometry.iter().map(|g| g.case.tag()).collect(),
            checks: r.checks.clone(),
            notes: r.notes.clone(),
        }
    }

    pub fn text(&self) -> String {
        let o = &self.observed;
        let mut s = format!(
            "n={} b={} c={}: {} ({} checks, {} oracle) observed ({}, {}, {})",
            self.n,
            self.b,
            self.c,
            outcome_text(self.outcome),
            self.checks.len(),
            match self.confidence {
                Confidence::Exact => "exact",
                Confidence::Numeric => "numeric",
            },
            o.n1,
            o.n2,
            o.n3
        );
        if let Some(p) = &self.predicted {
            let _ = write!(s, " predicted ({}, {}, {}) by {}", p.n1, p.n2, p.n3, p.provenance);
        }
        if !self.geometry.is_empty() {
            let _ = write!(s, " geometry {}", self.geometry.join(","));
        }
        for c in self.checks.iter().filter(|c| !c.pass) {
            let _ = write!(s, "\n  {}: predicted {} observed {}", c.field, c.predicted, c.observed);
        }
        for note in &self.notes {
            let _ = write!(s, "\n  note: {note}");
        }
        s
    }
}

pub fn outcome_text(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "mismatch",
        Outcome::Boundary => "boundary",
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Mismatch,
    Boundary,
    /// `c` lies in the excluded set, so the polynomial is undefined.
    Undefined,
    /// The root solver failed.
    Error,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Mismatch => "mismatch",
            Status::Boundary => "boundary",
            Status::Undefined => "undefined",
            Status::Error => "error",
        }
    }
}

/// One grid point of a sweep. Count columns are empty unless a prediction
/// applied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: u32,
    pub b: String,
    pub c: String,
    pub mode: Mode,
    pub provenance: String,
    pub n1: Option<u32>,
    pub n2: Option<u32>,
    pub n3: Option<u32>,
    pub nonreal_pairs: Option<u32>,
    pub status: Status,
}

impl SweepRow {
    pub fn counts(&self) -> Option<(u32, u32, u32)> {
        Some((self.n1?, self.n2?, self.n3?))
    }

    pub fn text(&self) -> String {
        let counts = match self.counts() {
            Some((a, b, c)) => format!("({a}, {b}, {c}) {}", self.provenance),
            None => "-".to_string(),
        };
        format!("n={} b={} c={}: {} {counts}", self.n, self.b, self.c, self.status.name())
    }
}

pub fn write_sweep_csv<W: Write>(out: W, rows: &[SweepRow]) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityOut {
    pub which: String,
    pub samples: usize,
    pub passed: usize,
    pub max_relative_error: f64,
    pub tol: f64,
    pub seed: u64,
    pub failures: Vec<IdentityFailure>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityFailure {
    pub n: u32,
    pub b: String,
    pub c: String,
    pub z_re: f64,
    pub z_im: f64,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
}

impl IdentityOut {
    pub fn text(&self) -> String {
        let mut s = format!(
            "{}: {}/{} samples within {:e} (max relative error {:.3e}, seed {})",
            self.which, self.passed, self.samples, self.tol, self.max_relative_error, self.seed
        );
        for f in &self.failures {
            let _ = write!(
                s,
                "\n  n={} b={} c={} z={}: {} vs {}",
                f.n,
                f.b,
                f.c,
                complex_text(f.z_re, f.z_im),
                complex_text(f.lhs[0], f.lhs[1]),
                complex_text(f.rhs[0], f.rhs[1])
            );
        }
        s
    }
}
