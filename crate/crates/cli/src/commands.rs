//! One function per subcommand. Each renders to `out` and returns an exit
//! code; invalid input comes back as a [`CliError`].

use std::fs::File;
use std::io::{self, BufWriter, Write};

use hyperzero::oracle::{all_roots, verify_with, Outcome, VerificationReport};
use hyperzero::orthogonal::{gegenbauer_sides, jacobi_connection_sides, jacobi_form_sides};
use hyperzero::transforms::identity_sides;
use hyperzero::{classify_region, coefficients, predict_counts, Error, Params, Scalar, Transform};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{ClassifyArgs, Format, GridArgs, IdentityArgs, PointArgs, SweepArgs, Which};
use crate::grid::SweepSpec;
use crate::output::{
    write_sweep_csv, CountsOut, IdentityFailure, IdentityOut, RootsOut, Status, SweepRow, VerifyOut,
};
use crate::{CliError, EXIT_BOUNDARY, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK};

pub const SEED_VAR: &str = "HYPERZERO_SEED";

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let s = serde_json::to_string(value).map_err(|e| CliError::invalid(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn params(p: &PointArgs) -> Result<Params, CliError> {
    Ok(Params::parse(p.n, &p.b, &p.c)?)
}

pub fn classify(args: &ClassifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let p = params(&args.point)?;
    let pred = if args.formula { predict_counts(&p)? } else { classify_region(&p)? };
    let counts = CountsOut::new(&pred, p.mode());
    match args.point.format {
        Format::Json => json_line(out, &counts)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.serialize(&counts).map_err(io::Error::from)?;
            w.flush()?;
        }
        Format::Text => writeln!(out, "{}", counts.text())?,
    }
    Ok(EXIT_OK)
}

pub fn roots(args: &PointArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let p = params(args)?;
    let set = all_roots(&coefficients(&p))?;
    let view = RootsOut::new(&p, &set);
    match args.format {
        Format::Json => json_line(out, &view)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &view.roots {
                w.serialize(r).map_err(io::Error::from)?;
            }
            w.flush()?;
        }
        Format::Text => write!(out, "{}", view.text())?,
    }
    Ok(EXIT_OK)
}

/// Verification result for one grid point, or why there is none.
enum PointResult {
    Report(Box<VerificationReport>),
    Undefined(RawPoint),
    Failed(RawPoint, String),
}

/// Parameters as given, for points that never became valid [`Params`].
struct RawPoint {
    n: u32,
    b: Scalar,
    c: Scalar,
}

fn verify_point(n: u32, b: Scalar, c: Scalar, tol: f64) -> PointResult {
    let p = match Params::new(n, b.clone(), c.clone()) {
        Ok(p) => p,
        Err(_) => return PointResult::Undefined(RawPoint { n, b, c }),
    };
    match verify_with(&p, tol) {
        Ok(r) => PointResult::Report(Box::new(r)),
        Err(e) => PointResult::Failed(RawPoint { n, b, c }, e.to_string()),
    }
}

impl PointResult {
    fn row(&self) -> SweepRow {
        match self {
            PointResult::Report(r) => {
                let status = match r.outcome {
                    Outcome::Pass => Status::Pass,
                    Outcome::Fail => Status::Mismatch,
                    Outcome::Boundary => Status::Boundary,
                };
                let pred = r.prediction.as_ref();
                SweepRow {
                    n: r.n,
                    b: r.b.clone(),
                    c: r.c.clone(),
                    mode: r.mode,
                    provenance: pred.map(|p| p.provenance.tag()).unwrap_or_default(),
                    n1: pred.map(|p| p.n1),
                    n2: pred.map(|p| p.n2),
                    n3: pred.map(|p| p.n3),
                    nonreal_pairs: pred.map(|p| p.nonreal_pairs),
                    status,
                }
            }
            PointResult::Undefined(p) | PointResult::Failed(p, _) => {
                let mode = if p.b.is_exact() && p.c.is_exact() {
                    hyperzero::Mode::Exact
                } else {
                    hyperzero::Mode::Float
                };
                SweepRow {
                    n: p.n,
                    b: p.b.to_string(),
                    c: p.c.to_string(),
                    mode,
                    provenance: String::new(),
                    n1: None,
                    n2: None,
                    n3: None,
                    nonreal_pairs: None,
                    status: if matches!(self, PointResult::Undefined(_)) { Status::Undefined } else { Status::Error },
                }
            }
        }
    }
}

fn run_grid(spec: &SweepSpec, tol: f64) -> Vec<PointResult> {
    spec.points()
        .into_par_iter()
        .map(|(b, c)| verify_point(spec.n, b, c, tol))
        .collect()
}

fn grid_exit(rows: &[SweepRow]) -> i32 {
    if rows.iter().any(|r| r.status == Status::Mismatch) {
        EXIT_MISMATCH
    } else if rows.iter().any(|r| r.status == Status::Error) {
        EXIT_INVALID
    } else {
        EXIT_OK
    }
}

pub fn verify(args: &GridArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let spec = SweepSpec::parse(args.n, &args.b, &args.c, args.margin.as_deref())?;
    if spec.is_single() {
        let p = Params::new(spec.n, spec.b.min.clone(), spec.c.min.clone())?;
        let report = verify_with(&p, args.tol)?;
        let view = VerifyOut::new(&report);
        match args.format {
            Format::Json => json_line(out, &view)?,
            Format::Csv => write_sweep_csv(out, &[PointResult::Report(Box::new(report)).row()])?,
            Format::Text => writeln!(out, "{}", view.text())?,
        }
        return Ok(match view.outcome {
            Outcome::Pass => EXIT_OK,
            Outcome::Fail => EXIT_MISMATCH,
            Outcome::Boundary => EXIT_BOUNDARY,
        });
    }
    let results = run_grid(&spec, args.tol);
    let rows: Vec<SweepRow> = results.iter().map(PointResult::row).collect();
    match args.format {
        Format::Csv => write_sweep_csv(&mut *out, &rows)?,
        Format::Json | Format::Text => {
            for (res, row) in results.iter().zip(&rows) {
                match (args.format, res) {
                    (Format::Json, PointResult::Report(r)) => json_line(out, &VerifyOut::new(r))?,
                    (Format::Json, _) => json_line(out, row)?,
                    (_, PointResult::Report(r)) => writeln!(out, "{}", VerifyOut::new(r).text())?,
                    (_, PointResult::Failed(_, e)) => writeln!(out, "{}\n  {e}", row.text())?,
                    _ => writeln!(out, "{}", row.text())?,
                }
            }
        }
    }
    Ok(grid_exit(&rows))
}

pub fn sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let spec = SweepSpec::parse(args.n, &args.b, &args.c, args.margin.as_deref())?;
    let rows: Vec<SweepRow> = run_grid(&spec, args.tol).iter().map(PointResult::row).collect();
    let mut file;
    let sink: &mut dyn Write = match &args.out {
        Some(path) => {
            file = BufWriter::new(
                File::create(path).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?,
            );
            &mut file
        }
        None => out,
    };
    match args.format {
        Format::Csv => write_sweep_csv(&mut *sink, &rows)?,
        Format::Json => {
            for r in &rows {
                json_line(sink, r)?;
            }
        }
        Format::Text => {
            for r in &rows {
                writeln!(sink, "{}", r.text())?;
            }
        }
    }
    sink.flush()?;
    Ok(grid_exit(&rows))
}

/// Reads the seed from `HYPERZERO_SEED`, or draws a fresh one.
pub fn seed_from_env() -> Result<u64, CliError> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::invalid(format!("{SEED_VAR}={s:?} is not an unsigned integer"))),
        Err(_) => Ok(rand::random()),
    }
}

fn distance_to_excluded(v: f64, n: u32) -> f64 {
    let k = v.round().clamp(1.0 - n as f64, 0.0);
    (v - k).abs()
}

/// A float in `(-6, 6)` at least `0.05` away from `{0, -1, ..., -n+1}`.
fn random_param(rng: &mut ChaCha8Rng, n: u32) -> f64 {
    loop {
        let v: f64 = rng.gen_range(-6.0..6.0);
        if distance_to_excluded(v, n) >= 0.05 {
            return v;
        }
    }
}

fn random_z(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(rng.gen_range(0.1..3.0), rng.gen_range(0.0..std::f64::consts::TAU))
}

/// Both sides of the selected identity at `z`. For `jacobi` the two sides
/// of each of the two forms are stacked: the first pair is the form in
/// `1 - 2/z`, the second the connection in `1 - 2z`.
fn sides(which: Which, p: &Params, z: Complex64) -> hyperzero::Result<Vec<(Complex64, Complex64)>> {
    let n = p.n();
    let (b, c) = (p.b().to_f64(), p.c().to_f64());
    Ok(match which {
        Which::Pfaff => vec![identity_sides(Transform::Pfaff, p, z)?],
        Which::Euler => vec![identity_sides(Transform::Euler, p, z)?],
        Which::Invert => vec![identity_sides(Transform::Invert, p, z)?],
        Which::Jacobi => {
            vec![jacobi_form_sides(p, z), jacobi_connection_sides(n, c - 1.0, b - c - n as f64, z)?]
        }
        Which::Gegenbauer => {
            let lambda = c - 0.5;
            let expected = n as f64 + 2.0 * lambda;
            if (b - expected).abs() > 1e-12 * expected.abs().max(1.0) {
                return Err(Error::InvalidParameter(format!(
                    "gegenbauer needs b = n + 2c - 1 = {expected}, got b = {b}"
                )));
            }
            vec![gegenbauer_sides(n, lambda, z)?]
        }
    })
}

fn random_params(which: Which, rng: &mut ChaCha8Rng) -> hyperzero::Result<Params> {
    let n = rng.gen_range(1..=8);
    match which {
        Which::Gegenbauer => {
            let c = random_param(rng, n);
            Params::float(n, n as f64 + 2.0 * c - 1.0, c)
        }
        _ => Params::float(n, random_param(rng, n), random_param(rng, n)),
    }
}

fn relative_error(l: Complex64, r: Complex64) -> f64 {
    let diff = (l - r).norm();
    if diff <= hyperzero::orthogonal::ABS_FLOOR {
        0.0
    } else {
        diff / l.norm().max(r.norm())
    }
}

pub fn identity(args: &IdentityArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let seed = seed_from_env()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fixed = match (args.n, &args.b, &args.c) {
        (Some(n), Some(b), Some(c)) => {
            let p = Params::parse(n, b, c)?;
            sides(args.which, &p, Complex64::new(0.5, 0.5))?;
            Some(p)
        }
        _ => None,
    };

    let mut report = IdentityOut {
        which: args.which.name().to_string(),
        samples: args.samples,
        passed: 0,
        max_relative_error: 0.0,
        tol: args.tol,
        seed,
        failures: Vec::new(),
    };
    let mut done = 0;
    let mut attempts = 0usize;
    while done < args.samples {
        attempts += 1;
        if attempts > 100 * args.samples.max(1) {
            return Err(CliError::invalid("could not draw valid sample parameters"));
        }
        let p = match &fixed {
            Some(p) => p.clone(),
            None => match random_params(args.which, &mut rng) {
                Ok(p) => p,
                Err(_) => continue,
            },
        };
        let z = random_z(&mut rng);
        let pairs = match sides(args.which, &p, z) {
            Ok(s) => s,
            Err(e) if fixed.is_some() => return Err(e.into()),
            Err(_) => continue,
        };
        done += 1;
        let worst = pairs.iter().map(|&(l, r)| relative_error(l, r)).fold(0.0, f64::max);
        report.max_relative_error = report.max_relative_error.max(worst);
        match pairs.iter().find(|&&(l, r)| !hyperzero::orthogonal::approx_eq(l, r, args.tol)) {
            None => report.passed += 1,
            Some(&(l, r)) => report.failures.push(IdentityFailure {
                n: p.n(),
                b: p.b().to_string(),
                c: p.c().to_string(),
                z_re: z.re,
                z_im: z.im,
                lhs: [l.re, l.im],
                rhs: [r.re, r.im],
            }),
        }
    }

    match args.format {
        Format::Json => json_line(out, &report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["which", "samples", "passed", "max_relative_error", "tol", "seed"])
                .map_err(io::Error::from)?;
            w.write_record([
                report.which.clone(),
                report.samples.to_string(),
                report.passed.to_string(),
                report.max_relative_error.to_string(),
                report.tol.to_string(),
                report.seed.to_string(),
            ])
            .map_err(io::Error::from)?;
            w.flush()?;
        }
        Format::Text => writeln!(out, "{}", report.text())?,
    }
    Ok(if report.failures.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
}
