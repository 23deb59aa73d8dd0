//! Acceptance criteria, one line per criterion.
//!
//! Runs without the libtest harness so every verdict is printed even when
//! all of them pass. Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperzero::klein::{classify_region, predict_counts};
use hyperzero::oracle::{all_roots, sturm_counts, verify, Outcome};
use hyperzero::orthogonal::{approx_eq, gegenbauer_sides, jacobi_connection_sides, jacobi_form_sides};
use hyperzero::transforms::identity_sides;
use hyperzero::{coefficients, Family, Params, Scalar, Transform};

type Verdict = Result<String, String>;

fn rational(num: i64, den: i64) -> Scalar {
    Scalar::Exact(BigRational::new(num.into(), den.into()))
}

/// Random rational in `(lo, hi)` with denominator at most `max_den`.
fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Scalar {
    loop {
        let den = rng.gen_range(1..=max_den);
        let num = rng.gen_range(lo * den + 1..hi * den);
        let s = rational(num, den);
        if s.gt(&Scalar::int(lo)) && s.lt(&Scalar::int(hi)) {
            return s;
        }
    }
}

fn distance_to_excluded(v: &Scalar, n: u32) -> f64 {
    let x = v.to_f64();
    (0..n).map(|k| (x + k as f64).abs()).fold(f64::INFINITY, f64::min)
}

fn ac1() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    while checked < 500 {
        let n = rng.gen_range(1..=10);
        let b = random_rational(&mut rng, -15, 15, 40);
        let c = random_rational(&mut rng, -15, 15, 40);
        let cmb = &c - &b;
        if [&b, &c, &cmb].iter().any(|v| distance_to_excluded(v, n) < 1e-3) {
            continue;
        }
        let p = Params::new(n, b, c).map_err(|e| e.to_string())?;
        let pred = predict_counts(&p).map_err(|e| format!("{p}: {e}"))?;
        let oracle = sturm_counts(&coefficients(&p)).map_err(|e| e.to_string())?;
        if pred.counts() != oracle.counts() || oracle.mult_at_one != 0 {
            return Err(format!("{p}: predicted {:?}, Sturm {:?}", pred.counts(), oracle));
        }
        checked += 1;
    }
    Ok(format!("{checked} random parameter sets agree"))
}

fn ac2() -> Verdict {
    let n = 4u32;
    let mut cases = std::collections::BTreeSet::new();
    for twice in -15..=17 {
        let b = rational(twice, 2);
        if b.is_integer() {
            continue;
        }
        let p = Params::new(n, b.clone(), Scalar::int(2)).map_err(|e| e.to_string())?;
        let x = b.to_f64();
        // counts as printed, keyed by window
        let (tag, expect) = if x > 6.0 {
            ("thm3.2.i", (0, n, 0))
        } else if x > 2.0 {
            let j = (x - 2.0).ceil() as u32;
            ("thm3.2.ii", ((n - j) % 2, j, 0))
        } else if x > 0.0 {
            ("thm3.2.iii", (n % 2, 0, 0))
        } else if x > -4.0 {
            let j = (-x).ceil() as u32;
            ("thm3.2.iv", ((n - j) % 2, 0, j))
        } else {
            ("thm3.2.v", (0, 0, n))
        };
        let pred = classify_region(&p).map_err(|e| format!("{p}: {e}"))?;
        let oracle = sturm_counts(&coefficients(&p)).map_err(|e| e.to_string())?;
        if pred.provenance.tag() != tag || pred.counts() != expect || oracle.counts() != expect {
            return Err(format!(
                "{p}: table {tag} {expect:?}, predicted {} {:?}, Sturm {:?}",
                pred.provenance.tag(),
                pred.counts(),
                oracle.counts()
            ));
        }
        cases.insert(tag);
    }
    if cases.len() != 5 {
        return Err(format!("only covered {cases:?}"));
    }
    Ok("all five windows reproduce the printed counts".into())
}

fn ac3() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    let mut closest = f64::INFINITY;
    for n in [4u32, 5, 8, 13] {
        for _ in 0..5 {
            // b in (-1/2, 8)
            let b = &random_rational(&mut rng, 0, 17, 30) * rational(1, 2) - rational(1, 2);
            let p = Family::DoubleB.params(n, b).map_err(|e| e.to_string())?;
            let r = all_roots(&coefficients(&p)).map_err(|e| e.to_string())?;
            let z: Vec<Complex64> = r.values().collect();
            if z.len() != n as usize {
                return Err(format!("{p}: {} roots", z.len()));
            }
            for (i, a) in z.iter().enumerate() {
                let dev = ((a - 1.0).norm() - 1.0).abs();
                worst = worst.max(dev);
                if dev > 1e-9 {
                    return Err(format!("{p}: root {a} is {dev:e} off the circle"));
                }
                for b in &z[i + 1..] {
                    closest = closest.min((a - b).norm());
                }
            }
            if closest <= 1e-9 {
                return Err(format!("{p}: roots only {closest:e} apart"));
            }
        }
    }
    Ok(format!("max circle deviation {worst:.1e}, min separation {closest:.1e}"))
}

fn ac4() -> Verdict {
    let mut spreads = Vec::new();
    for b in [-10, -100, -1000] {
        let p = Family::DoubleB.params(6, Scalar::int(b)).map_err(|e| e.to_string())?;
        let r = all_roots(&coefficients(&p)).map_err(|e| e.to_string())?;
        let z: Vec<Complex64> = r.values().collect();
        if z.len() != 6 || z.iter().any(|v| v.im != 0.0 || v.re <= 1.0) {
            return Err(format!("{p}: roots {z:?} are not all real and > 1"));
        }
        spreads.push(z.iter().map(|v| (v - 2.0).norm()).fold(0.0, f64::max));
    }
    if !spreads.windows(2).all(|w| w[1] < w[0]) {
        return Err(format!("max |z - 2| not decreasing: {spreads:?}"));
    }
    Ok(format!("max |z - 2| = {:.3e}, {:.3e}, {:.3e}", spreads[0], spreads[1], spreads[2]))
}

/// Three interior `b` values for each printed case of the `c = 1/2` and
/// `c = -2n` theorems, for one even and one odd degree.
fn window_samples(family: Family, n: u32) -> Vec<(&'static str, Scalar)> {
    let ni = n as i64;
    let r = rational;
    let mut out = Vec::new();
    let mut add = |tag: &'static str, vals: Vec<Scalar>| out.extend(vals.into_iter().map(|v| (tag, v)));
    match family {
        Family::Half => {
            add("thm2.2.i", vec![r(2 * ni + 1, 2) + r(1, 3), Scalar::int(ni + 3), r(41, 2) + Scalar::int(ni)]);
            // n - 1/2 - j < b < n + 1/2 - j for j = 1, 2, n - 1
            add("thm2.2.ii", vec![Scalar::int(ni - 1) + r(1, 7), Scalar::int(ni - 2) - r(2, 5), r(6, 5)]);
            add("thm2.2.iii", vec![r(1, 10), r(1, 4), r(9, 20)]);
            add("thm2.2.iv", vec![r(-1, 3), r(-3, 2), Scalar::int(2 - ni) - r(1, 2)]);
            add("thm2.2.v", vec![Scalar::int(1 - ni) - r(1, 9), Scalar::int(-3 * ni), r(-100, 1)]);
        }
        Family::MinusTwoN => {
            add("thm2.3.i", vec![r(1, 3), Scalar::int(1), r(29, 2)]);
            add("thm2.3.ii", vec![r(-1, 2), r(-7, 4), Scalar::int(1 - ni) - r(1, 3)]);
            add("thm2.3.iii", vec![Scalar::int(-ni) - r(1, 2), Scalar::int(-ni - 2) - r(1, 5), Scalar::int(1 - 2 * ni) - r(4, 5)]);
            add("thm2.3.iv", vec![Scalar::int(-2 * ni) - r(1, 4), Scalar::int(-2 * ni - 5), r(-301, 3)]);
        }
        Family::DoubleB => {}
    }
    out
}

fn ac5() -> Verdict {
    let mut verified = 0;
    for family in [Family::Half, Family::MinusTwoN] {
        for n in [5u32, 6] {
            for (tag, b) in window_samples(family, n) {
                let p = family.params(n, b).map_err(|e| e.to_string())?;
                let report = verify(&p).map_err(|e| format!("{p}: {e}"))?;
                let g = report
                    .geometry
                    .iter()
                    .find(|g| g.case.family == family)
                    .ok_or_else(|| format!("{p}: no geometry ({:?})", report.notes))?;
                if g.case.tag() != tag {
                    return Err(format!("{p}: expected {tag}, got {}", g.case.tag()));
                }
                if report.outcome != Outcome::Pass || report.prediction.is_none() {
                    let bad: Vec<_> = report.failures().collect();
                    return Err(format!("{p}: {:?} {bad:?} {:?}", report.outcome, report.notes));
                }
                verified += 1;
            }
        }
    }
    Ok(format!("{verified} window samples verified"))
}

fn ac6() -> Verdict {
    let third = rational(3, 10);
    let seventh = rational(7, 10);
    let mut seen33 = std::collections::BTreeMap::new();
    let mut seen34 = std::collections::BTreeMap::new();
    for n in [6u32, 7] {
        let ni = n as i64;
        for j in 1..ni {
            for k in 1..ni {
                for (g, d) in [(&third, &seventh), (&seventh, &third)] {
                    // c in (-k, -k + 1), c - b in (-j, -j + 1) or b in (-j, -j + 1)
                    let c = Scalar::int(-k) + g;
                    let cmb = Scalar::int(-j) + d;
                    let b = &c - &cmb;
                    if b.gt(&Scalar::zero()) && cmb.gt(&Scalar::int(1 - ni)) {
                        let key = ((ni - j) % 2, k % 2);
                        let expect = (((ni - j) % 2) as u32, (j - k) as u32, (k % 2) as u32);
                        seen33.entry(key).or_insert((n, b, c.clone(), expect, "thm3.3"));
                    }
                    let b = Scalar::int(-j) + d;
                    let cmb = &c - &b;
                    let l = -cmb.floor();
                    if !cmb.is_integer() && l >= 1 && l < ni {
                        let key = ((ni + j + l) % 2, (k + l) % 2, (j + k) % 2);
                        let expect = (key.0 as u32, key.1 as u32, key.2 as u32);
                        seen34.entry(key).or_insert((n, b, c, expect, "thm3.4"));
                    }
                }
            }
        }
    }
    if seen33.len() != 4 || seen34.len() != 8 {
        return Err(format!("parity coverage {} of 4 and {} of 8", seen33.len(), seen34.len()));
    }
    for (n, b, c, expect, tag) in seen33.into_values().chain(seen34.into_values()) {
        let p = Params::new(n, b, c).map_err(|e| e.to_string())?;
        let pred = classify_region(&p).map_err(|e| format!("{p}: {e}"))?;
        let oracle = sturm_counts(&coefficients(&p)).map_err(|e| e.to_string())?;
        if pred.provenance.tag() != tag || pred.counts() != expect || oracle.counts() != expect {
            return Err(format!(
                "{p}: expected {tag} {expect:?}, predicted {} {:?}, Sturm {:?}",
                pred.provenance.tag(),
                pred.counts(),
                oracle.counts()
            ));
        }
    }
    Ok("4 + 8 parity combinations verified".into())
}

fn random_z(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(rng.gen_range(0.1..3.0), rng.gen_range(0.0..std::f64::consts::TAU))
}

/// A float parameter in `(-6, 6)` at least `0.05` from `{0, -1, ..., -n+1}`.
fn random_param(rng: &mut ChaCha8Rng, n: u32) -> f64 {
    loop {
        let v: f64 = rng.gen_range(-6.0..6.0);
        if distance_to_excluded(&Scalar::float(v), n) >= 0.05 {
            return v;
        }
    }
}

fn identity_run(
    name: &str,
    rng: &mut ChaCha8Rng,
    mut sides: impl FnMut(&mut ChaCha8Rng) -> Option<(Complex64, Complex64)>,
) -> Result<(), String> {
    let mut passed = 0;
    while passed < 100 {
        let Some((l, r)) = sides(rng) else { continue };
        if !approx_eq(l, r, 1e-9) {
            return Err(format!("{name}: {l} vs {r}"));
        }
        passed += 1;
    }
    Ok(())
}

fn ac7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    identity_run("gegenbauer", &mut rng, |rng| {
        let n = rng.gen_range(1..=8);
        let lambda = random_param(rng, n) / 2.0;
        gegenbauer_sides(n, lambda, random_z(rng)).ok()
    })?;
    identity_run("jacobi", &mut rng, |rng| {
        let n = rng.gen_range(1..=8);
        let alpha = random_param(rng, n) - 1.0;
        let beta = rng.gen_range(-6.0..6.0);
        jacobi_connection_sides(n, alpha, beta, random_z(rng)).ok()
    })?;
    for which in [Transform::Euler, Transform::Invert, Transform::Pfaff] {
        identity_run(which.name(), &mut rng, |rng| {
            let n = rng.gen_range(1..=8);
            let p = Params::float(n, random_param(rng, n), random_param(rng, n)).ok()?;
            identity_sides(which, &p, random_z(rng)).ok()
        })?;
    }
    identity_run("jacobi form", &mut rng, |rng| {
        let n = rng.gen_range(1..=8);
        let p = Params::float(n, random_param(rng, n), random_param(rng, n)).ok()?;
        Some(jacobi_form_sides(&p, random_z(rng)))
    })?;
    Ok("6 identities x 100 samples".into())
}

fn ac8() -> Verdict {
    let eps = rational(1, 1_000_000);
    let mut worst: f64 = 0.0;
    for n in [3u32, 4, 6] {
        for m in 1..n as i64 {
            for c in [rational(7, 3), rational(-5, 2)] {
                let at = Params::new(n, Scalar::int(-m), c.clone()).map_err(|e| e.to_string())?;
                let q = coefficients(&at);
                if q.effective_degree() != m as usize {
                    return Err(format!("{at}: effective degree {}", q.effective_degree()));
                }
                let base: Vec<Complex64> = all_roots(&q).map_err(|e| e.to_string())?.values().collect();
                for b in [Scalar::int(-m) - &eps, Scalar::int(-m) + &eps] {
                    let p = Params::new(n, b, c.clone()).map_err(|e| e.to_string())?;
                    let near: Vec<Complex64> =
                        all_roots(&coefficients(&p)).map_err(|e| format!("{p}: {e}"))?.values().collect();
                    for z in &base {
                        let d = near.iter().map(|w| (w - z).norm()).fold(f64::INFINITY, f64::min);
                        worst = worst.max(d);
                        if d > 1e-4 {
                            return Err(format!("{p}: root {z} moved {d:e}"));
                        }
                    }
                }
            }
        }
    }
    Ok(format!("retained roots move at most {worst:.1e}"))
}

fn main() {
    let criteria: [(&str, &str, u64, fn() -> Verdict); 8] = [
        ("AC1", "Hilbert-Klein counts equal Sturm counts", 60, ac1),
        ("AC2", "positive-c window table, n = 4, c = 2", 5, ac2),
        ("AC3", "c = 2b, b > -1/2: simple zeros on |z - 1| = 1", 5, ac3),
        ("AC4", "c = 2b, b -> -inf: real zeros > 1 converging to 2", 2, ac4),
        ("AC5", "c = 1/2 and c = -2n windows against the oracle", 10, ac5),
        ("AC6", "negative-c parity laws against the oracle", 10, ac6),
        ("AC7", "identity suite at 1e-9 relative", 10, ac7),
        ("AC8", "degenerate b = -m: effective degree and continuity", 2, ac8),
    ];
    let mut failed = 0;
    for (id, title, limit, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(msg) if elapsed > Duration::from_secs(limit) => {
                Err(format!("{msg}, but took {elapsed:.2?} (limit {limit} s)"))
            }
            other => other,
        };
        match verdict {
            Ok(msg) => println!("{id} PASS  {title}: {msg} [{elapsed:.2?}]"),
            Err(msg) => {
                failed += 1;
                println!("{id} FAIL  {title}: {msg} [{elapsed:.2?}]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
