//! Real-zero counts of `F(-n, b; c; z)` on `(1, inf)`, `(0, 1)` and
//! `(-inf, 0)`.
//!
//! [`predict_counts`] evaluates the Hilbert–Klein closed forms, carried over
//! from Jacobi polynomials through `F(-n,b;c;z) = n! z^n/(c)_n P_n^{(-n-b, b-c-n)}(1 - 2/z)`.
//! [`classify_region`] instead locates the parameters in one of the explicit
//! regional case tables (positive `c`; negative `c` with positive `b`; the
//! all-negative cell) and, for the rest of the negative-`c` half plane,
//! reduces to one of those through a reflection, inversion or Pfaff map.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeom::Params;
use crate::scalar::Scalar;
use crate::transforms::{euler_reflect, invert, pfaff, Interval, Transform};

/// Klein's symbol: 0 for `u <= 0`, `floor(u)` for non-integer `u > 0`,
/// `u - 1` for positive integers.
pub fn klein_e(u: &Scalar) -> u32 {
    match u.as_integer() {
        Some(k) if k <= 0 => 0,
        Some(k) => (k - 1) as u32,
        None if u.signum() <= 0 => 0,
        None => u.floor() as u32,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KleinXYZ {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

pub fn xyz(p: &Params) -> KleinXYZ {
    let n = p.n() as i64;
    let half = Scalar::ratio(1, 2).in_mode(p.mode());
    let a = (Scalar::one() - p.c()).abs();
    let b = (p.b() + n).abs();
    let c = (p.b() - p.c() - n).abs();
    let e = |s: Scalar| klein_e(&((s + 1) * &half));
    KleinXYZ {
        x: e(&a - &b - &c),
        y: e(&b - &a - &c),
        z: e(&c - &a - &b),
    }
}

/// Sign of the generalized binomial `alpha (alpha-1) ... (alpha-n+1) / n!`.
pub fn binomial_sign(alpha: &Scalar, n: u32) -> i8 {
    let mut sign = 1;
    for i in 0..n {
        match (alpha - i as i64).signum() {
            0 => return 0,
            s if s < 0 => sign = -sign,
            _ => {}
        }
    }
    sign
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PositiveCCase {
    /// `b > c + n`: every zero in `(0, 1)`.
    AllInUnit,
    /// `c + j - 1 < b < c + j`.
    Partial { j: u32 },
    /// `0 < b < c`.
    SmallB,
    /// `-j < b < -j + 1`.
    NegativeB { j: u32 },
    /// `b < -n`: every zero negative.
    BelowMinusN,
}

impl PositiveCCase {
    fn roman(self) -> &'static str {
        match self {
            PositiveCCase::AllInUnit => "i",
            PositiveCCase::Partial { .. } => "ii",
            PositiveCCase::SmallB => "iii",
            PositiveCCase::NegativeB { .. } => "iv",
            PositiveCCase::BelowMinusN => "v",
        }
    }
}

/// Which count formula or regional case produced a [`CountPrediction`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    HilbertKlein,
    PositiveC(PositiveCCase),
    /// `c < 0`, `b > 0`, `c - b > 1 - n` with `-k < c < -k+1`, `-j < c-b < -j+1`.
    NegativeCPositiveB { j: u32, k: u32 },
    /// `1-n < b, c, c-b < 0` with `-j < b < -j+1`, `-k < c < -k+1`, `-l < c-b < -l+1`.
    AllNegative { j: u32, k: u32, l: u32 },
    Reduced { via: Transform, base: Box<Provenance> },
}

impl Provenance {
    pub fn tag(&self) -> String {
        match self {
            Provenance::HilbertKlein => "thm3.1".into(),
            Provenance::PositiveC(case) => format!("thm3.2.{}", case.roman()),
            Provenance::NegativeCPositiveB { .. } => "thm3.3".into(),
            Provenance::AllNegative { .. } => "thm3.4".into(),
            Provenance::Reduced { via, base } => format!("reduced-via-{}:{}", via.name(), base.tag()),
        }
    }

    /// Window indices `(j, k, l)` of the case that fired, where it has them.
    pub fn indices(&self) -> (Option<u32>, Option<u32>, Option<u32>) {
        match self {
            Provenance::PositiveC(PositiveCCase::Partial { j })
            | Provenance::PositiveC(PositiveCCase::NegativeB { j }) => (Some(*j), None, None),
            Provenance::NegativeCPositiveB { j, k } => (Some(*j), Some(*k), None),
            Provenance::AllNegative { j, k, l } => (Some(*j), Some(*k), Some(*l)),
            Provenance::Reduced { base, .. } => base.indices(),
            _ => (None, None, None),
        }
    }

    /// The parity sub-case `a`..`d` of the negative-`c`, positive-`b` table.
    pub fn parity_case(&self, n: u32) -> Option<char> {
        match self {
            Provenance::NegativeCPositiveB { j, k } => {
                Some(match ((n - j) % 2, k % 2) {
                    (0, 0) => 'a',
                    (1, 0) => 'b',
                    (0, _) => 'c',
                    _ => 'd',
                })
            }
            _ => None,
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountPrediction {
    /// zeros in `(1, inf)`
    pub n1: u32,
    /// zeros in `(0, 1)`
    pub n2: u32,
    /// zeros in `(-inf, 0)`
    pub n3: u32,
    pub nonreal_pairs: u32,
    pub provenance: Provenance,
}

impl CountPrediction {
    fn new(n: u32, n1: u32, n2: u32, n3: u32, provenance: Provenance) -> Result<Self> {
        let real = n1 + n2 + n3;
        if real > n || (n - real) % 2 != 0 {
            return Err(Error::Inconsistent(format!(
                "{} real zeros ({n1}, {n2}, {n3}) cannot leave conjugate pairs in degree {n}",
                real
            )));
        }
        Ok(CountPrediction { n1, n2, n3, nonreal_pairs: (n - real) / 2, provenance })
    }

    pub fn counts(&self) -> (u32, u32, u32) {
        (self.n1, self.n2, self.n3)
    }

    pub fn in_interval(&self, i: Interval) -> u32 {
        match i {
            Interval::AboveOne => self.n1,
            Interval::Unit => self.n2,
            Interval::Negative => self.n3,
        }
    }

    pub fn real_zeros(&self) -> u32 {
        self.n1 + self.n2 + self.n3
    }

    pub fn degree(&self) -> u32 {
        self.real_zeros() + 2 * self.nonreal_pairs
    }

    /// Counts of a source polynomial obtained from those of its image under
    /// `via`. All three maps are involutions on the intervals.
    pub fn pulled_back(&self, via: Transform) -> CountPrediction {
        let at = |i| self.in_interval(via.map_interval(i));
        CountPrediction {
            n1: at(Interval::AboveOne),
            n2: at(Interval::Unit),
            n3: at(Interval::Negative),
            nonreal_pairs: self.nonreal_pairs,
            provenance: Provenance::Reduced { via, base: Box::new(self.provenance.clone()) },
        }
    }
}

/// Boundary error unless none of `b`, `c`, `c - b` lies in `{0, -1, ..., -n+1}`.
fn require_general_position(p: &Params) -> Result<()> {
    let n = p.n();
    for (name, v) in [("b", p.b().clone()), ("c", p.c().clone()), ("c - b", p.c_minus_b())] {
        if v.in_excluded_set(n) {
            return Err(Error::Boundary(format!(
                "{name} = {v} lies in {{0, -1, ..., {}}}",
                1 - n as i64
            )));
        }
    }
    Ok(())
}

fn odd_count(value: u32, sign: i8) -> u32 {
    if sign > 0 {
        2 * ((value + 1) / 2)
    } else {
        2 * (value / 2) + 1
    }
}

/// Hilbert–Klein counts `(N1, N2, N3)`.
pub fn predict_counts(p: &Params) -> Result<CountPrediction> {
    require_general_position(p)?;
    let n = p.n();
    let neg_b = binomial_sign(&-p.b(), n);
    let neg_c = binomial_sign(&-p.c(), n);
    let b_minus_c = binomial_sign(&(p.b() - p.c()), n);
    let parity = if n % 2 == 0 { 1 } else { -1 };
    let signs = [parity * neg_b * b_minus_c, neg_c * b_minus_c, neg_c * neg_b];
    if signs.contains(&0) {
        return Err(Error::Boundary("a binomial sign product vanishes".into()));
    }
    let k = xyz(p);
    CountPrediction::new(
        n,
        odd_count(k.x, signs[0]),
        odd_count(k.y, signs[1]),
        odd_count(k.z, signs[2]),
        Provenance::HilbertKlein,
    )
}

/// `j` with `-j < x < -j + 1`, or a boundary error when `x` is an integer.
fn negative_window(x: &Scalar, what: &str) -> Result<u32> {
    if x.is_integer() {
        return Err(Error::Boundary(format!("{what} = {x} is an integer window endpoint")));
    }
    Ok((-x.floor()) as u32)
}

/// Regional table for `c > 0`.
fn positive_c(p: &Params) -> Result<CountPrediction> {
    let n = p.n();
    let (b, c) = (p.b(), p.c());
    let boundary = |what: &str| Err(Error::Boundary(format!("{what} for c > 0 ({p})")));
    let b_minus_c = b - c;
    let case = if b_minus_c.gt(&Scalar::int(n as i64)) {
        PositiveCCase::AllInUnit
    } else if b_minus_c.gt(&Scalar::zero()) {
        if b_minus_c.is_integer() {
            return boundary("b - c is an integer in [1, n]");
        }
        PositiveCCase::Partial { j: b_minus_c.floor() as u32 + 1 }
    } else if b.gt(&Scalar::zero()) {
        if b_minus_c.is_zero() {
            return boundary("b = c");
        }
        PositiveCCase::SmallB
    } else if b.gt(&Scalar::int(-(n as i64))) {
        if b.is_zero() {
            return boundary("b = 0");
        }
        PositiveCCase::NegativeB { j: negative_window(b, "b")? }
    } else if b.lt(&Scalar::int(-(n as i64))) {
        PositiveCCase::BelowMinusN
    } else {
        return boundary("b = -n");
    };
    if b_minus_c.strict_cmp(&Scalar::int(n as i64)).is_none() {
        return boundary("b = c + n");
    }
    let odd = |m: u32| m % 2;
    let (n1, n2, n3) = match case {
        PositiveCCase::AllInUnit => (0, n, 0),
        PositiveCCase::Partial { j } => (odd(n - j), j, 0),
        PositiveCCase::SmallB => (odd(n), 0, 0),
        PositiveCCase::NegativeB { j } => (odd(n - j), 0, j),
        PositiveCCase::BelowMinusN => (0, 0, n),
    };
    CountPrediction::new(n, n1, n2, n3, Provenance::PositiveC(case))
}

/// Regional table for `c < 0`, `b > 0`, `c - b > 1 - n`.
fn negative_c_positive_b(p: &Params) -> Result<CountPrediction> {
    let n = p.n();
    let k = negative_window(p.c(), "c")?;
    let j = negative_window(&p.c_minus_b(), "c - b")?;
    if j < k {
        return Err(Error::Inconsistent(format!("window indices j = {j} < k = {k}")));
    }
    CountPrediction::new(n, (n - j) % 2, j - k, k % 2, Provenance::NegativeCPositiveB { j, k })
}

/// Regional table for `1 - n < b, c, c - b < 0`.
fn all_negative(p: &Params) -> Result<CountPrediction> {
    let n = p.n();
    let j = negative_window(p.b(), "b")?;
    let k = negative_window(p.c(), "c")?;
    let l = negative_window(&p.c_minus_b(), "c - b")?;
    CountPrediction::new(
        n,
        (n + j + l) % 2,
        (k + l) % 2,
        (j + k) % 2,
        Provenance::AllNegative { j, k, l },
    )
}

/// The regional table whose hypotheses hold for `p`, if any.
fn direct(p: &Params) -> Option<Result<CountPrediction>> {
    let lower = Scalar::int(1 - p.n() as i64);
    let zero = Scalar::zero();
    let (b, c, cmb) = (p.b(), p.c(), p.c_minus_b());
    if c.gt(&zero) {
        return Some(positive_c(p));
    }
    if c.lt(&zero) && b.gt(&zero) && cmb.gt(&lower) {
        return Some(negative_c_positive_b(p));
    }
    let inside = |x: &Scalar| x.gt(&lower) && x.lt(&zero);
    if inside(b) && inside(c) && inside(&cmb) {
        return Some(all_negative(p));
    }
    None
}

/// Counts from the regional case tables, reducing negative-`c` parameters
/// that fall outside them through one transformation.
pub fn classify_region(p: &Params) -> Result<CountPrediction> {
    require_general_position(p)?;
    if let Some(found) = direct(p) {
        return found;
    }
    let candidates = [
        (Transform::Euler, euler_reflect(p).map(|r| r.params)),
        (Transform::Invert, invert(p).map(|r| r.params)),
        (Transform::Pfaff, Ok(pfaff(p).params)),
    ];
    for (via, target) in candidates {
        let Ok(target) = target else { continue };
        if let Some(found) = direct(&target) {
            return found.map(|t| t.pulled_back(via));
        }
    }
    Err(Error::Inconsistent(format!("no regional case covers {p}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, b: &str, c: &str) -> Params {
        Params::parse(n, b, c).unwrap()
    }

    #[test]
    fn klein_symbol() {
        assert_eq!(klein_e(&Scalar::int(-3)), 0);
        assert_eq!(klein_e(&Scalar::int(0)), 0);
        assert_eq!(klein_e(&Scalar::ratio(5, 2)), 2);
        assert_eq!(klein_e(&Scalar::int(4)), 3);
        assert_eq!(klein_e(&Scalar::int(1)), 0);
        assert_eq!(klein_e(&Scalar::Float(2.5)), 2);
        assert_eq!(klein_e(&Scalar::Float(4.0 - 1e-13)), 3);
        assert_eq!(klein_e(&Scalar::Float(-0.3)), 0);
    }

    #[test]
    fn xyz_values() {
        assert_eq!(xyz(&params(3, "10", "2")), KleinXYZ { x: 0, y: 3, z: 0 });
        // c < 0, b > 0, c - b > 1 - n: X = E(1-c-n), Y = E(b), Z = E(c-b)
        let p = params(6, "27/10", "-13/10");
        assert_eq!(xyz(&p), KleinXYZ { x: 0, y: 2, z: 0 });
        let p = params(3, "-1/2", "-7/10");
        assert_eq!(xyz(&p), KleinXYZ { x: 0, y: 0, z: 0 });
    }

    #[test]
    fn binomial_signs() {
        assert_eq!(binomial_sign(&Scalar::ratio(-5, 2), 3), -1);
        assert_eq!(binomial_sign(&Scalar::ratio(-5, 2), 4), 1);
        // b - c > n gives a positive binomial
        for n in 1..6 {
            assert_eq!(binomial_sign(&Scalar::ratio(2 * n as i64 + 3, 2), n), 1);
        }
        assert_eq!(binomial_sign(&Scalar::int(2), 5), 0);
        assert_eq!(binomial_sign(&Scalar::int(7), 5), 1);
    }

    #[test]
    fn hilbert_klein_examples() {
        let c = predict_counts(&params(3, "10", "2")).unwrap();
        assert_eq!((c.counts(), c.nonreal_pairs), ((0, 3, 0), 0));
        let c = predict_counts(&params(2, "1/2", "1")).unwrap();
        assert_eq!((c.counts(), c.nonreal_pairs), ((0, 0, 0), 1));
        let c = predict_counts(&params(4, "-9/2", "1")).unwrap();
        assert_eq!((c.counts(), c.nonreal_pairs), ((0, 0, 4), 0));
        assert_eq!(c.provenance.tag(), "thm3.1");
    }

    #[test]
    fn hilbert_klein_rejects_non_general_position() {
        assert!(predict_counts(&params(3, "-2", "5/2")).unwrap_err().is_boundary());
        assert!(predict_counts(&params(3, "7/2", "3/2")).unwrap_err().is_boundary());
        assert!(predict_counts(&params(3, "1", "1")).unwrap_err().is_boundary());
    }

    #[test]
    fn positive_c_cases() {
        let c = classify_region(&params(5, "7/2", "1")).unwrap();
        assert_eq!(c.provenance, Provenance::PositiveC(PositiveCCase::Partial { j: 3 }));
        assert_eq!((c.counts(), c.nonreal_pairs), ((0, 3, 0), 1));
        assert_eq!(classify_region(&params(3, "10", "2")).unwrap().provenance.tag(), "thm3.2.i");
        let c = classify_region(&params(3, "1/2", "2")).unwrap();
        assert_eq!((c.provenance.tag().as_str(), c.counts()), ("thm3.2.iii", (1, 0, 0)));
        let c = classify_region(&params(4, "-5/2", "2")).unwrap();
        assert_eq!((c.provenance.tag().as_str(), c.counts()), ("thm3.2.iv", (1, 0, 3)));
        let c = classify_region(&params(4, "-9/2", "2")).unwrap();
        assert_eq!((c.provenance.tag().as_str(), c.counts()), ("thm3.2.v", (0, 0, 4)));
    }

    #[test]
    fn positive_c_boundaries() {
        for (n, b, c) in [(3, "5", "2"), (3, "4", "2"), (3, "2", "2"), (3, "-3", "2"), (2, "1", "1")] {
            let e = classify_region(&params(n, b, c)).unwrap_err();
            assert!(e.is_boundary(), "{n} {b} {c}: {e}");
        }
    }

    #[test]
    fn negative_c_positive_b_case() {
        let p = params(4, "1/2", "-7/5");
        let c = classify_region(&p).unwrap();
        assert_eq!(c.provenance, Provenance::NegativeCPositiveB { j: 2, k: 2 });
        assert_eq!(c.provenance.parity_case(4), Some('a'));
        assert_eq!((c.counts(), c.nonreal_pairs), ((0, 0, 0), 2));
    }

    #[test]
    fn all_negative_case() {
        let c = classify_region(&params(3, "-1/2", "-7/10")).unwrap();
        assert_eq!(c.provenance, Provenance::AllNegative { j: 1, k: 1, l: 1 });
        assert_eq!((c.counts(), c.nonreal_pairs), ((1, 0, 0), 1));
    }

    #[test]
    fn reductions_cover_negative_c() {
        // c - b < 1 - n
        let c = classify_region(&params(3, "9/2", "-1/2")).unwrap();
        assert!(c.provenance.tag().starts_with("reduced-via-euler:thm3.2"));
        // b < 1 - n with c - b > 1 - n
        let c = classify_region(&params(3, "-5/2", "-3/4")).unwrap();
        assert!(c.provenance.tag().starts_with("reduced-via-invert:thm3.2"), "{}", c.provenance);
        // 1 - n < b < 0 < c - b
        let c = classify_region(&params(4, "-3/2", "-1/2")).unwrap();
        assert_eq!(c.provenance.tag(), "reduced-via-pfaff:thm3.3");
        // 1 - n < b < 0, c - b < 0, c < 1 - n
        let c = classify_region(&params(4, "-5/4", "-7/2")).unwrap();
        assert_eq!(c.provenance.tag(), "reduced-via-invert:thm3.3");
        for p in [params(3, "9/2", "-1/2"), params(3, "-5/2", "-3/4"), params(4, "-3/2", "-1/2"), params(4, "-5/4", "-7/2")] {
            assert_eq!(classify_region(&p).unwrap().counts(), predict_counts(&p).unwrap().counts(), "{p}");
        }
    }

    #[test]
    fn pfaff_swaps_unit_and_negative_counts() {
        let p = params(7, "13/3", "5/7");
        let a = predict_counts(&p).unwrap();
        let b = predict_counts(&pfaff(&p).params).unwrap();
        assert_eq!((a.n1, a.n2, a.n3), (b.n1, b.n3, b.n2));
    }

    #[test]
    fn float_mode_matches_exact_mode() {
        for (n, b, c) in [(5, "7/2", "1"), (4, "1/2", "-7/5"), (3, "-1/2", "-7/10"), (6, "-13/3", "-11/4")] {
            let pe = params(n, b, c);
            let pf = pe.to_float();
            assert_eq!(predict_counts(&pe).unwrap(), predict_counts(&pf).unwrap());
            assert_eq!(classify_region(&pe).unwrap(), classify_region(&pf).unwrap());
        }
    }
}
