//! Zero geometry of three quadratic-class families: `c = 2b`, `c = 1/2`
//! and `c = -2n`.
//!
//! For `c = 2b` the circle `|z - 1| = 1` and the real axis cut the plane
//! into four regions; non-real zeros off the circle are reported per region
//! (the count is the same in all four by conjugate and inversion symmetry).
//! Where a case only says that some zeros are real, without naming the
//! interval, they are counted in `real_unlocated`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeom::Params;
use crate::scalar::Scalar;
use crate::transforms::QuadraticTemplate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `F(-n, b; 2b; z)`
    DoubleB,
    /// `F(-n, b; 1/2; z)`
    Half,
    /// `F(-n, b; -2n; z)`
    MinusTwoN,
}

impl Family {
    fn theorem(self) -> &'static str {
        match self {
            Family::DoubleB => "thm2.1",
            Family::Half => "thm2.2",
            Family::MinusTwoN => "thm2.3",
        }
    }

    pub fn template(self) -> QuadraticTemplate {
        match self {
            Family::DoubleB => QuadraticTemplate::DoubleB,
            Family::Half => QuadraticTemplate::CHalf,
            Family::MinusTwoN => QuadraticTemplate::CMinusTwoN,
        }
    }

    pub fn params(self, n: u32, b: Scalar) -> Result<Params> {
        let c = match self {
            Family::DoubleB => &b * 2,
            Family::Half => Scalar::ratio(1, 2),
            Family::MinusTwoN => Scalar::int(-2 * n as i64),
        };
        Params::new(n, b, c)
    }

    pub fn predict(self, n: u32, b: &Scalar) -> Result<GeometryPrediction> {
        match self {
            Family::DoubleB => predict_2b(n, b),
            Family::Half => predict_half(n, b),
            Family::MinusTwoN => predict_minus2n(n, b),
        }
    }

    /// Every family `p` belongs to (`c = 2b = 1/2` is in two).
    pub fn of(p: &Params, tol: f64) -> Vec<Family> {
        [Family::DoubleB, Family::Half, Family::MinusTwoN]
            .into_iter()
            .filter(|f| f.template().matches(p, tol))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryCase {
    pub family: Family,
    /// Case number, 1-based.
    pub case: u8,
    /// Window index `j` or `k` of the case, where it has one.
    pub index: Option<u32>,
}

impl GeometryCase {
    pub fn tag(&self) -> String {
        const ROMAN: [&str; 5] = ["i", "ii", "iii", "iv", "v"];
        format!("{}.{}", self.family.theorem(), ROMAN[self.case as usize - 1])
    }
}

impl fmt::Display for GeometryCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())?;
        if let Some(i) = self.index {
            write!(f, "[{i}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeometryPrediction {
    pub degree: u32,
    /// Zeros on `|z - 1| = 1`, when the case says.
    pub on_circle: Option<u32>,
    pub real_gt1: u32,
    pub real_in01: u32,
    pub real_neg: u32,
    /// Real zeros whose interval the case does not state.
    pub real_unlocated: u32,
    pub nonreal: u32,
    /// Non-real zeros off the circle in each of the four regions.
    pub per_region: Option<u32>,
    pub fixed_points: Vec<f64>,
    pub case: GeometryCase,
}

impl GeometryPrediction {
    fn new(degree: u32, case: GeometryCase) -> Self {
        GeometryPrediction {
            degree,
            on_circle: None,
            real_gt1: 0,
            real_in01: 0,
            real_neg: 0,
            real_unlocated: 0,
            nonreal: 0,
            per_region: None,
            fixed_points: Vec::new(),
            case,
        }
    }

    pub fn real(&self) -> u32 {
        self.real_gt1 + self.real_in01 + self.real_neg + self.real_unlocated
    }

    pub fn accounted(&self) -> u32 {
        self.real() + self.nonreal
    }
}

fn boundary(family: Family, n: u32, b: &Scalar) -> Error {
    Error::Boundary(format!("b = {b} is a window endpoint of {} for n = {n}", family.theorem()))
}

/// Geometry of `F(-n, b; 2b; z)`.
pub fn predict_2b(n: u32, b: &Scalar) -> Result<GeometryPrediction> {
    let family = Family::DoubleB;
    family.params(n, b.clone())?;
    let half = Scalar::ratio(1, 2);
    let m = (n / 2) as i64;
    let odd = n % 2;
    let at = |case: u8, index: Option<u32>| GeometryCase { family, case, index };
    let bd = || boundary(family, n, b);
    let mut g;
    let zero_half = -&half;

    if b.gt(&zero_half) {
        // (i) every zero simple and on the circle; z = 2 is the only real one
        g = GeometryPrediction::new(n, at(1, None));
        g.on_circle = Some(n);
        g.real_gt1 = odd;
        g.nonreal = n - odd;
        g.per_region = Some(0);
    } else if b.gt(&(Scalar::int(1 - m) - &half)) && m >= 2 {
        // (ii) -1/2 - j < b < 1/2 - j, j = 1 .. m - 1
        let shifted = b + &half;
        if shifted.is_integer() {
            return Err(bd());
        }
        let j = (-shifted.floor()) as u32;
        let k = j / 2;
        g = GeometryPrediction::new(n, at(2, Some(j)));
        g.on_circle = Some(n - 2 * j);
        g.per_region = Some(k);
        g.real_gt1 = odd;
        g.real_unlocated = if j % 2 == 1 { 2 } else { 0 };
        g.nonreal = n - g.real();
    } else {
        let iii_lo = if odd == 0 { Scalar::int(-m) } else { Scalar::int(-1 - m) };
        let iii_hi = Scalar::int(-m) + &half;
        if b.gt(&iii_lo) && b.lt(&iii_hi) {
            // (iii)
            let k = if odd == 0 { m / 2 } else { (n as i64 - 1) / 4 } as u32;
            let extra = if matches!(n % 4, 2 | 3) { 2 } else { 0 };
            g = GeometryPrediction::new(n, at(3, None));
            g.on_circle = Some(odd);
            g.per_region = Some(k);
            g.real_gt1 = odd;
            g.real_unlocated = extra;
            g.nonreal = 4 * k;
        } else if b.lt(&Scalar::int(1 - n as i64)) {
            // (v) all real and greater than 1
            g = GeometryPrediction::new(n, at(5, None));
            g.real_gt1 = n;
        } else if b.lt(&iii_lo) && b.gt(&Scalar::int(1 - n as i64)) {
            // (iv) j - n < b < j - n + 1, j = 1 .. m - 1
            let shifted = b + n as i64;
            if shifted.is_integer() {
                return Err(bd());
            }
            let j = shifted.floor() as u32;
            let k = j / 2;
            g = GeometryPrediction::new(n, at(4, Some(j)));
            g.real_gt1 = n - 2 * j;
            g.per_region = Some(k);
            g.nonreal = 4 * k;
            g.real_unlocated = if j % 2 == 1 { 2 } else { 0 };
        } else {
            return Err(bd());
        }
    }
    if odd == 1 {
        g.fixed_points.push(2.0);
    }
    Ok(g)
}

/// Geometry of `F(-n, b; 1/2; z)`.
pub fn predict_half(n: u32, b: &Scalar) -> Result<GeometryPrediction> {
    let family = Family::Half;
    family.params(n, b.clone())?;
    let half = Scalar::ratio(1, 2);
    let ni = n as i64;
    let at = |case: u8, index: Option<u32>| GeometryCase { family, case, index };
    let bd = || boundary(family, n, b);
    let g = if b.gt(&(Scalar::int(ni) - &half)) {
        let mut g = GeometryPrediction::new(n, at(1, None));
        g.real_in01 = n;
        g
    } else if b.gt(&half) {
        // n - 1/2 - j < b < n + 1/2 - j
        if (b - &half).is_integer() {
            return Err(bd());
        }
        let j = (Scalar::int(ni) + &half - b).floor() as u32;
        let mut g = GeometryPrediction::new(n, at(2, Some(j)));
        g.real_in01 = n - j;
        g.real_gt1 = j % 2;
        g.nonreal = 2 * (j / 2);
        g
    } else if b.gt(&Scalar::zero()) {
        if b.strict_cmp(&half).is_none() {
            return Err(bd());
        }
        let mut g = GeometryPrediction::new(n, at(3, None));
        g.real_gt1 = n % 2;
        g.nonreal = 2 * (n / 2);
        g
    } else if b.gt(&Scalar::int(1 - ni)) {
        if b.is_integer() {
            return Err(bd());
        }
        let j = (-b.floor()) as u32;
        let mut g = GeometryPrediction::new(n, at(4, Some(j)));
        g.real_neg = j;
        g.real_gt1 = (n - j) % 2;
        g.nonreal = n - j - g.real_gt1;
        g
    } else if b.lt(&Scalar::int(1 - ni)) {
        let mut g = GeometryPrediction::new(n, at(5, None));
        g.real_neg = n;
        g
    } else {
        return Err(bd());
    };
    Ok(g)
}

/// Geometry of `F(-n, b; -2n; z)`.
pub fn predict_minus2n(n: u32, b: &Scalar) -> Result<GeometryPrediction> {
    let family = Family::MinusTwoN;
    family.params(n, b.clone())?;
    let ni = n as i64;
    let at = |case: u8, index: Option<u32>| GeometryCase { family, case, index };
    let bd = || boundary(family, n, b);
    if b.is_integer() && b.floor() <= 0 && b.floor() >= -2 * ni {
        return Err(bd());
    }
    let g = if b.gt(&Scalar::zero()) {
        let mut g = GeometryPrediction::new(n, at(1, None));
        g.real_neg = n % 2;
        g.nonreal = n - n % 2;
        g
    } else if b.gt(&Scalar::int(-ni)) {
        let k = (-b.floor()) as u32;
        let mut g = GeometryPrediction::new(n, at(2, Some(k)));
        g.real_gt1 = k;
        g.real_neg = (n - k) % 2;
        g.nonreal = n - k - g.real_neg;
        g
    } else if b.gt(&Scalar::int(-2 * ni)) {
        // -n - k > b > -n - k - 1
        let k = (-b.floor()) as u32 - n - 1;
        let mut g = GeometryPrediction::new(n, at(3, Some(k)));
        g.real_gt1 = n - k;
        g.real_in01 = k % 2;
        g.nonreal = k - k % 2;
        g
    } else {
        let mut g = GeometryPrediction::new(n, at(4, None));
        g.real_in01 = n % 2;
        g.nonreal = n - n % 2;
        g
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &str) -> Scalar {
        v.parse().unwrap()
    }

    #[test]
    fn double_b_case_one() {
        let g = predict_2b(2, &s("1")).unwrap();
        assert_eq!((g.on_circle, g.nonreal, g.real()), (Some(2), 2, 0));
        assert_eq!(g.case.tag(), "thm2.1.i");
        let g = predict_2b(5, &s("3/7")).unwrap();
        assert_eq!((g.on_circle, g.real_gt1, g.nonreal), (Some(5), 1, 4));
        assert_eq!(g.fixed_points, vec![2.0]);
    }

    #[test]
    fn double_b_case_three_odd() {
        let g = predict_2b(5, &s("-29/10")).unwrap();
        assert_eq!(g.case.tag(), "thm2.1.iii");
        assert_eq!((g.on_circle, g.real_gt1, g.nonreal, g.per_region), (Some(1), 1, 4, Some(1)));
        let g = predict_2b(7, &s("-7/2")).unwrap();
        assert_eq!((g.on_circle, g.real(), g.real_unlocated, g.nonreal), (Some(1), 3, 2, 4));
    }

    #[test]
    fn double_b_case_three_even() {
        let g = predict_2b(4, &s("-7/4")).unwrap();
        assert_eq!((g.case.tag().as_str(), g.on_circle, g.nonreal), ("thm2.1.iii", Some(0), 4));
        let g = predict_2b(6, &s("-11/4")).unwrap();
        assert_eq!((g.real_unlocated, g.nonreal, g.per_region), (2, 4, Some(1)));
    }

    #[test]
    fn double_b_cases_two_and_four() {
        // n = 8, j = 3: -7/2 < b < -5/2
        let g = predict_2b(8, &s("-3")).unwrap_err();
        assert!(matches!(g, Error::InvalidParameter(_)), "b = -3 makes c = -6 excluded");
        let g = predict_2b(8, &s("-13/4")).unwrap();
        assert_eq!(g.case, GeometryCase { family: Family::DoubleB, case: 2, index: Some(3) });
        assert_eq!((g.on_circle, g.per_region, g.real_unlocated), (Some(2), Some(1), 2));
        // n = 8, j = 2: -6 < b < -5
        let g = predict_2b(8, &s("-11/2")).unwrap();
        assert_eq!(g.case, GeometryCase { family: Family::DoubleB, case: 4, index: Some(2) });
        assert_eq!((g.real_gt1, g.nonreal, g.per_region), (4, 4, Some(1)));
    }

    #[test]
    fn double_b_case_five() {
        let g = predict_2b(4, &s("-10")).unwrap();
        assert_eq!((g.case.tag().as_str(), g.real_gt1), ("thm2.1.v", 4));
    }

    #[test]
    fn double_b_boundaries() {
        for (n, b) in [(6, "-1/2"), (6, "-3/2"), (6, "-5/2"), (6, "-4"), (6, "-5"), (5, "-2"), (5, "-4"), (2, "-1")] {
            let r = predict_2b(n, &s(b));
            assert!(r.is_err(), "n={n} b={b} gave {r:?}");
        }
    }

    #[test]
    fn double_b_windows_tile_the_line() {
        for n in 1..=12u32 {
            let mut b = s("-30");
            let step = s("1/8");
            while b.lt(&s("3")) {
                let r = predict_2b(n, &b);
                let on_grid_edge = (&b * 2).is_integer();
                match r {
                    Ok(g) => assert_eq!(g.accounted(), n, "n={n} b={b}"),
                    Err(e) => assert!(on_grid_edge, "n={n} b={b}: {e}"),
                }
                b = b + &step;
            }
        }
    }

    #[test]
    fn half_cases() {
        let g = predict_half(3, &s("5")).unwrap();
        assert_eq!((g.case.tag().as_str(), g.real_in01), ("thm2.2.i", 3));
        let g = predict_half(3, &s("1/4")).unwrap();
        assert_eq!((g.case.tag().as_str(), g.nonreal, g.real_gt1), ("thm2.2.iii", 2, 1));
        let g = predict_half(4, &s("-5")).unwrap();
        assert_eq!((g.case.tag().as_str(), g.real_neg), ("thm2.2.v", 4));
        let g = predict_half(5, &s("2")).unwrap();
        // 5 - 1/2 - j < 2 < 5 + 1/2 - j  =>  j = 3
        assert_eq!((g.case.index, g.real_in01, g.real_gt1, g.nonreal), (Some(3), 2, 1, 2));
        let g = predict_half(5, &s("-23/10")).unwrap();
        assert_eq!((g.case.index, g.real_neg, g.real_gt1, g.nonreal), (Some(3), 3, 0, 2));
        for b in ["1/2", "3/2", "9/2", "0", "-1", "-4"] {
            assert!(predict_half(5, &s(b)).is_err(), "{b}");
        }
    }

    #[test]
    fn minus_2n_cases() {
        let g = predict_minus2n(2, &s("1")).unwrap();
        assert_eq!((g.case.tag().as_str(), g.nonreal), ("thm2.3.i", 2));
        let g = predict_minus2n(3, &s("-3/2")).unwrap();
        assert_eq!((g.case.index, g.real_gt1, g.real_neg, g.nonreal), (Some(2), 2, 1, 0));
        let g = predict_minus2n(3, &s("-7")).unwrap();
        assert_eq!((g.case.tag().as_str(), g.real_in01, g.nonreal), ("thm2.3.iv", 1, 2));
        // -n - k > b > -n - k - 1 with n = 4, k = 1
        let g = predict_minus2n(4, &s("-11/2")).unwrap();
        assert_eq!((g.case.index, g.real_gt1, g.real_in01, g.nonreal), (Some(1), 3, 1, 0));
        for b in ["0", "-1", "-3", "-6"] {
            assert!(predict_minus2n(3, &s(b)).is_err(), "{b}");
        }
    }

    #[test]
    fn family_detection() {
        let p = Params::parse(4, "3/2", "3").unwrap();
        assert_eq!(Family::of(&p, 1e-12), vec![Family::DoubleB]);
        let p = Params::parse(4, "7/3", "-8").unwrap();
        assert_eq!(Family::of(&p, 1e-12), vec![Family::MinusTwoN]);
        let p = Params::parse(4, "7/3", "-7").unwrap();
        assert!(Family::of(&p, 1e-12).is_empty());
        let p = Params::parse(3, "1/4", "1/2").unwrap();
        assert_eq!(Family::of(&p, 1e-12), vec![Family::DoubleB, Family::Half]);
    }
}
