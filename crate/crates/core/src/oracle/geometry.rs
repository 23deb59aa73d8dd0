//! Classification of computed roots into the canonical intervals, the
//! circle `|z - 1| = 1` and the four regions it cuts with the real axis.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::oracle::roots::RootSet;

/// Default width of the real-axis and circle dead bands.
pub const DEAD_BAND: f64 = 1e-9;

/// One of the four open regions bounded by `|z - 1| = 1` and the real axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Region {
    InsideUpper,
    InsideLower,
    OutsideUpper,
    OutsideLower,
}

impl Region {
    pub const ALL: [Region; 4] =
        [Region::InsideUpper, Region::InsideLower, Region::OutsideUpper, Region::OutsideLower];

    fn index(self) -> usize {
        self as usize
    }
}

/// Observed root geometry, shaped like a geometry prediction.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GeometryObservation {
    pub degree: u32,
    /// Roots (real or not) with `| |z - 1| - 1 | <= tol`.
    pub on_circle: u32,
    pub real_gt1: u32,
    pub real_in01: u32,
    pub real_neg: u32,
    /// Real roots at exactly 0 or 1 (within `tol`).
    pub real_at_endpoint: u32,
    pub nonreal: u32,
    /// Non-real roots off the circle, indexed as [`Region::ALL`].
    pub per_region: [u32; 4],
    pub max_circle_deviation: f64,
    pub min_separation: f64,
}

impl GeometryObservation {
    pub fn real(&self) -> u32 {
        self.real_gt1 + self.real_in01 + self.real_neg + self.real_at_endpoint
    }

    pub fn in_region(&self, r: Region) -> u32 {
        self.per_region[r.index()]
    }
}

/// Region of a non-real point off the circle, or `None` inside the band.
pub fn region_of(z: Complex64, tol: f64) -> Option<Region> {
    let d = (z - 1.0).norm() - 1.0;
    if d.abs() <= tol || z.im.abs() <= tol {
        return None;
    }
    Some(match (d < 0.0, z.im > 0.0) {
        (true, true) => Region::InsideUpper,
        (true, false) => Region::InsideLower,
        (false, true) => Region::OutsideUpper,
        (false, false) => Region::OutsideLower,
    })
}

/// Counts roots by interval, circle band and region, with multiplicity.
pub fn geometry_report(r: &RootSet, tol: f64) -> GeometryObservation {
    let mut obs = GeometryObservation { min_separation: f64::INFINITY, ..Default::default() };
    for root in &r.roots {
        let z = root.value;
        let m = root.multiplicity;
        obs.degree += m;
        let dev = ((z - 1.0).norm() - 1.0).abs();
        obs.max_circle_deviation = obs.max_circle_deviation.max(dev);
        if dev <= tol {
            obs.on_circle += m;
        }
        if z.im.abs() <= tol {
            let x = z.re;
            if (x - 1.0).abs() <= tol || x.abs() <= tol {
                obs.real_at_endpoint += m;
            } else if x > 1.0 {
                obs.real_gt1 += m;
            } else if x > 0.0 {
                obs.real_in01 += m;
            } else {
                obs.real_neg += m;
            }
        } else {
            obs.nonreal += m;
            if let Some(region) = region_of(z, tol) {
                obs.per_region[region.index()] += m;
            }
        }
        if m > 1 {
            obs.min_separation = 0.0;
        }
    }
    let values: Vec<Complex64> = r.roots.iter().map(|x| x.value).collect();
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            obs.min_separation = obs.min_separation.min((a - b).norm());
        }
    }
    obs
}
