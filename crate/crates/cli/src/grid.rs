//! Parameter grids for `verify` and `sweep`.

use std::str::FromStr;

use hyperzero::{Error, Scalar};

/// One axis of a grid: a single value, or `steps` cells between `min` and
/// `max` sampled once each.
#[derive(Clone, Debug, PartialEq)]
pub struct Axis {
    pub min: Scalar,
    pub max: Scalar,
    pub steps: u32,
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => {
                let v: Scalar = v.parse()?;
                Ok(Axis { min: v.clone(), max: v, steps: 1 })
            }
            [min, max, steps] => {
                let steps: u32 = steps
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("step count {steps:?}")))?;
                if steps == 0 {
                    return Err(Error::InvalidParameter("a range needs at least one step".into()));
                }
                Ok(Axis { min: min.parse()?, max: max.parse()?, steps })
            }
            _ => Err(Error::Parse(format!("{s:?} is neither a value nor MIN:MAX:STEPS"))),
        }
    }
}

impl Axis {
    pub fn is_single(&self) -> bool {
        self.min.strict_cmp(&self.max).is_none()
    }

    pub fn step(&self) -> Scalar {
        (&self.max - &self.min) / Scalar::int(self.steps as i64)
    }

    /// Grid points `min + margin + i * step` that do not pass `max`. The
    /// margin defaults to half a step, so points sit mid-cell. A reversed
    /// range is empty.
    pub fn points(&self, margin: Option<&Scalar>) -> Vec<Scalar> {
        if self.is_single() {
            return vec![self.min.clone()];
        }
        if self.max.lt(&self.min) {
            return Vec::new();
        }
        let step = self.step();
        let margin = margin.cloned().unwrap_or_else(|| &step * Scalar::ratio(1, 2));
        (0..self.steps as i64)
            .map(|i| &self.min + &margin + &step * Scalar::int(i))
            .filter(|v| !v.gt(&self.max))
            .collect()
    }
}

/// A degree and a `(b, c)` grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub n: u32,
    pub b: Axis,
    pub c: Axis,
    pub margin: Option<Scalar>,
}

impl SweepSpec {
    pub fn parse(n: u32, b: &str, c: &str, margin: Option<&str>) -> Result<Self, Error> {
        let margin = margin.map(str::parse::<Scalar>).transpose()?;
        if let Some(m) = &margin {
            if !m.gt(&Scalar::zero()) {
                return Err(Error::InvalidParameter(format!("margin {m} must be positive")));
            }
        }
        if n == 0 {
            return Err(Error::InvalidParameter("degree n must be at least 1".into()));
        }
        Ok(SweepSpec { n, b: b.parse()?, c: c.parse()?, margin })
    }

    pub fn is_single(&self) -> bool {
        self.b.is_single() && self.c.is_single()
    }

    /// Grid points with `b` varying slowest.
    pub fn points(&self) -> Vec<(Scalar, Scalar)> {
        let cs = self.c.points(self.margin.as_ref());
        self.b
            .points(self.margin.as_ref())
            .into_iter()
            .flat_map(|b| cs.iter().map(move |c| (b.clone(), c.clone())))
            .collect()
    }
}
