//! Real and complex zeros of the hypergeometric polynomial `F(-n, b; c; z)`.
//!
//! Parameters are either exact rationals or `f64`. Predictions of how many
//! zeros fall in `(1, inf)`, `(0, 1)` and `(-inf, 0)` come from [`klein`];
//! zero geometry for the families `c = 2b`, `c = 1/2` and `c = -2n` comes
//! from [`special`]. [`oracle`] checks both against Sturm chains and a
//! numerical root solver.

pub mod error;
pub mod hypergeom;
pub mod klein;
pub mod oracle;
pub mod orthogonal;
pub mod scalar;
pub mod special;
pub mod transforms;

pub use error::{Error, Result};
pub use hypergeom::{coefficients, evaluate, Params, Poly};
pub use klein::{classify_region, predict_counts, CountPrediction, Provenance};
pub use scalar::{Mode, Scalar};
pub use special::{Family, GeometryPrediction};
pub use transforms::{Interval, Transform};
