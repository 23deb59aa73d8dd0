use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The parameters do not define a polynomial (degree 0, or `c` in the
    /// excluded set `{0, -1, ..., -n+1}`).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A transformation would land on parameters for which the target
    /// polynomial is undefined.
    #[error("invalid transformation target: {0}")]
    InvalidTarget(String),

    /// The parameters sit on the edge of a counting region, where the
    /// counts are discontinuous and no closed form applies.
    #[error("boundary parameters: {0}")]
    Boundary(String),

    /// A closed-form count produced values that violate its own accounting.
    #[error("inconsistent prediction: {0}")]
    Inconsistent(String),

    /// The operation needs exact rational coefficients.
    #[error("exact rational input required")]
    ExactRequired,

    #[error("degree {degree} exceeds the numeric solver cap of {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },

    #[error("root solver did not converge after {iterations} sweeps (max correction {max_correction:e})")]
    NonConvergence {
        iterations: usize,
        max_correction: f64,
        best: Vec<num_complex::Complex64>,
    },

    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

impl Error {
    pub fn is_boundary(&self) -> bool {
        matches!(self, Error::Boundary(_))
    }
}
