use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hyperzero", version, about = "Zeros of the hypergeometric polynomial F(-n, b; c; z)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Predict how many zeros lie in (1,inf), (0,1) and (-inf,0)
    Classify(ClassifyArgs),
    /// Compute every complex zero numerically
    Roots(PointArgs),
    /// Check predictions against the exact and numeric oracles
    Verify(GridArgs),
    /// Verify a (b, c) grid and write one row per point
    Sweep(SweepArgs),
    /// Spot-check a transformation or orthogonal-polynomial identity
    Identity(IdentityArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
pub struct PointArgs {
    /// Degree n
    #[arg(short = 'n')]
    pub n: u32,
    /// Parameter b: integer, fraction p/q, or decimal
    #[arg(short = 'b', allow_hyphen_values = true)]
    pub b: String,
    /// Parameter c: integer, fraction p/q, or decimal
    #[arg(short = 'c', allow_hyphen_values = true)]
    pub c: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Real-axis and circle band for classifying numeric roots
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Use the closed-form Hilbert-Klein counts instead of the regional tables
    #[arg(long)]
    pub formula: bool,
}

#[derive(Args, Debug)]
pub struct GridArgs {
    /// Degree n
    #[arg(short = 'n')]
    pub n: u32,
    /// A value, or a range MIN:MAX:STEPS
    #[arg(short = 'b', allow_hyphen_values = true)]
    pub b: String,
    /// A value, or a range MIN:MAX:STEPS
    #[arg(short = 'c', allow_hyphen_values = true)]
    pub c: String,
    /// Offset of the first grid point from MIN (default: half a step)
    #[arg(long, allow_hyphen_values = true)]
    pub margin: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Degree n
    #[arg(short = 'n')]
    pub n: u32,
    /// A value, or a range MIN:MAX:STEPS
    #[arg(short = 'b', allow_hyphen_values = true)]
    pub b: String,
    /// A value, or a range MIN:MAX:STEPS
    #[arg(short = 'c', allow_hyphen_values = true)]
    pub c: String,
    /// Offset of the first grid point from MIN (default: half a step)
    #[arg(long, allow_hyphen_values = true)]
    pub margin: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write rows here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Pfaff,
    Euler,
    Invert,
    Jacobi,
    Gegenbauer,
}

impl Which {
    pub fn name(self) -> &'static str {
        match self {
            Which::Pfaff => "pfaff",
            Which::Euler => "euler",
            Which::Invert => "invert",
            Which::Jacobi => "jacobi",
            Which::Gegenbauer => "gegenbauer",
        }
    }
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    /// Identity to check
    #[arg(long, value_enum)]
    pub which: Which,
    /// Fix the degree (random otherwise)
    #[arg(short = 'n', requires_all = ["b", "c"])]
    pub n: Option<u32>,
    /// Fix b (random otherwise)
    #[arg(short = 'b', allow_hyphen_values = true, requires = "n")]
    pub b: Option<String>,
    /// Fix c (random otherwise)
    #[arg(short = 'c', allow_hyphen_values = true, requires = "n")]
    pub c: Option<String>,
    /// Number of random evaluation points
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Relative tolerance
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
