//! Independent ground truth: exact interval counts and numerical roots.

pub mod geometry;
pub mod roots;
pub mod sturm;
pub mod verify;

pub use geometry::{geometry_report, GeometryObservation, Region, DEAD_BAND};
pub use roots::{all_roots, Root, RootSet};
pub use sturm::{sturm_counts, SturmChain, SturmCounts};
pub use verify::{verify, verify_with, Confidence, FieldCheck, ObservedCounts, Outcome, VerificationReport};
