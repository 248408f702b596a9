//! Maximum-volume axis-aligned box that contains every red point and no
//! blue point in its open interior, in three dimensions.

pub mod bench;
pub mod candidates;
pub mod case7;
pub mod dataset;
pub mod error;
pub mod generate;
pub mod geom;
pub mod oracle;
pub mod preprocess;
pub mod regions;
pub mod report;
pub mod selftest;
pub mod smawk;
pub mod solver;
pub mod system;

pub use candidates::{CandidateBox, CaseLabel, GrowthImpl, Source, Support};
pub use error::{Error, Result};
pub use geom::{Box3, Direction, Point3};
pub use preprocess::{build_scene, RegionId, Scene};
pub use solver::{solve, Case7Impl, Outcome, SolveOptions, SolveResult};
