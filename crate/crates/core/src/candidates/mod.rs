//! Candidate boxes: growth queries, seeded completion, and the
//! enumerators for the support patterns.

pub mod corners;
pub mod growth;
pub mod pattern;
pub mod sweep;

use crate::geom::{Box3, Direction};
use serde::{Deserialize, Serialize};
use std::fmt;

pub use growth::{complete, grow, grow_scan, GrowthImpl};
pub use pattern::classify_supports;

/// What stops one face of a box from moving further.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Support {
    /// Index into `Scene::retained`.
    Blue(usize),
    SmaxBound(Direction),
    Unbounded(Direction),
}

/// The support-location pattern of a candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseLabel {
    /// One of the eight patterns, `1..=8`.
    Case(u8),
    /// Every face rests on the `s_max` boundary.
    Trivial,
    /// None of the eight patterns matches.
    Beyond,
    Oracle,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::Case(k) => write!(f, "case{k}"),
            CaseLabel::Trivial => f.write_str("trivial"),
            CaseLabel::Beyond => f.write_str("beyond"),
            CaseLabel::Oracle => f.write_str("oracle"),
        }
    }
}

/// The enumerator that produced a candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    PairSweep,
    Case7,
    Case8,
    Supplementary,
    Trivial,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::PairSweep => "pair_sweep",
            Source::Case7 => "case7",
            Source::Case8 => "case8",
            Source::Supplementary => "supplementary",
            Source::Trivial => "trivial",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CandidateBox {
    pub bx: Box3,
    /// Indexed by [`Direction::index`].
    pub supports: [Support; 6],
    pub case_label: CaseLabel,
    pub source: Source,
}

impl CandidateBox {
    pub fn volume(&self) -> f64 {
        crate::geom::volume(&self.bx)
    }

    pub fn support(&self, d: Direction) -> Support {
        self.supports[d.index()]
    }
}

/// Larger volume wins; ties go to the lexicographically smallest `(lo, hi)`.
pub fn better(a: &CandidateBox, b: &CandidateBox) -> bool {
    match a.volume().total_cmp(&b.volume()) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => a.bx.lex_cmp(&b.bx).is_lt(),
    }
}
