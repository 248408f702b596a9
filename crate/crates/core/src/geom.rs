//! Points, boxes, and the six face directions.
//!
//! Orientation: right = +X, front = +Y, top = +Z. All predicates compare
//! `f64` values exactly.

use serde::{Deserialize, Serialize};
use std::fmt;

pub type Axis = usize;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn coord(&self, axis: Axis) -> f64 {
        match axis {
            0 => self.x,
            1 => self.y,
            2 => self.z,
            _ => panic!("axis out of range: {axis}"),
        }
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl From<[f64; 3]> for Point3 {
    fn from(c: [f64; 3]) -> Self {
        Point3::new(c[0], c[1], c[2])
    }
}

/// A face direction. The discriminant is `2 * axis + (positive as usize)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Left = 0,
    Right = 1,
    Back = 2,
    Front = 3,
    Bottom = 4,
    Top = 5,
}

impl Direction {
    pub const ALL: [Direction; 6] = [
        Direction::Left,
        Direction::Right,
        Direction::Back,
        Direction::Front,
        Direction::Bottom,
        Direction::Top,
    ];

    pub fn from_index(i: usize) -> Direction {
        Direction::ALL[i]
    }

    pub fn new(axis: Axis, positive: bool) -> Direction {
        Direction::ALL[2 * axis + positive as usize]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn axis(self) -> Axis {
        self.index() / 2
    }

    pub fn is_positive(self) -> bool {
        self.index() % 2 == 1
    }

    pub fn opposite(self) -> Direction {
        Direction::ALL[self.index() ^ 1]
    }

    /// Maps a coordinate on this direction's axis to a key that grows as
    /// the face moves outward. Negation is exact, so keys round-trip.
    pub fn key(self, coord: f64) -> f64 {
        if self.is_positive() {
            coord
        } else {
            -coord
        }
    }

    pub fn unkey(self, key: f64) -> f64 {
        self.key(key)
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::Left => "left",
            Direction::Right => "right",
            Direction::Back => "back",
            Direction::Front => "front",
            Direction::Bottom => "bottom",
            Direction::Top => "top",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Axis-aligned box; bounds may be infinite.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Box3 {
    pub lo: [f64; 3],
    pub hi: [f64; 3],
}

impl Box3 {
    pub fn new(lo: [f64; 3], hi: [f64; 3]) -> Self {
        Box3 { lo, hi }
    }

    pub fn unbounded() -> Self {
        Box3 {
            lo: [f64::NEG_INFINITY; 3],
            hi: [f64::INFINITY; 3],
        }
    }

    pub fn is_valid(&self) -> bool {
        (0..3).all(|a| self.lo[a] <= self.hi[a])
    }

    pub fn face(&self, d: Direction) -> f64 {
        if d.is_positive() {
            self.hi[d.axis()]
        } else {
            self.lo[d.axis()]
        }
    }

    pub fn set_face(&mut self, d: Direction, v: f64) {
        if d.is_positive() {
            self.hi[d.axis()] = v;
        } else {
            self.lo[d.axis()] = v;
        }
    }

    pub fn face_key(&self, d: Direction) -> f64 {
        d.key(self.face(d))
    }

    pub fn extent(&self, axis: Axis) -> f64 {
        self.hi[axis] - self.lo[axis]
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.iter().chain(self.hi.iter()).all(|v| v.is_finite())
    }

    /// `b` contains `self` on every axis (closed intervals).
    pub fn is_subset_of(&self, b: &Box3) -> bool {
        (0..3).all(|a| b.lo[a] <= self.lo[a] && self.hi[a] <= b.hi[a])
    }

    /// Lexicographic order on `(lo, hi)`, used for tie-breaking.
    pub fn lex_cmp(&self, other: &Box3) -> std::cmp::Ordering {
        let a = self.lo.iter().chain(self.hi.iter());
        let b = other.lo.iter().chain(other.hi.iter());
        for (x, y) in a.zip(b) {
            match x.total_cmp(y) {
                std::cmp::Ordering::Equal => continue,
                o => return o,
            }
        }
        std::cmp::Ordering::Equal
    }
}

/// Product of the extents; `+inf` when any bound is infinite.
pub fn volume(b: &Box3) -> f64 {
    if !b.is_bounded() {
        return f64::INFINITY;
    }
    b.extent(0) * b.extent(1) * b.extent(2)
}

pub fn contains_closed(b: &Box3, p: &Point3) -> bool {
    (0..3).all(|a| b.lo[a] <= p.coord(a) && p.coord(a) <= b.hi[a])
}

pub fn contains_open(b: &Box3, p: &Point3) -> bool {
    (0..3).all(|a| b.lo[a] < p.coord(a) && p.coord(a) < b.hi[a])
}
