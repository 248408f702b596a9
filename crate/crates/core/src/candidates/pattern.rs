//! Support-location patterns.
//!
//! Positions are strict: a support lies in the halfspace beyond face `H`
//! only if it is strictly beyond the plane of `H`. A boundary support is a
//! virtual point just beyond its face, or on the plane when its face did
//! not move.

use super::{CaseLabel, Support};
use crate::geom::{Box3, Direction, Point3};
use crate::system::{Faces, System};

/// Per-axis sign of a point relative to `s_min`.
pub type Position = [i8; 3];

pub fn position_of(s_min: &Box3, p: &Point3) -> Position {
    [0, 1, 2].map(|a| {
        if p.coord(a) > s_min.hi[a] {
            1
        } else if p.coord(a) < s_min.lo[a] {
            -1
        } else {
            0
        }
    })
}

/// Positions of the six supports of a box with faces `bx`.
pub fn support_positions(s_min: &Box3, points: &[Point3], sup: &[Support; 6], bx: &Box3) -> [Position; 6] {
    Direction::ALL.map(|d| match sup[d.index()] {
        Support::Blue(i) => position_of(s_min, &points[i]),
        Support::SmaxBound(e) | Support::Unbounded(e) => {
            let mut p = [0i8; 3];
            if e.key(bx.face(e)) > e.key(s_min.face(e)) {
                p[e.axis()] = if e.is_positive() { 1 } else { -1 };
            }
            p
        }
    })
}

fn sign(d: Direction) -> i8 {
    if d.is_positive() {
        1
    } else {
        -1
    }
}

fn in_h(p: &Position, h: Direction) -> bool {
    p[h.axis()] == sign(h)
}

/// `p` lies exactly in the region beyond all of `dirs` and no other face.
fn in_region(p: &Position, dirs: &[Direction]) -> bool {
    (0..3).all(|a| match dirs.iter().find(|d| d.axis() == a) {
        Some(&d) => p[a] == sign(d),
        None => p[a] == 0,
    })
}

fn count(pos: &[Position; 6], f: impl Fn(&Position) -> bool) -> usize {
    pos.iter().filter(|p| f(p)).count()
}

fn perpendicular(h: Direction) -> impl Iterator<Item = Direction> {
    Direction::ALL.into_iter().filter(move |d| d.axis() != h.axis())
}

fn third_axis(h: Direction, k: Direction) -> [Direction; 2] {
    let a = 3 - h.axis() - k.axis();
    [Direction::new(a, true), Direction::new(a, false)]
}

pub fn max_per_halfspace(pos: &[Position; 6]) -> usize {
    Direction::ALL.iter().map(|&h| count(pos, |p| in_h(p, h))).max().unwrap_or(0)
}

pub fn max_per_corner(pos: &[Position; 6]) -> usize {
    corners().iter().map(|c| count(pos, |p| in_region(p, c))).max().unwrap_or(0)
}

fn corners() -> Vec<[Direction; 3]> {
    let mut out = Vec::new();
    for x in [Direction::Left, Direction::Right] {
        for y in [Direction::Back, Direction::Front] {
            for z in [Direction::Bottom, Direction::Top] {
                out.push([x, y, z]);
            }
        }
    }
    out
}

/// First matching pattern among the eight cases.
pub fn classify_supports(sup: &[Support; 6], pos: &[Position; 6]) -> CaseLabel {
    if sup.iter().all(|s| !matches!(s, Support::Blue(_))) {
        return CaseLabel::Trivial;
    }
    for k in 1..=8u8 {
        if matches_case(k, pos) {
            return CaseLabel::Case(k);
        }
    }
    CaseLabel::Beyond
}

pub fn matches_case(k: u8, pos: &[Position; 6]) -> bool {
    if k == 8 {
        return corners().iter().any(|c| {
            let opp = c.map(|d| d.opposite());
            count(pos, |p| in_region(p, c)) == 3 && count(pos, |p| in_region(p, &opp)) == 3
        });
    }
    let want = if k <= 4 { 5 } else { 4 };
    Direction::ALL.into_iter().any(|h| {
        count(pos, |p| in_h(p, h)) == want
            && perpendicular(h).any(|hp| {
                let both = count(pos, |p| in_h(p, h) && in_h(p, hp));
                let [zp, zn] = third_axis(h, hp);
                let edge = |z: Direction| count(pos, |p| in_region(p, &[h, z]));
                let corner = |z: Direction| count(pos, |p| in_region(p, &[h, hp, z]));
                match k {
                    1 => both == 4,
                    2 => both == 3,
                    3 => both == 2 && edge(zp) + edge(zn) >= 1,
                    4 => edge(zp) > 0 && edge(zn) > 0 && edge(zp) + edge(zn) == 3,
                    5 => count(pos, |p| in_h(p, h) && !in_h(p, hp)) == 3,
                    6 => corner(zp) == 1 && corner(zn) == 1,
                    7 => corner(zp) == 2 || corner(zn) == 2,
                    _ => false,
                }
            })
    })
}

/// Label for a box given in face keys of `sys`.
pub fn label(sys: &System, sup: &[Support; 6], f: &Faces) -> CaseLabel {
    let s_min = crate::system::box_of(&sys.base);
    let bx = crate::system::box_of(f);
    classify_supports(sup, &support_positions(&s_min, &sys.points, sup, &bx))
}
