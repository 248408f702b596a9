//! S_min / S_max construction and the 26-region partition of the annulus.

use crate::error::{Error, Result};
use crate::geom::{contains_open, Axis, Box3, Direction, Point3};
use serde::{Deserialize, Serialize};
use std::fmt;

/// One of the 26 regions around `s_min`, given by a per-axis sign:
/// `-1` below `lo`, `0` within `[lo, hi]`, `+1` above `hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RegionId {
    signs: [i8; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionKind {
    Corner,
    Edge,
    Side,
}

impl RegionId {
    pub fn from_signs(signs: [i8; 3]) -> Option<RegionId> {
        let ok = signs.iter().all(|s| (-1..=1).contains(s)) && signs.iter().any(|&s| s != 0);
        ok.then_some(RegionId { signs })
    }

    pub fn corner(sx: i8, sy: i8, sz: i8) -> RegionId {
        assert!(sx != 0 && sy != 0 && sz != 0);
        RegionId::from_signs([sx, sy, sz]).unwrap()
    }

    /// The edge region beyond both faces `a` and `b` (different axes).
    pub fn edge(a: Direction, b: Direction) -> RegionId {
        assert_ne!(a.axis(), b.axis());
        let mut s = [0i8; 3];
        s[a.axis()] = if a.is_positive() { 1 } else { -1 };
        s[b.axis()] = if b.is_positive() { 1 } else { -1 };
        RegionId { signs: s }
    }

    pub fn side(d: Direction) -> RegionId {
        let mut s = [0i8; 3];
        s[d.axis()] = if d.is_positive() { 1 } else { -1 };
        RegionId { signs: s }
    }

    /// All 26 regions in a fixed order.
    pub fn all() -> Vec<RegionId> {
        let mut out = Vec::with_capacity(26);
        for sx in -1..=1 {
            for sy in -1..=1 {
                for sz in -1..=1 {
                    if let Some(r) = RegionId::from_signs([sx, sy, sz]) {
                        out.push(r);
                    }
                }
            }
        }
        out
    }

    pub fn signs(&self) -> [i8; 3] {
        self.signs
    }

    pub fn kind(&self) -> RegionKind {
        match self.signs.iter().filter(|&&s| s != 0).count() {
            3 => RegionKind::Corner,
            2 => RegionKind::Edge,
            _ => RegionKind::Side,
        }
    }

    /// Outward directions of the halfspaces containing this region.
    pub fn directions(&self) -> Vec<Direction> {
        (0..3)
            .filter(|&a| self.signs[a] != 0)
            .map(|a| Direction::new(a, self.signs[a] > 0))
            .collect()
    }

    /// Bit `d.index()` set for each direction in [`RegionId::directions`].
    pub fn mask(&self) -> u8 {
        self.directions().iter().fold(0, |m, d| m | 1 << d.index())
    }

    pub fn in_halfspace(&self, h: HalfspaceId) -> bool {
        self.mask() & (1 << h.direction.index()) != 0
    }
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind() {
            RegionKind::Corner => "corner",
            RegionKind::Edge => "edge",
            RegionKind::Side => "side",
        };
        let names: Vec<&str> = self.directions().iter().map(|d| d.name()).collect();
        write!(f, "{kind}({})", names.join(","))
    }
}

/// Open halfspace beyond one face of `s_min`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HalfspaceId {
    pub direction: Direction,
}

impl HalfspaceId {
    pub fn all() -> [HalfspaceId; 6] {
        Direction::ALL.map(|direction| HalfspaceId { direction })
    }

    pub fn is_perpendicular(&self, other: &HalfspaceId) -> bool {
        self.direction.axis() != other.direction.axis()
    }
}

/// Preprocessed input: the two reference boxes and the blue points that
/// can still constrain a solution.
#[derive(Clone, Debug)]
pub struct Scene {
    pub s_min: Box3,
    pub s_max: Box3,
    /// Retained blue points, sorted by x, then y, then z.
    pub retained: Vec<Point3>,
    pub regions: Vec<RegionId>,
    /// Index of each retained point in the original blue input.
    pub blue_index: Vec<usize>,
    pub discarded_inside: usize,
    pub discarded_outside: usize,
    /// Retained indices sorted by each axis (ties broken by the other axes).
    pub sorted: [Vec<usize>; 3],
    /// Original blue index of a point defining each finite `s_max` face.
    pub smax_blocker: [Option<usize>; 6],
}

fn check_finite(points: &[Point3], set: &'static str) -> Result<()> {
    match points.iter().position(|p| !p.is_finite()) {
        Some(index) => Err(Error::NonFiniteInput { set, index }),
        None => Ok(()),
    }
}

pub fn compute_smin(red: &[Point3]) -> Result<Box3> {
    if red.is_empty() {
        return Err(Error::EmptyRedSet);
    }
    check_finite(red, "red")?;
    let mut b = Box3::new(red[0].coords(), red[0].coords());
    for p in &red[1..] {
        for a in 0..3 {
            b.lo[a] = b.lo[a].min(p.coord(a));
            b.hi[a] = b.hi[a].max(p.coord(a));
        }
    }
    Ok(b)
}

fn in_corridor(s_min: &Box3, p: &Point3, d: Direction) -> bool {
    let a = d.axis();
    let beyond = if d.is_positive() {
        p.coord(a) >= s_min.hi[a]
    } else {
        p.coord(a) <= s_min.lo[a]
    };
    beyond && (0..3).filter(|&b| b != a).all(|b| s_min.lo[b] <= p.coord(b) && p.coord(b) <= s_min.hi[b])
}

fn smax_with_blockers(s_min: &Box3, blue: &[Point3]) -> (Box3, [Option<usize>; 6]) {
    let mut s_max = Box3::unbounded();
    let mut blockers = [None; 6];
    for (i, p) in blue.iter().enumerate() {
        if contains_open(s_min, p) {
            continue;
        }
        for d in Direction::ALL {
            if in_corridor(s_min, p, d) && d.key(p.coord(d.axis())) < s_max.face_key(d) {
                s_max.set_face(d, p.coord(d.axis()));
                blockers[d.index()] = Some(i);
            }
        }
    }
    (s_max, blockers)
}

pub fn compute_smax(s_min: &Box3, blue: &[Point3]) -> Box3 {
    smax_with_blockers(s_min, blue).0
}

fn axis_sign(s_min: &Box3, p: &Point3, a: Axis) -> i8 {
    if p.coord(a) < s_min.lo[a] {
        -1
    } else if p.coord(a) > s_min.hi[a] {
        1
    } else {
        0
    }
}

pub fn classify(s_min: &Box3, s_max: &Box3, p: &Point3) -> Result<RegionId> {
    if !contains_open(s_max, p) || contains_open(s_min, p) {
        return Err(Error::NotInAnnulus);
    }
    let signs = [0, 1, 2].map(|a| axis_sign(s_min, p, a));
    RegionId::from_signs(signs).ok_or(Error::NotInAnnulus)
}

pub fn build_scene(red: &[Point3], blue: &[Point3]) -> Result<Scene> {
    let s_min = compute_smin(red)?;
    check_finite(blue, "blue")?;
    let (s_max, smax_blocker) = smax_with_blockers(&s_min, blue);

    let mut discarded_inside = 0;
    let mut discarded_outside = 0;
    let mut kept: Vec<(Point3, usize)> = Vec::new();
    for (i, p) in blue.iter().enumerate() {
        if contains_open(&s_min, p) {
            discarded_inside += 1;
        } else if contains_open(&s_max, p) {
            kept.push((*p, i));
        } else {
            discarded_outside += 1;
        }
    }
    kept.sort_by(|(p, i), (q, j)| cmp_coords(p, q, [0, 1, 2]).then(i.cmp(j)));

    let retained: Vec<Point3> = kept.iter().map(|k| k.0).collect();
    let blue_index = kept.iter().map(|k| k.1).collect();
    let regions = retained
        .iter()
        .map(|p| classify(&s_min, &s_max, p).expect("retained point lies in the annulus"))
        .collect();
    let sorted = [[0, 1, 2], [1, 2, 0], [2, 0, 1]].map(|order| {
        let mut idx: Vec<usize> = (0..retained.len()).collect();
        idx.sort_by(|&i, &j| cmp_coords(&retained[i], &retained[j], order).then(i.cmp(&j)));
        idx
    });

    Ok(Scene {
        s_min,
        s_max,
        retained,
        regions,
        blue_index,
        discarded_inside,
        discarded_outside,
        sorted,
        smax_blocker,
    })
}

fn cmp_coords(p: &Point3, q: &Point3, order: [Axis; 3]) -> std::cmp::Ordering {
    order
        .iter()
        .map(|&a| p.coord(a).total_cmp(&q.coord(a)))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

impl Scene {
    pub fn m(&self) -> usize {
        self.retained.len()
    }

    /// Directions in which `s_max` is infinite.
    pub fn unbounded_directions(&self) -> Vec<Direction> {
        Direction::ALL
            .into_iter()
            .filter(|&d| !self.s_max.face(d).is_finite())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64, z: f64) -> Point3 {
        Point3::new(x, y, z)
    }

    fn unit() -> Box3 {
        Box3::new([0.0; 3], [1.0; 3])
    }

    pub(crate) fn six_blockers(lo: f64, hi: f64) -> Vec<Point3> {
        vec![
            p(hi, 0.5, 0.5),
            p(lo, 0.5, 0.5),
            p(0.5, hi, 0.5),
            p(0.5, lo, 0.5),
            p(0.5, 0.5, hi),
            p(0.5, 0.5, lo),
        ]
    }

    #[test]
    fn smin_examples() {
        let b = compute_smin(&[p(0., 0., 0.), p(1., 2., 3.)]).unwrap();
        assert_eq!(b, Box3::new([0.0; 3], [1.0, 2.0, 3.0]));
        let b = compute_smin(&[p(1., 1., 1.)]).unwrap();
        assert_eq!(b, Box3::new([1.0; 3], [1.0; 3]));
        let b = compute_smin(&[p(0., 0., 0.), p(1., 0., 0.), p(0.5, -2., 5.)]).unwrap();
        assert_eq!(b, Box3::new([0.0, -2.0, 0.0], [1.0, 0.0, 5.0]));
        assert!(matches!(compute_smin(&[]), Err(Error::EmptyRedSet)));
        assert!(matches!(
            compute_smin(&[p(0., f64::NAN, 0.)]),
            Err(Error::NonFiniteInput { .. })
        ));
    }

    #[test]
    fn smax_examples() {
        let inf = f64::INFINITY;
        let b = compute_smax(&unit(), &[p(3., 0.5, 0.5)]);
        assert_eq!(b, Box3::new([-inf; 3], [3.0, inf, inf]));
        let b = compute_smax(&unit(), &six_blockers(-1.0, 2.0));
        assert_eq!(b, Box3::new([-1.0; 3], [2.0; 3]));
        let b = compute_smax(&unit(), &[p(2., 5., 5.)]);
        assert_eq!(b, Box3::unbounded());
    }

    #[test]
    fn blue_on_face_clamps() {
        let b = compute_smax(&unit(), &[p(1.0, 0.25, 1.0)]);
        assert_eq!(b.hi[0], 1.0);
        assert_eq!(b.hi[2], 1.0);
        assert_eq!(b.lo[0], f64::NEG_INFINITY);
    }

    #[test]
    fn classify_examples() {
        let smax = Box3::new([-1.0; 3], [2.0; 3]);
        let r = classify(&unit(), &smax, &p(1.5, 0.5, 1.5)).unwrap();
        assert_eq!(r, RegionId::edge(Direction::Right, Direction::Top));
        let r = classify(&unit(), &smax, &p(1.5, 1.5, 1.5)).unwrap();
        assert_eq!(r, RegionId::corner(1, 1, 1));
        let r = classify(&unit(), &smax, &p(0.5, 0.5, 1.5)).unwrap();
        assert_eq!(r, RegionId::side(Direction::Top));
        assert!(classify(&unit(), &smax, &p(0.5, 0.5, 0.5)).is_err());
        // a point on the x = 1 plane goes to the lower-dimensional region
        let r = classify(&unit(), &smax, &p(1.0, 1.5, 1.5)).unwrap();
        assert_eq!(r, RegionId::edge(Direction::Front, Direction::Top));
    }

    #[test]
    fn region_counts() {
        let all = RegionId::all();
        assert_eq!(all.len(), 26);
        let count = |k| all.iter().filter(|r| r.kind() == k).count();
        assert_eq!(count(RegionKind::Corner), 8);
        assert_eq!(count(RegionKind::Edge), 12);
        assert_eq!(count(RegionKind::Side), 6);
    }

    #[test]
    fn scene_examples() {
        let red = [p(0., 0., 0.), p(1., 1., 1.)];
        let s = build_scene(&red, &[p(0.5, 0.5, 0.5), p(3., 0.5, 0.5)]).unwrap();
        assert_eq!(s.discarded_inside, 1);
        assert_eq!(s.s_max.hi[0], 3.0);
        assert!(s.retained.is_empty());

        let mut blue = six_blockers(-1.0, 2.0);
        blue.push(p(1.5, 1.5, 1.5));
        let s = build_scene(&red, &blue).unwrap();
        assert_eq!(s.retained, vec![p(1.5, 1.5, 1.5)]);
        assert_eq!(s.regions, vec![RegionId::corner(1, 1, 1)]);
        assert_eq!(s.blue_index, vec![6]);
        assert_eq!(s.discarded_outside, 6);

        let s = build_scene(&red, &[]).unwrap();
        assert_eq!(s.unbounded_directions().len(), 6);
    }
}
