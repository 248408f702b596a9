//! Blocking constraints in face-key form.
//!
//! A box is stored as six face keys, one per [`Direction`], where a key
//! grows as its face moves outward (`x` for right, `-x` for left, ...).
//! A retained blue point `p` becomes a [`Constraint`]: the set of faces
//! that must move past `p` before `p` enters the open interior. The point
//! is inside the box exactly when every listed face key exceeds the
//! point's key for that face.
//!
//! On an axis where `p` lies strictly between the `s_min` planes there is
//! no condition. On an axis where `p` lies on or beyond one plane there is
//! one condition. If `s_min` is flat on that axis and `p` lies on it, both
//! faces of that axis must move; such constraints are called straddling
//! and are removed by [`System::split_regular`].

use crate::candidates::Support;
use crate::geom::{Direction, Point3};
use crate::preprocess::Scene;

pub type Faces = [f64; 6];

#[derive(Clone, Debug)]
pub struct Constraint {
    /// Index into `Scene::retained`.
    pub point: usize,
    pub coords: Point3,
    pub mask: u8,
    /// Face keys; meaningful only for directions in `mask`.
    pub key: Faces,
}

pub fn dirs_of(mask: u8) -> impl Iterator<Item = Direction> {
    Direction::ALL.into_iter().filter(move |d| mask & (1 << d.index()) != 0)
}

pub fn has(mask: u8, d: Direction) -> bool {
    mask & (1 << d.index()) != 0
}

impl Constraint {
    pub fn inside(&self, f: &Faces) -> bool {
        dirs_of(self.mask).all(|d| f[d.index()] > self.key[d.index()])
    }

    /// `self` stops face `d` of `f` from moving past its key.
    pub fn blocks(&self, f: &Faces, d: Direction) -> bool {
        has(self.mask, d)
            && dirs_of(self.mask & !(1 << d.index())).all(|e| f[e.index()] > self.key[e.index()])
    }

    pub fn is_regular(&self) -> bool {
        (0..3).all(|a| (self.mask >> (2 * a)) & 3 != 3)
    }

    /// `self` is never inside a box unless `other` is (same mask, keys no larger).
    pub fn dominates(&self, other: &Constraint) -> bool {
        self.mask == other.mask
            && dirs_of(self.mask).all(|d| self.key[d.index()] <= other.key[d.index()])
    }
}

#[derive(Clone, Debug)]
pub struct System {
    pub base: Faces,
    pub bound: Faces,
    pub bound_support: [Support; 6],
    pub cons: Vec<Constraint>,
    /// Coordinates of every retained point, by `Scene::retained` index.
    pub points: Vec<Point3>,
}

pub fn faces_of(b: &crate::geom::Box3) -> Faces {
    Direction::ALL.map(|d| b.face_key(d))
}

pub fn box_of(f: &Faces) -> crate::geom::Box3 {
    let mut b = crate::geom::Box3::new([0.0; 3], [0.0; 3]);
    for d in Direction::ALL {
        b.set_face(d, d.unkey(f[d.index()]));
    }
    b
}

/// Volume from face keys, computed as `(hi - lo)` products like
/// [`crate::geom::volume`].
pub fn volume_of(f: &Faces) -> f64 {
    crate::geom::volume(&box_of(f))
}

impl System {
    pub fn from_scene(scene: &Scene) -> System {
        let base = faces_of(&scene.s_min);
        let bound = faces_of(&scene.s_max);
        let bound_support = Direction::ALL.map(|d| {
            if bound[d.index()].is_finite() {
                Support::SmaxBound(d)
            } else {
                Support::Unbounded(d)
            }
        });
        let cons = scene
            .retained
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let mut mask = 0u8;
                let mut key = [0.0; 6];
                for a in 0..3 {
                    let (lo, hi, c) = (scene.s_min.lo[a], scene.s_min.hi[a], p.coord(a));
                    if c >= hi {
                        let d = Direction::new(a, true);
                        mask |= 1 << d.index();
                        key[d.index()] = d.key(c);
                    }
                    if c <= lo {
                        let d = Direction::new(a, false);
                        mask |= 1 << d.index();
                        key[d.index()] = d.key(c);
                    }
                }
                Constraint { point: i, coords: *p, mask, key }
            })
            .collect();
        System { base, bound, bound_support, cons, points: scene.retained.clone() }
    }

    pub fn is_regular(&self) -> bool {
        self.cons.iter().all(Constraint::is_regular)
    }

    pub fn any_inside(&self, f: &Faces) -> bool {
        self.cons.iter().any(|c| c.inside(f))
    }

    /// Subsystems without straddling constraints whose valid boxes are all
    /// valid here, and which together contain every box that is valid
    /// here. Splits one flat axis at a time into three branches: the
    /// positive face stays at `s_min`, the negative face stays at `s_min`,
    /// or both move outward (which satisfies both straddle conditions).
    pub fn split_regular(&self) -> Vec<System> {
        let Some(axis) = (0..3).find(|&a| self.cons.iter().any(|c| (c.mask >> (2 * a)) & 3 == 3)) else {
            return vec![self.clone()];
        };
        let mut out = Vec::new();
        for pinned in [Direction::new(axis, true), Direction::new(axis, false)] {
            let mut sub = self.clone();
            sub.bound[pinned.index()] = sub.base[pinned.index()];
            sub.bound_support[pinned.index()] = Support::SmaxBound(pinned);
            sub.cons.retain(|c| !has(c.mask, pinned));
            out.extend(sub.split_regular());
        }
        if let Some(sub) = self.both_open(axis) {
            out.extend(sub.split_regular());
        }
        out
    }

    fn both_open(&self, axis: usize) -> Option<System> {
        let pair = 3u8 << (2 * axis);
        if (0..2).any(|s| {
            let i = 2 * axis + s;
            self.bound[i] <= self.base[i]
        }) {
            return None;
        }
        let mut sub = System { cons: Vec::new(), ..self.clone() };
        for c in &self.cons {
            if c.mask & pair != pair {
                sub.cons.push(c.clone());
                continue;
            }
            let mut c = c.clone();
            c.mask &= !pair;
            match c.mask.count_ones() {
                // inside every box that opens both faces
                0 => return None,
                1 => {
                    let d = dirs_of(c.mask).next().unwrap();
                    if c.key[d.index()] < sub.bound[d.index()] {
                        sub.bound[d.index()] = c.key[d.index()];
                        sub.bound_support[d.index()] = Support::Blue(c.point);
                    }
                }
                _ => sub.cons.push(c),
            }
        }
        Some(sub)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preprocess::build_scene;

    fn p(x: f64, y: f64, z: f64) -> Point3 {
        Point3::new(x, y, z)
    }

    #[test]
    fn masks_follow_blocking_semantics() {
        let red = [p(0., 0., 0.), p(1., 1., 1.)];
        let mut blue = vec![p(1.5, 1.2, 1.0), p(-0.5, 2.0, 0.5)];
        for a in 0..3 {
            for c in [-5.0, 5.0] {
                let mut q = [0.5; 3];
                q[a] = c;
                blue.push(Point3::from(q));
            }
        }
        let scene = build_scene(&red, &blue).unwrap();
        let sys = System::from_scene(&scene);
        // z = 1 lies on the s_min plane, which still counts for the top face
        let c = sys.cons.iter().find(|c| c.coords == p(1.5, 1.2, 1.0)).unwrap();
        let want = 1 << Direction::Right.index() | 1 << Direction::Front.index() | 1 << Direction::Top.index();
        assert_eq!(c.mask, want);
        assert_eq!(c.key[Direction::Top.index()], 1.0);
        let c = sys.cons.iter().find(|c| c.coords == p(-0.5, 2.0, 0.5)).unwrap();
        assert_eq!(c.key[Direction::Left.index()], 0.5);
        assert!(sys.is_regular());
    }

    #[test]
    fn straddle_split_keeps_validity() {
        // flat s_min on y with a blue point on that plane
        let red = [p(0., 0., 0.), p(1., 0., 1.)];
        let blue = [p(1.5, 0.0, 1.5), p(0.5, 3.0, 0.5), p(0.5, -3.0, 0.5)];
        let scene = build_scene(&red, &blue).unwrap();
        let sys = System::from_scene(&scene);
        assert!(!sys.is_regular());
        let subs = sys.split_regular();
        assert!(!subs.is_empty());
        for s in &subs {
            assert!(s.is_regular());
        }
    }
}
