//! Dominance staircases per edge and corner region, and the neighbour
//! pointer table used by the edge growth queries.
//!
//! Points are grouped by the faces they can block (their constraint mask),
//! which agrees with [`RegionId`] except for points lying exactly on an
//! `s_min` plane: such a point is assigned to the lower-dimensional region
//! by [`crate::preprocess::classify`], but it still blocks like a point of
//! the higher-dimensional one.

use crate::geom::{Direction, Point3};
use crate::preprocess::{RegionId, Scene};
use crate::system::{dirs_of, Constraint, System};
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq)]
pub struct Staircase2D {
    pub region: RegionId,
    /// Retained point indices, nearest to `s_min` along the region's first
    /// direction first; the second direction strictly decreases.
    pub steps: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Staircase3D {
    pub region: RegionId,
    /// Retained point indices of the dominance-minimal points.
    pub corners: Vec<usize>,
}

/// Number of pointer slots: 12 edge masks then 8 corner masks.
pub const SLOTS: usize = 20;
const NONE: u32 = u32::MAX;

/// Regular masks with two or three directions, in slot order.
pub fn slot_masks() -> [u8; SLOTS] {
    let mut out = [0u8; SLOTS];
    let mut n = 0;
    for want in [2, 3] {
        for m in 0u8..64 {
            let regular = (0..3).all(|a| (m >> (2 * a)) & 3 != 3);
            if regular && m.count_ones() == want {
                out[n] = m;
                n += 1;
            }
        }
    }
    out
}

fn slot_of(mask: u8) -> Option<usize> {
    slot_masks().iter().position(|&m| m == mask)
}

pub fn region_of_mask(mask: u8) -> Option<RegionId> {
    let mut s = [0i8; 3];
    for d in dirs_of(mask) {
        if s[d.axis()] != 0 {
            return None;
        }
        s[d.axis()] = if d.is_positive() { 1 } else { -1 };
    }
    RegionId::from_signs(s)
}

fn key_cmp(a: &Constraint, b: &Constraint, order: &[Direction]) -> Ordering {
    order
        .iter()
        .map(|d| a.key[d.index()].total_cmp(&b.key[d.index()]))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
        .then(a.point.cmp(&b.point))
}

/// Dominance-minimal subset of `idx` (all of one mask), in key order of
/// the mask's directions.
pub fn minimal(cons: &[Constraint], idx: &[usize], mask: u8) -> Vec<usize> {
    let dirs: Vec<Direction> = dirs_of(mask).collect();
    let mut sorted = idx.to_vec();
    sorted.sort_by(|&i, &j| key_cmp(&cons[i], &cons[j], &dirs));
    let mut kept: Vec<usize> = Vec::new();
    if dirs.len() == 2 {
        let second = dirs[1].index();
        let mut best = f64::INFINITY;
        for i in sorted {
            if cons[i].key[second] < best {
                best = cons[i].key[second];
                kept.push(i);
            }
        }
    } else {
        for i in sorted {
            if !kept.iter().any(|&k| cons[k].dominates(&cons[i])) {
                kept.push(i);
            }
        }
    }
    kept
}

/// Six directional pointers per (constraint, adjacent region) into that
/// region's staircase. `left` is the staircase element with the largest
/// x strictly below the point's x, and so on for the other directions;
/// coordinate ties go to the earlier staircase element for `right`,
/// `front`, `top` and to the later one for the others.
///
/// Adjacent means the region's mask shares a direction with the point's
/// mask. Those are the only regions an edge growth query reaches from a
/// face supported by the point.
#[derive(Clone, Debug)]
pub struct PointerTable {
    table: Vec<[[u32; 6]; SLOTS]>,
}

impl PointerTable {
    pub fn get(&self, con: usize, region_mask: u8, d: Direction) -> Option<usize> {
        let slot = slot_of(region_mask)?;
        let v = self.table[con][slot][d.index()];
        (v != NONE).then_some(v as usize)
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

/// Staircases, per-direction orders, and pointers for one [`System`].
#[derive(Clone, Debug)]
pub struct Structures {
    pub sys: System,
    /// Minimal constraints per mask (edge: staircase order).
    pub min: Vec<Vec<usize>>,
    /// For each corner mask and direction in it, minimal constraints
    /// sorted by that direction's key.
    pub corner_order: Vec<[Vec<usize>; 6]>,
    /// Straddling constraints; scanned directly.
    pub irregular: Vec<usize>,
    pub pointers: PointerTable,
    con_of_point: Vec<usize>,
}

impl Structures {
    pub fn build(sys: System) -> Structures {
        let mut by_mask: Vec<Vec<usize>> = vec![Vec::new(); 64];
        let mut irregular = Vec::new();
        for (i, c) in sys.cons.iter().enumerate() {
            if c.is_regular() {
                by_mask[c.mask as usize].push(i);
            } else {
                irregular.push(i);
            }
        }
        let mut min = vec![Vec::new(); 64];
        let mut corner_order: Vec<[Vec<usize>; 6]> = vec![Default::default(); 64];
        for m in slot_masks() {
            let mm = m as usize;
            min[mm] = minimal(&sys.cons, &by_mask[mm], m);
            if m.count_ones() == 3 {
                for d in dirs_of(m) {
                    let mut v = min[mm].clone();
                    v.sort_by(|&i, &j| {
                        sys.cons[i].key[d.index()]
                            .total_cmp(&sys.cons[j].key[d.index()])
                            .then(sys.cons[i].point.cmp(&sys.cons[j].point))
                    });
                    corner_order[mm][d.index()] = v;
                }
            }
        }
        let pointers = build_pointer_table(&sys, &min);
        let npts = sys.cons.iter().map(|c| c.point + 1).max().unwrap_or(0);
        let mut con_of_point = vec![usize::MAX; npts];
        for (i, c) in sys.cons.iter().enumerate() {
            con_of_point[c.point] = i;
        }
        Structures { sys, min, corner_order, irregular, pointers, con_of_point }
    }

    pub fn from_scene(scene: &Scene) -> Structures {
        Structures::build(System::from_scene(scene))
    }

    pub fn con_of_point(&self, point: usize) -> Option<usize> {
        self.con_of_point.get(point).copied().filter(|&c| c != usize::MAX)
    }

    /// Every minimal regular constraint followed by the straddling ones.
    pub fn relevant(&self) -> impl Iterator<Item = usize> + '_ {
        slot_masks()
            .into_iter()
            .flat_map(move |m| self.min[m as usize].iter().copied())
            .chain(self.irregular.iter().copied())
    }

    pub fn staircase_len(&self) -> usize {
        slot_masks().iter().map(|&m| self.min[m as usize].len()).sum()
    }

    pub fn staircase2d(&self, region: RegionId) -> Staircase2D {
        let m = region.mask() as usize;
        Staircase2D { region, steps: self.min[m].iter().map(|&i| self.sys.cons[i].point).collect() }
    }

    pub fn staircase3d(&self, region: RegionId) -> Staircase3D {
        let m = region.mask() as usize;
        Staircase3D { region, corners: self.min[m].iter().map(|&i| self.sys.cons[i].point).collect() }
    }
}

fn coord_then_pos(pts: &[Point3], a: usize) -> impl Fn(&(usize, usize), &(usize, usize)) -> Ordering + '_ {
    move |x, y| pts[x.0].coord(a).total_cmp(&pts[y.0].coord(a)).then(x.1.cmp(&y.1))
}

fn build_pointer_table(sys: &System, min: &[Vec<usize>]) -> PointerTable {
    let n = sys.cons.len();
    let pts: Vec<Point3> = sys.cons.iter().map(|c| c.coords).collect();
    let mut table = vec![[[NONE; 6]; SLOTS]; n];
    // points sorted once per axis
    let global: [Vec<usize>; 3] = [0, 1, 2].map(|a| {
        let mut g: Vec<usize> = (0..n).collect();
        g.sort_by(|&i, &j| pts[i].coord(a).total_cmp(&pts[j].coord(a)).then(i.cmp(&j)));
        g
    });
    for (slot, &m) in slot_masks().iter().enumerate() {
        let elems = &min[m as usize];
        if elems.is_empty() {
            continue;
        }
        for a in 0..3 {
            let mut s: Vec<(usize, usize)> = elems.iter().enumerate().map(|(pos, &e)| (e, pos)).collect();
            s.sort_by(coord_then_pos(&pts, a));
            let (up, down) = (Direction::new(a, true).index(), Direction::new(a, false).index());
            // first element strictly above; last element strictly below
            let mut above = 0;
            let mut below = 0;
            for &i in &global[a] {
                let c = pts[i].coord(a);
                while above < s.len() && pts[s[above].0].coord(a) <= c {
                    above += 1;
                }
                while below < s.len() && pts[s[below].0].coord(a) < c {
                    below += 1;
                }
                if sys.cons[i].mask & m == 0 {
                    continue;
                }
                if above < s.len() {
                    table[i][slot][up] = s[above].0 as u32;
                }
                if below > 0 {
                    table[i][slot][down] = s[below - 1].0 as u32;
                }
            }
        }
    }
    PointerTable { table }
}

pub fn build_staircase2d(scene: &Scene, region: RegionId) -> Staircase2D {
    Structures::from_scene(scene).staircase2d(region)
}

pub fn build_staircase3d(scene: &Scene, region: RegionId) -> Staircase3D {
    Structures::from_scene(scene).staircase3d(region)
}

pub fn build_pointers(scene: &Scene) -> PointerTable {
    Structures::from_scene(scene).pointers
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preprocess::build_scene;

    fn p(x: f64, y: f64, z: f64) -> Point3 {
        Point3::new(x, y, z)
    }

    fn scene(blue: &[Point3]) -> Scene {
        let mut all = blue.to_vec();
        all.extend([
            p(9.0, 0.5, 0.5),
            p(-9.0, 0.5, 0.5),
            p(0.5, 9.0, 0.5),
            p(0.5, -9.0, 0.5),
            p(0.5, 0.5, 9.0),
            p(0.5, 0.5, -9.0),
        ]);
        build_scene(&[p(0., 0., 0.), p(1., 1., 1.)], &all).unwrap()
    }

    #[test]
    fn slots_are_regions() {
        let masks = slot_masks();
        assert_eq!(masks.iter().filter(|m| m.count_ones() == 2).count(), 12);
        assert_eq!(masks.iter().filter(|m| m.count_ones() == 3).count(), 8);
        for m in masks {
            assert_eq!(region_of_mask(m).unwrap().mask(), m);
        }
    }

    #[test]
    fn edge_staircase_example() {
        let s = scene(&[p(2., 0.5, 2.), p(3., 0.5, 1.5), p(2.5, 0.5, 3.)]);
        let tr = RegionId::edge(Direction::Right, Direction::Top);
        let st = build_staircase2d(&s, tr);
        let coords: Vec<Point3> = st.steps.iter().map(|&i| s.retained[i]).collect();
        assert_eq!(coords, vec![p(2., 0.5, 2.), p(3., 0.5, 1.5)]);
        let empty = build_staircase2d(&s, RegionId::edge(Direction::Left, Direction::Top));
        assert!(empty.steps.is_empty());
    }

    #[test]
    fn corner_staircase_examples() {
        let s = scene(&[p(2., 2., 2.), p(3., 3., 3.)]);
        let c = build_staircase3d(&s, RegionId::corner(1, 1, 1));
        assert_eq!(c.corners.iter().map(|&i| s.retained[i]).collect::<Vec<_>>(), vec![p(2., 2., 2.)]);
        let s = scene(&[p(2., 3., 4.), p(3., 4., 2.), p(4., 2., 3.)]);
        assert_eq!(build_staircase3d(&s, RegionId::corner(1, 1, 1)).corners.len(), 3);
    }

    #[test]
    fn pointer_example() {
        // the query point sits in the right-front edge, which shares +x
        let s = scene(&[p(2., 0.5, 2.), p(3., 0.5, 1.5), p(2.5, 1.5, 0.5)]);
        let st = Structures::from_scene(&s);
        let tr = RegionId::edge(Direction::Right, Direction::Top).mask();
        let q = s.retained.iter().position(|&x| x == p(2.5, 1.5, 0.5)).unwrap();
        let c = st.con_of_point(q).unwrap();
        let right = st.pointers.get(c, tr, Direction::Right).unwrap();
        assert_eq!(st.sys.cons[right].coords, p(3., 0.5, 1.5));
        let top = st.pointers.get(c, tr, Direction::Top).unwrap();
        assert_eq!(st.sys.cons[top].coords, p(3., 0.5, 1.5));
        let left = st.pointers.get(c, tr, Direction::Left).unwrap();
        assert_eq!(st.sys.cons[left].coords, p(2., 0.5, 2.));
        assert_eq!(st.pointers.get(c, tr, Direction::Bottom), None);
    }
}
