//! Growing one face until it meets a blue point or the `s_max` boundary.

use super::{CandidateBox, Source, Support};
use crate::error::{Error, Result};
use crate::geom::{Box3, Direction};
use crate::preprocess::Scene;
use crate::regions::Structures;
use crate::system::{box_of, faces_of, has, Faces};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GrowthImpl {
    /// Staircases, per-direction orders, and pointers.
    #[default]
    Staircase,
    /// Scan every retained constraint.
    Scan,
}

/// Keeps the nearer of two blockers; equal keys go to the lower point index.
fn nearer(best: &mut (f64, Support), key: f64, s: Support) {
    let better = key < best.0
        || (key == best.0
            && match (s, best.1) {
                (Support::Blue(a), Support::Blue(b)) => a < b,
                (Support::Blue(_), _) => true,
                _ => false,
            });
    if better {
        *best = (key, s);
    }
}

/// Growth queries over one [`Structures`].
#[derive(Clone, Copy)]
pub struct Grower<'a> {
    pub st: &'a Structures,
    pub imp: GrowthImpl,
}

impl<'a> Grower<'a> {
    pub fn new(st: &'a Structures, imp: GrowthImpl) -> Self {
        Grower { st, imp }
    }

    /// Largest key face `d` can reach from `f`, with its support. `sup`
    /// carries the current supports so edge queries can follow pointers.
    pub fn grow(&self, f: &Faces, sup: &[Support; 6], d: Direction) -> (f64, Support) {
        match self.imp {
            GrowthImpl::Scan => self.grow_scan(f, d),
            GrowthImpl::Staircase => self.grow_fast(f, sup, d),
        }
    }

    fn start(&self, d: Direction) -> (f64, Support) {
        let sys = &self.st.sys;
        (sys.bound[d.index()], sys.bound_support[d.index()])
    }

    fn grow_scan(&self, f: &Faces, d: Direction) -> (f64, Support) {
        let mut best = self.start(d);
        for c in &self.st.sys.cons {
            if c.blocks(f, d) && c.key[d.index()] <= best.0 {
                nearer(&mut best, c.key[d.index()], Support::Blue(c.point));
            }
        }
        self.settle(best, d)
    }

    /// A blocker exactly on the bound yields the bound's own support.
    fn settle(&self, best: (f64, Support), d: Direction) -> (f64, Support) {
        if best.0 >= self.st.sys.bound[d.index()] {
            self.start(d)
        } else {
            best
        }
    }

    fn grow_fast(&self, f: &Faces, sup: &[Support; 6], d: Direction) -> (f64, Support) {
        let st = self.st;
        let cons = &st.sys.cons;
        let di = d.index();
        let mut best = self.start(d);
        let others: Vec<Direction> = Direction::ALL.into_iter().filter(|e| e.axis() != d.axis()).collect();
        for &e in &others {
            let mask = (1u8 << di) | (1 << e.index());
            let list = &st.min[mask as usize];
            if list.is_empty() {
                continue;
            }
            if let Some(i) = self.edge_blocker(list, f, sup, e, d) {
                nearer(&mut best, cons[i].key[di], Support::Blue(cons[i].point));
            }
        }
        for &e1 in &others[..2] {
            for &e2 in &others[2..] {
                let mask = (1u8 << di) | (1 << e1.index()) | (1 << e2.index());
                for &i in &st.corner_order[mask as usize][di] {
                    let c = &cons[i];
                    if c.key[di] > best.0 {
                        break;
                    }
                    if c.key[e1.index()] < f[e1.index()] && c.key[e2.index()] < f[e2.index()] {
                        nearer(&mut best, c.key[di], Support::Blue(c.point));
                        break;
                    }
                }
            }
        }
        for &i in &st.irregular {
            let c = &cons[i];
            if c.blocks(f, d) {
                nearer(&mut best, c.key[di], Support::Blue(c.point));
            }
        }
        self.settle(best, d)
    }

    /// Edge `{d, e}`: the blocker with the smallest `d` key is the step with
    /// the largest `e` key still below `f[e]`.
    fn edge_blocker(&self, list: &[usize], f: &Faces, sup: &[Support; 6], e: Direction, d: Direction) -> Option<usize> {
        let st = self.st;
        let cons = &st.sys.cons;
        let ei = e.index();
        if let Support::Blue(pt) = sup[ei] {
            if let Some(q) = st.con_of_point(pt) {
                if has(cons[q].mask, e) && cons[q].key[ei] == f[ei] {
                    let mask = (1u8 << d.index()) | (1 << ei);
                    return st.pointers.get(q, mask, e.opposite());
                }
            }
        }
        // the list is sorted by the lower-indexed direction's key
        if e.index() < d.index() {
            let n = list.partition_point(|&i| cons[i].key[ei] < f[ei]);
            (n > 0).then(|| list[n - 1])
        } else {
            let n = list.partition_point(|&i| cons[i].key[ei] >= f[ei]);
            (n < list.len()).then(|| list[n])
        }
    }

    /// No constraint lies in the open interior of `f`.
    pub fn is_valid(&self, f: &Faces) -> bool {
        let st = self.st;
        st.relevant().all(|i| !st.sys.cons[i].inside(f))
    }

    /// Grows each direction once, in index order, recording supports. The
    /// result is maximal: growing a face never loosens another one.
    pub fn maximalize(&self, f: &mut Faces, sup: &mut [Support; 6]) {
        for d in Direction::ALL {
            let (k, s) = self.grow(f, sup, d);
            f[d.index()] = k;
            sup[d.index()] = s;
        }
    }

    pub fn candidate(&self, f: &Faces, sup: &[Support; 6], source: Source) -> CandidateBox {
        CandidateBox {
            bx: box_of(f),
            supports: *sup,
            case_label: super::pattern::label(&self.st.sys, sup, f),
            source,
        }
    }
}

/// Reference growth on the scene itself: the nearest retained point at or
/// beyond face `d` whose projection lies strictly inside the box's cross
/// section, else the `s_max` face.
pub fn grow_scan(scene: &Scene, bx: &Box3, d: Direction) -> (f64, Support) {
    let a = d.axis();
    let mut best = scene.s_max.face(d);
    let mut support = if best.is_finite() { Support::SmaxBound(d) } else { Support::Unbounded(d) };
    for (i, p) in scene.retained.iter().enumerate() {
        let c = p.coord(a);
        let beyond = d.key(c) >= d.key(bx.face(d));
        let across = (0..3).filter(|&b| b != a).all(|b| bx.lo[b] < p.coord(b) && p.coord(b) < bx.hi[b]);
        if beyond && across && d.key(c) < d.key(best) {
            best = c;
            support = Support::Blue(i);
        }
    }
    (best, support)
}

/// Growth through the structures, in coordinates.
pub fn grow(st: &Structures, bx: &Box3, d: Direction, imp: GrowthImpl) -> (f64, Support) {
    let f = faces_of(bx);
    let sup = Direction::ALL.map(Support::SmaxBound);
    let (k, s) = Grower::new(st, imp).grow(&f, &sup, d);
    (d.unkey(k), s)
}

/// Grows the directions of `order` in turn, then any remaining directions
/// in index order so that every face has a recorded support.
pub fn complete(st: &Structures, partial: &Box3, order: &[Direction], imp: GrowthImpl) -> Result<CandidateBox> {
    let g = Grower::new(st, imp);
    let mut f = faces_of(partial);
    let mut sup = Direction::ALL.map(Support::SmaxBound);
    let rest = Direction::ALL.into_iter().filter(|d| !order.contains(d));
    for d in order.iter().copied().chain(rest) {
        let (k, s) = g.grow(&f, &sup, d);
        if let Support::Unbounded(d) = s {
            return Err(Error::UnboundedResult(d));
        }
        f[d.index()] = k;
        sup[d.index()] = s;
    }
    Ok(g.candidate(&f, &sup, Source::PairSweep))
}
