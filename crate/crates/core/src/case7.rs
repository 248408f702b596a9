//! Case 7: four supports beyond one face, two of them in one corner region.
//!
//! In the canonical frame the heavy face is right (+x) and the corner pair
//! sits in the top-right-back region: top and back come from that corner,
//! bottom and right from the bottom-right-front corner, and left and front
//! from the left-front edge. All 48 signed axis permutations are tried.
//!
//! For a fixed (left, front) pair, a *layer*, rows are (top, back) pairs and
//! columns are (bottom, right) pairs:
//!
//! * layers: inner corners of the left-front staircase;
//! * columns: inner corners of the bottom-right-front points in front of
//!   the layer, sorted by right (so bottom decreases);
//! * rows: inner corners of the top-right-back points left of some right
//!   face, over every such slice, sorted by top.
//!
//! An entry is the volume `X_j * Y_i * (t_i + b_j)`, with the x extent set
//! by the column, the y extent by the row, and the z extent by both. Since
//! `(t + b') / (t + b)` grows with `t` when `b' < b`, each block of rows and
//! columns with positive x and y extents is totally monotone for maxima.
//! Entries whose box would contain a point are removed per row. Each row
//! keeps a few column runs, which are split into segment-tree nodes; SMAWK
//! runs once per node.

use crate::candidates::growth::Grower;
use crate::candidates::{CandidateBox, Source, Support};
use crate::geom::Direction;
use crate::preprocess::{RegionId, Scene};
use crate::regions::Structures;
use crate::smawk::{row_maxima_counted, ImplicitMatrix};
use crate::system::{dirs_of, volume_of, Faces};
use std::collections::HashSet;

const L: usize = 0;
const R: usize = 1;
const K: usize = 2;
const F: usize = 3;
const B: usize = 4;
const T: usize = 5;

/// A signed axis permutation, as canonical direction index -> actual
/// direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frame {
    pub map: [Direction; 6],
}

impl Frame {
    pub fn all() -> Vec<Frame> {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut out = Vec::with_capacity(48);
        for p in perms {
            for flips in 0..8u8 {
                let map = [0usize, 1, 2, 3, 4, 5].map(|c| {
                    let (axis, pos) = (c / 2, c % 2 == 1);
                    let flip = flips >> axis & 1 == 1;
                    Direction::new(p[axis], pos != flip)
                });
                out.push(Frame { map });
            }
        }
        out
    }

    fn mask(&self, roles: &[usize]) -> u8 {
        roles.iter().fold(0, |m, &r| m | 1 << self.map[r].index())
    }

    fn role_of(&self, d: Direction) -> usize {
        self.map.iter().position(|&x| x == d).unwrap()
    }
}

/// An inner corner of a two-direction staircase: keys and supports for
/// the first and the second direction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Corner2 {
    pub a: f64,
    pub sa: Support,
    pub b: f64,
    pub sb: Support,
}

/// Inner corners of the points `pts` (keys in directions `da`, `db`),
/// clipped to the bounds, sorted by `a` ascending (so `b` descending).
fn corners2d(st: &Structures, pts: &[usize], da: Direction, db: Direction) -> Vec<Corner2> {
    let sys = &st.sys;
    let (ai, bi) = (da.index(), db.index());
    let key = |i: usize, d: usize| sys.cons[i].key[d];
    let mut p: Vec<usize> = pts
        .iter()
        .copied()
        .filter(|&i| key(i, ai) < sys.bound[ai] && key(i, bi) < sys.bound[bi])
        .collect();
    p.sort_by(|&i, &j| {
        key(i, ai)
            .total_cmp(&key(j, ai))
            .then(key(i, bi).total_cmp(&key(j, bi)))
            .then(sys.cons[i].point.cmp(&sys.cons[j].point))
    });
    let mut out = Vec::with_capacity(p.len() + 1);
    let mut prev = (sys.bound[bi], sys.bound_support[bi]);
    for i in p {
        if key(i, bi) < prev.0 {
            let s = Support::Blue(sys.cons[i].point);
            out.push(Corner2 { a: key(i, ai), sa: s, b: prev.0, sb: prev.1 });
            prev = (key(i, bi), s);
        }
    }
    out.push(Corner2 { a: sys.bound[ai], sa: sys.bound_support[ai], b: prev.0, sb: prev.1 });
    out
}

/// Inner corners of every slice `{key_c < v}` of the points `pts`, in the
/// plane of `(da, db)`. Sorted by `a` ascending, then `b` descending.
fn slice_corners(st: &Structures, pts: &[usize], da: Direction, db: Direction, dc: Direction) -> Vec<Corner2> {
    let sys = &st.sys;
    let ci = dc.index();
    let mut p: Vec<usize> = pts.iter().copied().filter(|&i| sys.cons[i].key[ci] < sys.bound[ci]).collect();
    p.sort_by(|&i, &j| sys.cons[i].key[ci].total_cmp(&sys.cons[j].key[ci]));
    let mut seen: HashSet<(u64, u64)> = HashSet::new();
    let mut out = Vec::new();
    let mut push_all = |slice: &[usize], out: &mut Vec<Corner2>| {
        for c in corners2d(st, slice, da, db) {
            if seen.insert((c.a.to_bits(), c.b.to_bits())) {
                out.push(c);
            }
        }
    };
    push_all(&[], &mut out);
    let mut k = 0;
    while k < p.len() {
        let v = sys.cons[p[k]].key[ci];
        while k < p.len() && sys.cons[p[k]].key[ci] == v {
            k += 1;
        }
        push_all(&p[..k], &mut out);
    }
    out.sort_by(|x, y| x.a.total_cmp(&y.a).then(y.b.total_cmp(&x.b)));
    out
}

struct FrameData {
    frame: Frame,
    layers: Vec<Corner2>,
    rows: Vec<Corner2>,
    brf: Vec<usize>,
}

fn frame_data(st: &Structures, frame: Frame) -> Option<FrameData> {
    let m = frame.map;
    let trk = &st.min[frame.mask(&[T, R, K]) as usize];
    let brf = &st.min[frame.mask(&[B, R, F]) as usize];
    if trk.is_empty() || brf.is_empty() {
        return None;
    }
    Some(FrameData {
        frame,
        layers: corners2d(st, &st.min[frame.mask(&[L, F]) as usize], m[L], m[F]),
        rows: slice_corners(st, trk, m[T], m[K], m[R]),
        brf: brf.clone(),
    })
}

fn columns(st: &Structures, fd: &FrameData, layer: &Corner2) -> Vec<Corner2> {
    let m = fd.frame.map;
    let front: Vec<usize> = fd.brf.iter().copied().filter(|&i| st.sys.cons[i].key[m[F].index()] < layer.b).collect();
    corners2d(st, &front, m[R], m[B])
}

fn faces(st: &Structures, m: &[Direction; 6], layer: &Corner2, row: &Corner2, col: &Corner2) -> (Faces, [Support; 6]) {
    let mut f = st.sys.base;
    let mut sup = st.sys.bound_support;
    for (role, key, s) in [
        (L, layer.a, layer.sa),
        (F, layer.b, layer.sb),
        (T, row.a, row.sa),
        (K, row.b, row.sb),
        (R, col.a, col.sa),
        (B, col.b, col.sb),
    ] {
        f[m[role].index()] = key;
        sup[m[role].index()] = s;
    }
    (f, sup)
}

/// Work counters for the fast path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Case7Stats {
    pub frames: usize,
    pub layers: usize,
    pub evaluations: usize,
    /// Sum over layers of `rows + cols`.
    pub dims: usize,
    /// Largest `evaluations / (rows + cols)` over layers, times 1000.
    pub worst_ratio_milli: usize,
    pub blocks: usize,
}

/// The best entry of one layer: volume, row, column.
type Best = Option<(f64, usize, usize)>;

fn take(best: &mut Best, v: f64, i: usize, j: usize) {
    let better = match *best {
        None => true,
        Some((bv, bi, bj)) => v > bv || (v == bv && (i, j) < (bi, bj)),
    };
    if better {
        *best = Some((v, i, j));
    }
}

/// Allowed column runs per row of one layer, or `None` if every box of the
/// layer contains a point.
fn allowed_runs(st: &Structures, fr: &Frame, layer: &Corner2, rows: &[Corner2], cols: &[Corner2]) -> Option<Vec<Vec<(usize, usize)>>> {
    let sys = &st.sys;
    let n = cols.len();
    let mut dead_row = vec![false; rows.len()];
    let mut dead_col = vec![false; n];
    let mut forbid: Vec<Vec<(usize, usize)>> = vec![Vec::new(); rows.len()];
    for i in st.relevant() {
        let c = &sys.cons[i];
        let mut row_conds: Vec<(usize, f64)> = Vec::new();
        let mut col_conds: Vec<(usize, f64)> = Vec::new();
        let mut active = true;
        for d in dirs_of(c.mask) {
            let k = c.key[d.index()];
            match fr.role_of(d) {
                L => active &= layer.a > k,
                F => active &= layer.b > k,
                role @ (T | K) => row_conds.push((role, k)),
                role => col_conds.push((role, k)),
            }
        }
        if !active {
            continue;
        }
        let row_hit = |r: &Corner2| row_conds.iter().all(|&(role, k)| if role == T { r.a > k } else { r.b > k });
        let col_hit = |q: &Corner2| col_conds.iter().all(|&(role, k)| if role == R { q.a > k } else { q.b > k });
        match (row_conds.is_empty(), col_conds.is_empty()) {
            (true, true) => return None,
            (false, true) => rows.iter().zip(dead_row.iter_mut()).for_each(|(r, d)| *d |= row_hit(r)),
            (true, false) => cols.iter().zip(dead_col.iter_mut()).for_each(|(q, d)| *d |= col_hit(q)),
            (false, false) => {
                // right increases and bottom decreases along the columns, so
                // the hit columns form one interval
                let lo = cols.partition_point(|q| !col_conds.iter().filter(|x| x.0 == R).all(|&(_, k)| q.a > k));
                let hi = cols.partition_point(|q| col_conds.iter().filter(|x| x.0 == B).all(|&(_, k)| q.b > k));
                if lo < hi {
                    for (r, fb) in rows.iter().zip(forbid.iter_mut()) {
                        if row_hit(r) {
                            fb.push((lo, hi));
                        }
                    }
                }
            }
        }
    }
    let mut dead_runs = Vec::new();
    let mut j = 0;
    while j < n {
        if dead_col[j] {
            let s = j;
            while j < n && dead_col[j] {
                j += 1;
            }
            dead_runs.push((s, j));
        } else {
            j += 1;
        }
    }
    let runs = forbid
        .into_iter()
        .zip(dead_row)
        .map(|(mut fb, dead)| {
            if dead {
                return Vec::new();
            }
            fb.extend_from_slice(&dead_runs);
            fb.sort_unstable();
            let mut out = Vec::new();
            let mut at = 0;
            for (s, e) in fb {
                if s > at {
                    out.push((at, s));
                }
                at = at.max(e);
            }
            if at < n {
                out.push((at, n));
            }
            out
        })
        .collect();
    Some(runs)
}

/// Segment-tree nodes covering `[s, e)` within `[lo, hi)`.
fn decompose(lo: usize, hi: usize, s: usize, e: usize, node: usize, out: &mut Vec<(usize, usize, usize)>) {
    if e <= lo || hi <= s {
        return;
    }
    if s <= lo && hi <= e {
        out.push((node, lo, hi));
        return;
    }
    let mid = (lo + hi) / 2;
    decompose(lo, mid, s, e, 2 * node, out);
    decompose(mid, hi, s, e, 2 * node + 1, out);
}

struct Layer<'a> {
    st: &'a Structures,
    map: [Direction; 6],
    layer: Corner2,
    rows: &'a [Corner2],
    cols: Vec<Corner2>,
}

impl Layer<'_> {
    fn entry(&self, i: usize, j: usize) -> f64 {
        volume_of(&faces(self.st, &self.map, &self.layer, &self.rows[i], &self.cols[j]).0)
    }
}

/// Positive-extent test on the axis of `d` for face keys `hi_key` (face
/// `d`) and `lo_key` (face `d.opposite()`).
fn positive_extent(d: Direction, hi_key: f64, lo_key: f64) -> bool {
    let (a, b) = (d.unkey(hi_key), d.opposite().unkey(lo_key));
    if d.is_positive() {
        a - b > 0.0
    } else {
        b - a > 0.0
    }
}

fn fast_layer(l: &Layer<'_>, runs: &[Vec<(usize, usize)>], stats: &mut Case7Stats, audit: Option<&mut Audit>) -> Best {
    let m = l.map;
    let (rows, cols) = (l.rows.len(), l.cols.len());
    let wide_row: Vec<bool> = l.rows.iter().map(|r| positive_extent(m[F], l.layer.b, r.b)).collect();
    let wide_col: Vec<bool> = l.cols.iter().map(|c| positive_extent(m[R], c.a, l.layer.a)).collect();
    let mut best: Best = None;
    let mut evals = 0;

    // zero-volume entries: the leftmost allowed one per row
    for (i, rr) in runs.iter().enumerate() {
        for &(s, e) in rr {
            let first = if wide_row[i] { (s..e).find(|&j| !wide_col[j]) } else { Some(s) };
            if let Some(j) = first {
                take(&mut best, l.entry(i, j), i, j);
                evals += 1;
                break;
            }
        }
    }

    // split columns into runs of positive width, then into tree nodes
    let mut nodes: std::collections::BTreeMap<(usize, usize, usize), Vec<usize>> = Default::default();
    for (i, rr) in runs.iter().enumerate() {
        if !wide_row[i] {
            continue;
        }
        for &(s, e) in rr {
            let mut j = s;
            while j < e {
                if !wide_col[j] {
                    j += 1;
                    continue;
                }
                let start = j;
                while j < e && wide_col[j] {
                    j += 1;
                }
                let mut parts = Vec::new();
                decompose(0, cols, start, j, 1, &mut parts);
                for p in parts {
                    nodes.entry(p).or_default().push(i);
                }
            }
        }
    }
    let mut audit = audit;
    for ((_, lo, hi), rs) in &nodes {
        let a = ImplicitMatrix::new(rs.len(), hi - lo, |r, c| l.entry(rs[r], lo + c));
        let (maxima, count) = row_maxima_counted(&a);
        evals += count;
        stats.blocks += 1;
        for (r, &(c, v)) in maxima.iter().enumerate() {
            take(&mut best, v, rs[r], lo + c);
        }
        if let Some(au) = audit.as_deref_mut() {
            au.check_block(&a, &maxima);
        }
    }
    stats.layers += 1;
    stats.evaluations += evals;
    stats.dims += rows + cols;
    if rows + cols > 0 {
        stats.worst_ratio_milli = stats.worst_ratio_milli.max(evals * 1000 / (rows + cols));
    }
    best
}

/// Optional consistency checks run alongside the fast path.
#[derive(Clone, Debug, Default)]
pub struct Audit {
    pub blocks_checked: usize,
    pub naive_mismatches: usize,
    pub monotone_checks: usize,
    pub monotone_violations: usize,
    state: u64,
}

impl Audit {
    pub fn new(seed: u64) -> Self {
        Audit { state: seed | 1, ..Default::default() }
    }

    fn next(&mut self, n: usize) -> usize {
        // xorshift; only picks random submatrices
        self.state ^= self.state << 13;
        self.state ^= self.state >> 7;
        self.state ^= self.state << 17;
        (self.state % n as u64) as usize
    }

    fn check_block<G: Fn(usize, usize) -> f64>(&mut self, a: &ImplicitMatrix<G>, maxima: &[(usize, f64)]) {
        self.blocks_checked += 1;
        if crate::smawk::naive_row_maxima(a) != maxima {
            self.naive_mismatches += 1;
        }
        if a.rows < 2 || a.cols < 2 {
            return;
        }
        for _ in 0..8 {
            let (mut i, mut i2) = (self.next(a.rows), self.next(a.rows));
            let (mut j, mut j2) = (self.next(a.cols), self.next(a.cols));
            if i == i2 || j == j2 {
                continue;
            }
            if i > i2 {
                std::mem::swap(&mut i, &mut i2);
            }
            if j > j2 {
                std::mem::swap(&mut j, &mut j2);
            }
            self.monotone_checks += 1;
            let (p, q) = ((a.eval)(i, j), (a.eval)(i, j2));
            let (r, s) = ((a.eval)(i2, j), (a.eval)(i2, j2));
            if (p < q && r >= s) || (p <= q && r > s) {
                self.monotone_violations += 1;
            }
        }
    }
}

/// Result of a case-7 pass: the best raw entry volume and the candidate
/// grown from it.
#[derive(Clone, Debug, Default)]
pub struct Case7Best {
    pub volume: Option<f64>,
    pub candidate: Option<CandidateBox>,
}

fn grown(g: Grower<'_>, mut f: Faces, mut sup: [Support; 6]) -> CandidateBox {
    g.maximalize(&mut f, &mut sup);
    g.candidate(&f, &sup, Source::Case7)
}

/// SMAWK over every layer of every frame.
pub fn enumerate_case7_fast(g: Grower<'_>, stats: &mut Case7Stats, mut audit: Option<&mut Audit>) -> Case7Best {
    let st = g.st;
    let mut best: Option<(f64, Faces, [Support; 6])> = None;
    for frame in Frame::all() {
        let Some(fd) = frame_data(st, frame) else { continue };
        stats.frames += 1;
        for layer in &fd.layers {
            let cols = columns(st, &fd, layer);
            let Some(runs) = allowed_runs(st, &frame, layer, &fd.rows, &cols) else { continue };
            let l = Layer { st, map: frame.map, layer: *layer, rows: &fd.rows, cols };
            if let Some((v, i, j)) = fast_layer(&l, &runs, stats, audit.as_deref_mut()) {
                if best.as_ref().map_or(true, |b| v > b.0) {
                    let (f, sup) = faces(st, &frame.map, layer, &l.rows[i], &l.cols[j]);
                    best = Some((v, f, sup));
                }
            }
        }
    }
    match best {
        Some((v, f, sup)) => Case7Best { volume: Some(v), candidate: Some(grown(g, f, sup)) },
        None => Case7Best::default(),
    }
}

/// Every valid (layer, row, column) box, checked directly and grown.
pub fn enumerate_case7_direct(g: Grower<'_>) -> (Case7Best, Vec<CandidateBox>) {
    let st = g.st;
    let mut best: Option<(f64, Faces, [Support; 6])> = None;
    let mut out = Vec::new();
    for frame in Frame::all() {
        let Some(fd) = frame_data(st, frame) else { continue };
        for layer in &fd.layers {
            let cols = columns(st, &fd, layer);
            for row in &fd.rows {
                for col in &cols {
                    let (f, sup) = faces(st, &frame.map, layer, row, col);
                    if !g.is_valid(&f) {
                        continue;
                    }
                    let v = volume_of(&f);
                    if best.as_ref().map_or(true, |b| v > b.0) {
                        best = Some((v, f, sup));
                    }
                    out.push(grown(g, f, sup));
                }
            }
        }
    }
    let top = match best {
        Some((v, f, sup)) => Case7Best { volume: Some(v), candidate: Some(grown(g, f, sup)) },
        None => Case7Best::default(),
    };
    (top, out)
}

fn corner_dirs(corner: RegionId) -> Vec<Direction> {
    corner.directions()
}

/// Support pairs `(p, q)` of one corner region: `p` holds face `faces.0`
/// and `q` holds face `faces.1` for some choice of the third face, as
/// consecutive steps of the staircase of the points behind that third
/// face. Retained point indices; sorted.
pub fn enumerate_pairs(scene: &Scene, st: &Structures, corner: RegionId, faces: (Direction, Direction)) -> Vec<(usize, usize)> {
    let _ = scene;
    let dirs = corner_dirs(corner);
    let (f1, f2) = faces;
    assert!(dirs.contains(&f1) && dirs.contains(&f2) && f1 != f2);
    let f3 = *dirs.iter().find(|&&d| d != f1 && d != f2).unwrap();
    let pts = &st.min[corner.mask() as usize];
    let mut out: Vec<(usize, usize)> = slice_corners(st, pts, f1, f2, f3)
        .into_iter()
        .filter_map(|c| match (c.sa, c.sb) {
            (Support::Blue(p), Support::Blue(q)) => Some((p, q)),
            _ => None,
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Brute-force version of [`enumerate_pairs`].
pub fn enumerate_pairs_reference(st: &Structures, corner: RegionId, faces: (Direction, Direction)) -> Vec<(usize, usize)> {
    let sys = &st.sys;
    let dirs = corner_dirs(corner);
    let (f1, f2) = faces;
    let f3 = *dirs.iter().find(|&&d| d != f1 && d != f2).unwrap();
    let (a, b, c) = (f1.index(), f2.index(), f3.index());
    let pts: Vec<usize> = st.min[corner.mask() as usize]
        .iter()
        .copied()
        .filter(|&i| [a, b, c].iter().all(|&d| sys.cons[i].key[d] < sys.bound[d]))
        .collect();
    let key = |i: usize, d: usize| sys.cons[i].key[d];
    let lex = |i: usize, j: usize| (key(i, a), key(i, b), sys.cons[i].point) < (key(j, a), key(j, b), sys.cons[j].point);
    let mut out = Vec::new();
    let mut values: Vec<f64> = pts.iter().map(|&i| key(i, c)).collect();
    values.sort_by(f64::total_cmp);
    values.dedup();
    for v in values {
        let slice: Vec<usize> = pts.iter().copied().filter(|&i| key(i, c) <= v).collect();
        let mut steps: Vec<usize> = slice
            .iter()
            .copied()
            .filter(|&s| !slice.iter().any(|&r| r != s && lex(r, s) && key(r, b) <= key(s, b)))
            .collect();
        steps.sort_by(|&i, &j| key(i, a).total_cmp(&key(j, a)));
        for w in steps.windows(2) {
            out.push((sys.cons[w[1]].point, sys.cons[w[0]].point));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::candidates::GrowthImpl;
    use crate::geom::Point3;
    use crate::preprocess::build_scene;

    fn p(x: f64, y: f64, z: f64) -> Point3 {
        Point3::new(x, y, z)
    }

    fn boxed(extra: &[Point3]) -> Scene {
        let mut blue = vec![
            p(3., 0.5, 0.5),
            p(-3., 0.5, 0.5),
            p(0.5, 3., 0.5),
            p(0.5, -3., 0.5),
            p(0.5, 0.5, 3.),
            p(0.5, 0.5, -3.),
        ];
        blue.extend_from_slice(extra);
        build_scene(&[p(0., 0., 0.), p(1., 1., 1.)], &blue).unwrap()
    }

    #[test]
    fn frames_are_distinct() {
        let all = Frame::all();
        assert_eq!(all.len(), 48);
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert_ne!(a.map, b.map);
            }
            for d in Direction::ALL {
                assert_eq!(a.map[d.opposite().index()], a.map[d.index()].opposite());
            }
        }
    }

    #[test]
    fn empty_scene_has_no_case7() {
        let s = boxed(&[]);
        let st = Structures::from_scene(&s);
        let g = Grower::new(&st, GrowthImpl::Staircase);
        let mut stats = Case7Stats::default();
        assert!(enumerate_case7_fast(g, &mut stats, None).volume.is_none());
        assert!(enumerate_case7_direct(g).1.is_empty());
    }

    #[test]
    fn figure_like_pattern_matches_direct() {
        // top-right-back pair, bottom-right-front pair, a left-front point
        let s = boxed(&[
            p(2.0, -0.5, 1.5),
            p(1.5, -1.0, 2.0),
            p(2.2, 1.5, -0.4),
            p(1.8, 2.0, -1.0),
            p(-1.0, 1.7, 0.5),
        ]);
        let st = Structures::from_scene(&s);
        let g = Grower::new(&st, GrowthImpl::Staircase);
        let mut stats = Case7Stats::default();
        let mut audit = Audit::new(7);
        let fast = enumerate_case7_fast(g, &mut stats, Some(&mut audit));
        let (direct, all) = enumerate_case7_direct(g);
        assert_eq!(fast.volume, direct.volume);
        assert!(fast.volume.is_some());
        assert_eq!(audit.naive_mismatches, 0);
        assert_eq!(audit.monotone_violations, 0);
        for c in &all {
            assert!(crate::oracle::check_maximal(&s, &c.bx));
        }
    }

    #[test]
    fn pairs_match_reference() {
        let s = boxed(&[p(2., 2.5, 2.9), p(2.5, 2.8, 2.), p(2.8, 2., 2.5), p(1.5, 1.5, 2.7)]);
        let st = Structures::from_scene(&s);
        let c = RegionId::corner(1, 1, 1);
        for faces in [(Direction::Top, Direction::Front), (Direction::Right, Direction::Top), (Direction::Front, Direction::Right)] {
            assert_eq!(enumerate_pairs(&s, &st, c, faces), enumerate_pairs_reference(&st, c, faces));
        }
        // a single point supports no pair
        let s = boxed(&[p(2., 2., 2.)]);
        let st = Structures::from_scene(&s);
        assert!(enumerate_pairs(&s, &st, c, (Direction::Top, Direction::Front)).is_empty());
    }
}
