//! Boxes fixed entirely by two opposite corner regions.

use super::growth::Grower;
use super::{CandidateBox, Source, Support};
use crate::geom::Direction;
use crate::regions::Structures;
use crate::system::{dirs_of, Faces};

/// A maximal empty orthant of one corner region, clipped to `s_max`: three
/// face keys (for the corner's directions in index order) and their supports.
#[derive(Clone, Debug, PartialEq)]
pub struct InnerCorner {
    pub dirs: [Direction; 3],
    pub key: [f64; 3],
    pub support: [Support; 3],
}

/// Inner corners of the corner region with direction mask `mask`.
pub fn inner_corners(st: &Structures, mask: u8) -> Vec<InnerCorner> {
    let sys = &st.sys;
    let dirs: Vec<Direction> = dirs_of(mask).collect();
    let dirs = [dirs[0], dirs[1], dirs[2]];
    let [a, b, c] = dirs.map(|d| d.index());
    let pts: Vec<usize> = st.min[mask as usize]
        .iter()
        .copied()
        .filter(|&i| dirs.iter().all(|d| sys.cons[i].key[d.index()] < sys.bound[d.index()]))
        .collect();
    let key = |i: usize, d: usize| sys.cons[i].key[d];

    let mut values: Vec<f64> = pts.iter().map(|&i| key(i, a)).collect();
    values.push(sys.bound[a]);
    values.sort_by(f64::total_cmp);
    values.dedup();

    let mut out = Vec::new();
    for &va in &values {
        let mut slice: Vec<usize> = pts.iter().copied().filter(|&i| key(i, a) < va).collect();
        slice.sort_by(|&i, &j| key(i, b).total_cmp(&key(j, b)).then(key(i, c).total_cmp(&key(j, c))));
        let mut steps: Vec<usize> = Vec::new();
        for i in slice {
            if steps.last().map_or(true, |&l| key(i, c) < key(l, c)) {
                steps.push(i);
            }
        }
        // (b, c) corners between consecutive steps, clipped to the bounds
        let mut corners: Vec<(f64, Support, f64, Support)> = Vec::new();
        let mut prev_c = (sys.bound[c], sys.bound_support[c]);
        for &s in &steps {
            corners.push((key(s, b), Support::Blue(sys.cons[s].point), prev_c.0, prev_c.1));
            prev_c = (key(s, c), Support::Blue(sys.cons[s].point));
        }
        corners.push((sys.bound[b], sys.bound_support[b], prev_c.0, prev_c.1));

        for (vb, sb, vc, sc) in corners {
            let sa = if va == sys.bound[a] {
                Some(sys.bound_support[a])
            } else {
                pts.iter()
                    .copied()
                    .find(|&i| key(i, a) == va && key(i, b) < vb && key(i, c) < vc)
                    .map(|i| Support::Blue(sys.cons[i].point))
            };
            if let Some(sa) = sa {
                out.push(InnerCorner { dirs, key: [va, vb, vc], support: [sa, sb, sc] });
            }
        }
    }
    out
}

fn corner_masks() -> Vec<(u8, u8)> {
    let mut out = Vec::new();
    for y in [2usize, 3] {
        for z in [4usize, 5] {
            let m = 1u8 << 1 | 1 << y | 1 << z;
            let opp = 1u8 << 0 | 1 << (y ^ 1) | 1 << (z ^ 1);
            out.push((m, opp));
        }
    }
    out
}

/// Every valid box whose six faces come from an inner corner of a corner
/// region and one of the opposite corner region.
pub fn enumerate_opposite(g: Grower<'_>) -> Vec<CandidateBox> {
    let st = g.st;
    let mut out = Vec::new();
    for (m, opp) in corner_masks() {
        let one = inner_corners(st, m);
        let two = inner_corners(st, opp);
        for p in &one {
            for q in &two {
                let mut f: Faces = st.sys.base;
                let mut sup = st.sys.bound_support;
                for ic in [p, q] {
                    for t in 0..3 {
                        f[ic.dirs[t].index()] = ic.key[t];
                        sup[ic.dirs[t].index()] = ic.support[t];
                    }
                }
                if g.is_valid(&f) {
                    g.maximalize(&mut f, &mut sup);
                    out.push(g.candidate(&f, &sup, Source::Case8));
                }
            }
        }
    }
    out
}
