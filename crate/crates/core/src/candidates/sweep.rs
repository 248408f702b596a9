//! Seed-and-grow enumeration.
//!
//! A few faces (the seeds) are fixed at candidate values; the remaining
//! faces are grown one at a time in every order, and the seeds are then
//! regrown. Every maximal box arises this way once its seed faces hold a
//! set of supports that breaks all dependency cycles among the others.

use super::growth::Grower;
use super::{CandidateBox, CaseLabel, Source, Support};
use crate::geom::Direction;
use crate::regions::Structures;
use crate::system::{volume_of, Faces};

/// Number of unordered direction pairs.
pub const PAIRS: usize = 15;

/// Index triples whose seeding reaches every maximal box that needs three
/// seeds. Indices follow [`Direction::index`].
pub const TRIPLES: [[usize; 3]; 10] = [
    [0, 1, 2],
    [0, 1, 3],
    [0, 2, 3],
    [1, 2, 3],
    [0, 4, 5],
    [1, 4, 5],
    [0, 2, 4],
    [0, 2, 5],
    [0, 3, 4],
    [0, 3, 5],
];

pub fn pairs() -> Vec<[usize; 2]> {
    let mut out = Vec::with_capacity(PAIRS);
    for u in 0..6 {
        for v in u + 1..6 {
            out.push([u, v]);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepStats {
    pub seeds: u64,
    pub leaves: u64,
    pub pruned: u64,
}

pub struct SeedSearch<'a> {
    pub g: Grower<'a>,
    /// Candidate keys per direction, largest first, with a support each.
    cand: [Vec<(f64, Support)>; 6],
    pub stats: SweepStats,
    /// Incumbent volume. When set, branches whose optimistic volume is
    /// strictly below it are cut, and emitted boxes raise it.
    pub incumbent: Option<f64>,
}

type Emit<'e> = dyn FnMut(&Faces, &[Support; 6]) + 'e;

impl<'a> SeedSearch<'a> {
    pub fn new(g: Grower<'a>) -> Self {
        let st: &Structures = g.st;
        let sys = &st.sys;
        let cand = Direction::ALL.map(|d| {
            let di = d.index();
            let mut v: Vec<(f64, Support)> = st
                .relevant()
                .map(|i| &sys.cons[i])
                .filter(|c| crate::system::has(c.mask, d) && c.key[di] < sys.bound[di])
                .map(|c| (c.key[di], Support::Blue(c.point)))
                .collect();
            v.push((sys.bound[di], sys.bound_support[di]));
            v.sort_by(|a, b| b.0.total_cmp(&a.0).then(support_rank(&a.1).cmp(&support_rank(&b.1))));
            v.dedup_by(|a, b| a.0 == b.0);
            v
        });
        SeedSearch { g, cand, stats: SweepStats::default(), incumbent: None }
    }

    pub fn candidates(&self, d: Direction) -> &[(f64, Support)] {
        &self.cand[d.index()]
    }

    /// Every seeding of the pair `(u, v)`, completed in all orders; cut by
    /// the incumbent if one is set.
    pub fn pair(&mut self, u: usize, v: usize, emit: &mut Emit<'_>) {
        self.run(&[u, v], emit);
    }

    /// Branch and bound over the seeding of `seeds`, starting from `*best`
    /// and leaving the final incumbent there.
    pub fn bounded(&mut self, seeds: &[usize], best: &mut f64, emit: &mut Emit<'_>) {
        let saved = self.incumbent.replace(*best);
        self.run(seeds, emit);
        *best = self.incumbent.unwrap_or(*best);
        self.incumbent = saved.map(|v| v.max(*best));
    }

    fn run(&mut self, seeds: &[usize], emit: &mut Emit<'_>) {
        let sys = &self.g.st.sys;
        let f = sys.base;
        let sup = initial_supports(sys);
        let seeds: Vec<Direction> = seeds.iter().map(|&i| Direction::from_index(i)).collect();
        self.seed(&seeds, 0, f, sup, emit);
    }

    /// The optimistic volume of every completion of `f` falls short of the
    /// incumbent. Faces outside `set` are grown independently from `f`,
    /// which can only overshoot their final values.
    fn cut(&mut self, f: &Faces, sup: &[Support; 6], set: u8) -> bool {
        let Some(best) = self.incumbent else { return false };
        let mut ub = *f;
        for d in Direction::ALL {
            if set & (1 << d.index()) == 0 {
                ub[d.index()] = self.g.grow(f, sup, d).0;
            }
        }
        let cut = volume_of(&ub) < best;
        if cut {
            self.stats.pruned += 1;
        }
        cut
    }

    fn seed(&mut self, seeds: &[Direction], level: usize, f: Faces, sup: [Support; 6], emit: &mut Emit<'_>) {
        let set: u8 = seeds[..level].iter().fold(0, |m, d| m | 1 << d.index());
        if level == seeds.len() {
            self.stats.seeds += 1;
            let mut seen: Vec<Faces> = Vec::new();
            self.complete(seeds, !set & 63, f, sup, &mut seen, emit);
            return;
        }
        let u = seeds[level];
        let (g, gs) = self.g.grow(&f, &sup, u);
        let n = self.cand[u.index()].len();
        for ci in 0..n {
            let (k, s) = self.cand[u.index()][ci];
            if k > g {
                continue;
            }
            let mut f2 = f;
            let mut sup2 = sup;
            f2[u.index()] = k;
            sup2[u.index()] = if k == g { gs } else { s };
            if self.cut(&f2, &sup2, set | 1 << u.index()) {
                continue;
            }
            self.seed(seeds, level + 1, f2, sup2, emit);
        }
    }

    fn complete(&mut self, seeds: &[Direction], rest: u8, f: Faces, sup: [Support; 6], seen: &mut Vec<Faces>, emit: &mut Emit<'_>) {
        if rest == 0 {
            let mut f = f;
            let mut sup = sup;
            for &d in seeds {
                let (k, s) = self.g.grow(&f, &sup, d);
                f[d.index()] = k;
                sup[d.index()] = s;
            }
            self.stats.leaves += 1;
            if !seen.contains(&f) {
                seen.push(f);
                if let Some(b) = self.incumbent.as_mut() {
                    *b = b.max(volume_of(&f));
                }
                emit(&f, &sup);
            }
            return;
        }
        for d in Direction::ALL {
            if rest & (1 << d.index()) == 0 {
                continue;
            }
            let (k, s) = self.g.grow(&f, &sup, d);
            let mut f2 = f;
            let mut sup2 = sup;
            f2[d.index()] = k;
            sup2[d.index()] = s;
            let rest2 = rest & !(1 << d.index());
            if rest2 != 0 && self.cut(&f2, &sup2, !rest2 & 63) {
                continue;
            }
            self.complete(seeds, rest2, f2, sup2, seen, emit);
        }
    }
}

fn support_rank(s: &Support) -> (u8, usize) {
    match *s {
        Support::Blue(i) => (0, i),
        Support::SmaxBound(d) => (1, d.index()),
        Support::Unbounded(d) => (2, d.index()),
    }
}

/// Supports of the faces of `s_min` before any growth. Nothing blocks a
/// face that has not moved, so these are placeholders.
pub fn initial_supports(sys: &crate::system::System) -> [Support; 6] {
    sys.bound_support
}

/// All pair-sweep candidates whose support pattern is case `k`.
pub fn enumerate_case(st: &Structures, g: Grower<'_>, k: u8) -> Vec<CandidateBox> {
    debug_assert!(std::ptr::eq(st, g.st));
    let mut out = Vec::new();
    let mut search = SeedSearch::new(g);
    for [u, v] in pairs() {
        search.pair(u, v, &mut |f, sup| {
            let c = g.candidate(f, sup, Source::PairSweep);
            if c.case_label == CaseLabel::Case(k) {
                out.push(c);
            }
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_count() {
        assert_eq!(pairs().len(), PAIRS);
    }
}
