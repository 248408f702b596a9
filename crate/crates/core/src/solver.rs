//! End-to-end solve: preprocessing, structures, enumerators, reduction.

use crate::candidates::corners::enumerate_opposite;
use crate::candidates::growth::Grower;
use crate::candidates::sweep::{pairs, SeedSearch, SweepStats, TRIPLES};
use crate::candidates::{better, CandidateBox, CaseLabel, GrowthImpl, Source, Support};
use crate::case7::{enumerate_case7_direct, enumerate_case7_fast, Case7Stats};
use crate::error::Result;
use crate::geom::{Direction, Point3};
use crate::preprocess::{build_scene, Scene};
use crate::regions::Structures;
use crate::system::{faces_of, Faces, System};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Case7Impl {
    #[default]
    Smawk,
    Direct,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveOptions {
    pub growth: GrowthImpl,
    pub case7: Case7Impl,
    /// `enabled[k]` gates candidates labelled case `k` (index 0 unused).
    pub enabled: [bool; 9],
    /// Keep pair-sweep candidates that match no case.
    pub keep_beyond: bool,
    /// Run the three-seed search that closes the gaps of the eight cases.
    pub supplementary: bool,
    /// Return every emitted candidate in [`SolveResult::candidates`].
    pub keep_candidates: bool,
    /// Enumerate every seeding instead of cutting branches that cannot beat
    /// the best box so far.
    pub exhaustive: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            growth: GrowthImpl::Staircase,
            case7: Case7Impl::Smawk,
            enabled: [true; 9],
            keep_beyond: true,
            supplementary: true,
            keep_candidates: false,
            exhaustive: false,
        }
    }
}

impl SolveOptions {
    /// Only the enumerators for the eight cases.
    pub fn cases_only() -> Self {
        SolveOptions { keep_beyond: false, supplementary: false, exhaustive: true, ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Bounded(CandidateBox),
    Unbounded(Vec<Direction>),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Timings {
    pub preprocess_ns: u64,
    pub structures_ns: u64,
    pub cases_ns: u64,
    pub total_ns: u64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SolveStats {
    pub retained: usize,
    pub discarded_inside: usize,
    pub discarded_outside: usize,
    pub staircase_points: usize,
    pub subsystems: usize,
    /// Emitted candidates per case label.
    pub per_label: BTreeMap<String, u64>,
    /// Emitted candidates per enumerator.
    pub per_source: BTreeMap<String, u64>,
    pub sweep: SweepStats,
    pub supplementary: SweepStats,
    /// The three-seed search found a strictly larger box than the cases.
    pub supplementary_improved: bool,
    pub case7: Case7Stats,
    pub timings: Timings,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveResult {
    pub outcome: Outcome,
    pub stats: SolveStats,
    pub candidates: Vec<CandidateBox>,
}

impl SolveResult {
    pub fn volume(&self) -> Option<f64> {
        match &self.outcome {
            Outcome::Bounded(c) => Some(c.volume()),
            Outcome::Unbounded(_) => None,
        }
    }

    pub fn best(&self) -> Option<&CandidateBox> {
        match &self.outcome {
            Outcome::Bounded(c) => Some(c),
            Outcome::Unbounded(_) => None,
        }
    }
}

fn ns(t: Instant) -> u64 {
    t.elapsed().as_nanos() as u64
}

pub fn solve(red: &[Point3], blue: &[Point3], opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let scene = build_scene(red, blue)?;
    Ok(solve_prepared(&scene, opts, start))
}

pub fn solve_scene(scene: &Scene, opts: &SolveOptions) -> SolveResult {
    solve_prepared(scene, opts, Instant::now())
}

struct Reducer<'a> {
    opts: &'a SolveOptions,
    top: Grower<'a>,
    best: Option<CandidateBox>,
    stats: SolveStats,
    kept: Vec<CandidateBox>,
}

impl Reducer<'_> {
    fn allowed(&self, label: CaseLabel) -> bool {
        match label {
            CaseLabel::Case(k) => self.opts.enabled[k as usize],
            CaseLabel::Beyond => self.opts.keep_beyond,
            _ => true,
        }
    }

    /// Regrows a subsystem box in the full system, then offers it.
    fn offer_faces(&mut self, regular: bool, f: &Faces, sup: &[Support; 6], source: Source) {
        let (mut f, mut sup) = (*f, *sup);
        if !regular {
            self.top.maximalize(&mut f, &mut sup);
        }
        let c = self.top.candidate(&f, &sup, source);
        self.offer(c);
    }

    fn offer(&mut self, c: CandidateBox) {
        if !self.allowed(c.case_label) && !matches!(c.source, Source::Supplementary | Source::Trivial) {
            return;
        }
        *self.stats.per_label.entry(c.case_label.to_string()).or_default() += 1;
        *self.stats.per_source.entry(c.source.name().to_string()).or_default() += 1;
        if self.best.as_ref().map_or(true, |b| better(&c, b)) {
            self.best = Some(c.clone());
        }
        if self.opts.keep_candidates {
            self.kept.push(c);
        }
    }

    fn best_volume(&self) -> f64 {
        self.best.as_ref().map_or(f64::NEG_INFINITY, |b| b.volume())
    }
}

fn solve_prepared(scene: &Scene, opts: &SolveOptions, start: Instant) -> SolveResult {
    let mut stats = SolveStats {
        retained: scene.m(),
        discarded_inside: scene.discarded_inside,
        discarded_outside: scene.discarded_outside,
        ..Default::default()
    };
    let unbounded = scene.unbounded_directions();
    if !unbounded.is_empty() {
        stats.timings.preprocess_ns = ns(start);
        stats.timings.total_ns = stats.timings.preprocess_ns;
        return SolveResult { outcome: Outcome::Unbounded(unbounded), stats, candidates: Vec::new() };
    }
    let sys = System::from_scene(scene);
    let regular = sys.is_regular();
    let subs = if regular { Vec::new() } else { sys.split_regular() };
    stats.timings.preprocess_ns = ns(start);

    let t = Instant::now();
    let top = Structures::build(sys);
    let sub_st: Vec<Structures> = subs.into_iter().map(Structures::build).collect();
    stats.timings.structures_ns = ns(t);
    stats.staircase_points = top.staircase_len();
    stats.subsystems = sub_st.len().max(1);

    let t = Instant::now();
    let tg = Grower::new(&top, opts.growth);
    let mut red = Reducer { opts, top: tg, best: None, stats, kept: Vec::new() };
    let systems: Vec<&Structures> = if regular { vec![&top] } else { sub_st.iter().collect() };

    // a greedy maximal box gives the search its first incumbent
    let mut greedy_f = top.sys.base;
    let mut greedy_sup = crate::candidates::sweep::initial_supports(&top.sys);
    red.top.maximalize(&mut greedy_f, &mut greedy_sup);
    let greedy = red.top.candidate(&greedy_f, &greedy_sup, Source::Trivial);

    for st in &systems {
        let g = Grower::new(st, opts.growth);
        if opts.enabled[7] {
            match opts.case7 {
                Case7Impl::Smawk => {
                    let r = enumerate_case7_fast(g, &mut red.stats.case7, None);
                    if let Some(c) = r.candidate {
                        red.offer_faces(regular, &faces_of(&c.bx), &c.supports, Source::Case7);
                    }
                }
                Case7Impl::Direct => {
                    let (r, all) = enumerate_case7_direct(g);
                    for c in all.iter().chain(r.candidate.as_ref()) {
                        red.offer_faces(regular, &faces_of(&c.bx), &c.supports, Source::Case7);
                    }
                }
            }
        }
        if opts.enabled[8] {
            for c in enumerate_opposite(g) {
                red.offer_faces(regular, &faces_of(&c.bx), &c.supports, Source::Case8);
            }
        }
    }

    let incumbent = |red: &Reducer| {
        if opts.exhaustive {
            None
        } else {
            Some(red.best_volume().max(greedy.volume()))
        }
    };
    for st in &systems {
        let mut search = SeedSearch::new(Grower::new(st, opts.growth));
        for [u, v] in pairs() {
            search.incumbent = incumbent(&red);
            let mut found: Vec<(Faces, [Support; 6])> = Vec::new();
            search.pair(u, v, &mut |f, sup| found.push((*f, *sup)));
            for (f, sup) in found {
                red.offer_faces(regular, &f, &sup, Source::PairSweep);
            }
        }
        let s = &mut red.stats.sweep;
        s.seeds += search.stats.seeds;
        s.leaves += search.stats.leaves;
        s.pruned += search.stats.pruned;
    }

    if opts.supplementary {
        let before = red.best_volume();
        for st in &systems {
            let mut search = SeedSearch::new(Grower::new(st, opts.growth));
            for triple in TRIPLES {
                let mut best = red.best_volume().max(greedy.volume());
                let mut found: Vec<(Faces, [Support; 6])> = Vec::new();
                search.bounded(&triple, &mut best, &mut |f, sup| found.push((*f, *sup)));
                for (f, sup) in found {
                    red.offer_faces(regular, &f, &sup, Source::Supplementary);
                }
            }
            let s = &mut red.stats.supplementary;
            s.seeds += search.stats.seeds;
            s.leaves += search.stats.leaves;
            s.pruned += search.stats.pruned;
        }
        red.stats.supplementary_improved = red.best_volume() > before;
    }

    if red.best.as_ref().map_or(true, |b| better(&greedy, b)) {
        // s_max when nothing is retained; otherwise only reached when the
        // enabled enumerators find nothing as large
        red.offer(greedy);
    }
    let mut stats = red.stats;
    stats.timings.cases_ns = ns(t);
    stats.timings.total_ns = ns(start);
    SolveResult { outcome: Outcome::Bounded(red.best.unwrap()), stats, candidates: red.kept }
}
