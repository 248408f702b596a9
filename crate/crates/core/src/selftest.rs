//! Differential check of the solver against the brute-force oracle on
//! generated scenes.

use crate::generate::{generate, GenSpec, Generator};
use crate::oracle::{solve_scene as oracle_scene, ORACLE_CAP};
use crate::preprocess::build_scene;
use crate::solver::{solve_scene, SolveOptions};

#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub spec: GenSpec,
    pub fast: Option<f64>,
    pub oracle: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SelftestReport {
    pub instances: usize,
    pub bounded: usize,
    /// Scenes with more retained points than the oracle accepts.
    pub skipped: usize,
    pub mismatches: Vec<Mismatch>,
}

/// The `i`-th scene of a selftest: generators in rotation, `n` in `1..=40`,
/// `m` in `0..=12`.
pub fn instance_spec(i: usize, seed: u64) -> GenSpec {
    let g = Generator::ALL[i % 4];
    let k = i / 4;
    let mut spec = GenSpec::new(g, 1 + (k * 7) % 40, (k * 5 + i) % 13, seed.wrapping_add(i as u64));
    spec.grid = 3 + (k % 3) as u32;
    spec
}

pub fn run(count: usize, seed: u64, opts: &SolveOptions) -> SelftestReport {
    let mut rep = SelftestReport::default();
    for i in 0..count {
        let spec = instance_spec(i, seed);
        let d = generate(&spec).expect("selftest specs are valid");
        let scene = build_scene(&d.red, &d.blue).expect("generated red sets are nonempty and finite");
        if scene.m() > ORACLE_CAP {
            rep.skipped += 1;
            continue;
        }
        let o = oracle_scene(&scene).expect("within the oracle cap");
        let r = solve_scene(&scene, opts);
        rep.instances += 1;
        if o.volume().is_some() {
            rep.bounded += 1;
        }
        if r.volume() != o.volume() {
            rep.mismatches.push(Mismatch { spec, fast: r.volume(), oracle: o.volume() });
        }
    }
    rep
}
