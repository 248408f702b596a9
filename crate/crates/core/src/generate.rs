//! Seeded instance generators.
//!
//! Red points fill the unit cube `[0, 1]^3` (or a grid), blue points fall in
//! the shell around it. The same spec always gives the same dataset.

use crate::dataset::{Dataset, Meta};
use crate::error::{Error, Result};
use crate::geom::Point3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Blue uniform in `[-1, 2]^3` outside the open unit cube.
    UniformAnnulus,
    /// Blue in tight clusters near the corners of the unit cube, plus six
    /// far blockers.
    ClusteredCorners,
    /// Everything on the integer grid `{0, .., grid - 1}^3`, so ties and
    /// points on `s_min` planes are common.
    GridDegenerate,
    /// Six planted blockers (one per corridor) and the rest uniform over the
    /// edge and corner regions of `[-1, 2]^3`; `s_max` is always bounded
    /// and every non-planted point is retained.
    SparseBlockers,
}

impl Generator {
    pub const ALL: [Generator; 4] =
        [Generator::UniformAnnulus, Generator::ClusteredCorners, Generator::GridDegenerate, Generator::SparseBlockers];

    pub fn name(self) -> &'static str {
        match self {
            Generator::UniformAnnulus => "uniform-annulus",
            Generator::ClusteredCorners => "clustered-corners",
            Generator::GridDegenerate => "grid-degenerate",
            Generator::SparseBlockers => "sparse-blockers",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Generator> {
        Generator::ALL.into_iter().find(|g| g.name() == s).ok_or_else(|| Error::UnknownGenerator(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenSpec {
    pub generator: Generator,
    /// Red point count.
    pub n: usize,
    /// Blue point count.
    pub m: usize,
    pub seed: u64,
    /// Grid side for [`Generator::GridDegenerate`].
    pub grid: u32,
}

impl GenSpec {
    pub fn new(generator: Generator, n: usize, m: usize, seed: u64) -> GenSpec {
        GenSpec { generator, n, m, seed, grid: 4 }
    }
}

fn in_unit_open(c: &[f64; 3]) -> bool {
    c.iter().all(|&v| 0.0 < v && v < 1.0)
}

fn shell_point(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Point3 {
    loop {
        let c = [0; 3].map(|_| rng.gen_range(lo..hi));
        if !in_unit_open(&c) {
            return Point3::from(c);
        }
    }
}

fn red_cube(rng: &mut ChaCha8Rng, n: usize) -> Vec<Point3> {
    (0..n).map(|_| Point3::from([0; 3].map(|_| rng.gen::<f64>()))).collect()
}

/// Six points, one in the corridor beyond each face of the bounding box of
/// `red`, at a distance in `dist` from the unit cube.
fn blockers(rng: &mut ChaCha8Rng, red: &[Point3], dist: std::ops::Range<f64>) -> Vec<Point3> {
    let lo = [0, 1, 2].map(|a| red.iter().map(|p| p.coord(a)).fold(f64::INFINITY, f64::min));
    let hi = [0, 1, 2].map(|a| red.iter().map(|p| p.coord(a)).fold(f64::NEG_INFINITY, f64::max));
    (0..6)
        .map(|i| {
            let (a, positive) = (i / 2, i % 2 == 1);
            let mut c = [0, 1, 2].map(|b| lo[b] + (hi[b] - lo[b]) * rng.gen::<f64>());
            let d = rng.gen_range(dist.clone());
            c[a] = if positive { 1.0 + d } else { -d };
            Point3::from(c)
        })
        .collect()
}

pub fn generate(spec: &GenSpec) -> Result<Dataset> {
    if spec.n == 0 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (red, blue) = match spec.generator {
        Generator::UniformAnnulus => {
            let red = red_cube(&mut rng, spec.n);
            let blue = (0..spec.m).map(|_| shell_point(&mut rng, -1.0, 2.0)).collect();
            (red, blue)
        }
        Generator::ClusteredCorners => {
            let red = red_cube(&mut rng, spec.n);
            let mut blue = blockers(&mut rng, &red, 1.5..2.5);
            let centres: Vec<[f64; 3]> =
                (0..4).map(|_| [0; 3].map(|_| if rng.gen::<bool>() { 1.3 } else { -0.3 })).collect();
            while blue.len() < spec.m.max(6) {
                let c = centres[rng.gen_range(0..centres.len())];
                blue.push(Point3::from(c.map(|v| v + rng.gen_range(-0.25..0.25))));
            }
            blue.truncate(spec.m.max(6));
            (red, blue)
        }
        Generator::GridDegenerate => {
            if spec.grid < 2 {
                return Err(Error::InvalidParameters("grid must be at least 2".into()));
            }
            let g = spec.grid;
            let mut pt = || Point3::from([0; 3].map(|_| rng.gen_range(0..g) as f64));
            let red: Vec<Point3> = (0..spec.n).map(|_| pt()).collect();
            let blue = (0..spec.m).map(|_| pt()).collect();
            (red, blue)
        }
        Generator::SparseBlockers => {
            let red = red_cube(&mut rng, spec.n);
            let mut blue = blockers(&mut rng, &red, 1.0..2.0);
            while blue.len() < spec.m {
                let c = [0; 3].map(|_| rng.gen_range(-1.0..2.0));
                if c.iter().filter(|&&v| !(0.0..=1.0).contains(&v)).count() >= 2 {
                    blue.push(Point3::from(c));
                }
            }
            (red, blue)
        }
    };
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), spec.n as f64);
    params.insert("m".to_string(), spec.m as f64);
    if spec.generator == Generator::GridDegenerate {
        params.insert("grid".to_string(), spec.grid as f64);
    }
    let meta = Meta { name: None, generator: Some(spec.generator.name().into()), seed: Some(spec.seed), params };
    Ok(Dataset { red, blue, meta: Some(meta) })
}
