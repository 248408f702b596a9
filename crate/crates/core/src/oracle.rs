//! Brute-force ground truth.

use crate::candidates::grow_scan;
use crate::error::{Error, Result};
use crate::geom::{contains_open, volume, Box3, Direction, Point3};
use crate::preprocess::{build_scene, Scene};
use serde::Serialize;

/// Largest retained set the oracle accepts.
pub const ORACLE_CAP: usize = 14;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum OracleOutcome {
    Bounded { bx: Box3, volume: f64 },
    Unbounded { directions: Vec<Direction> },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleResult {
    pub outcome: OracleOutcome,
    pub candidates_examined: u64,
}

impl OracleResult {
    pub fn volume(&self) -> Option<f64> {
        match self.outcome {
            OracleOutcome::Bounded { volume, .. } => Some(volume),
            OracleOutcome::Unbounded { .. } => None,
        }
    }
}

pub fn solve_bruteforce(red: &[Point3], blue: &[Point3]) -> Result<OracleResult> {
    let scene = build_scene(red, blue)?;
    solve_scene(&scene)
}

/// Face values for direction `d`: retained coordinates on or beyond the
/// `s_min` face, and the `s_max` face.
fn face_values(scene: &Scene, d: Direction) -> Vec<f64> {
    let a = d.axis();
    let inner = scene.s_min.face(d);
    let outer = scene.s_max.face(d);
    let mut v: Vec<f64> = scene
        .retained
        .iter()
        .map(|p| p.coord(a))
        .filter(|&c| d.key(c) >= d.key(inner) && d.key(c) < d.key(outer))
        .collect();
    v.push(outer);
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

pub fn solve_scene(scene: &Scene) -> Result<OracleResult> {
    let unbounded = scene.unbounded_directions();
    if !unbounded.is_empty() {
        return Ok(OracleResult { outcome: OracleOutcome::Unbounded { directions: unbounded }, candidates_examined: 0 });
    }
    if scene.m() > ORACLE_CAP {
        return Err(Error::OracleTooLarge { retained: scene.m(), cap: ORACLE_CAP });
    }
    let vals: Vec<Vec<f64>> = Direction::ALL.iter().map(|&d| face_values(scene, d)).collect();
    let max_ext = |a: usize| scene.s_max.extent(a);
    let mut examined = 0u64;
    let mut best: Option<Box3> = None;
    let mut best_vol = f64::NEG_INFINITY;
    let pts = &scene.retained;

    for &x0 in &vals[0] {
        for &x1 in &vals[1] {
            let ex = x1 - x0;
            if ex * max_ext(1) * max_ext(2) < best_vol {
                continue;
            }
            let in_x: Vec<&Point3> = pts.iter().filter(|p| x0 < p.x && p.x < x1).collect();
            for &y0 in &vals[2] {
                for &y1 in &vals[3] {
                    let ey = y1 - y0;
                    if ex * ey * max_ext(2) < best_vol {
                        continue;
                    }
                    let in_xy: Vec<&Point3> = in_x.iter().copied().filter(|p| y0 < p.y && p.y < y1).collect();
                    for &z0 in &vals[4] {
                        for &z1 in &vals[5] {
                            examined += 1;
                            let b = Box3::new([x0, y0, z0], [x1, y1, z1]);
                            let v = volume(&b);
                            if v < best_vol || in_xy.iter().any(|p| z0 < p.z && p.z < z1) {
                                continue;
                            }
                            if v > best_vol || b.lex_cmp(best.as_ref().unwrap()).is_lt() {
                                best_vol = v;
                                best = Some(b);
                            }
                        }
                    }
                }
            }
        }
    }
    let bx = best.expect("s_max itself is always a feasible tuple");
    debug_assert!(pts.iter().all(|p| !contains_open(&bx, p)));
    Ok(OracleResult { outcome: OracleOutcome::Bounded { bx, volume: best_vol }, candidates_examined: examined })
}

/// No face of `bx` can move outward without a retained point entering.
pub fn check_maximal(scene: &Scene, bx: &Box3) -> bool {
    Direction::ALL.iter().all(|&d| grow_scan(scene, bx, d).0 == bx.face(d))
}
