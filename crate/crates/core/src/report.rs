//! JSON documents for solve and oracle results.
//!
//! Maps are key-sorted and floats use shortest round-trip digits, so equal
//! results give equal bytes. Timings are left out unless asked for, since
//! they differ from run to run.

use crate::candidates::{CandidateBox, Support};
use crate::geom::{Box3, Direction};
use crate::oracle::{OracleOutcome, OracleResult};
use crate::preprocess::Scene;
use crate::solver::{Outcome, SolveResult};
use serde_json::{json, Map, Value};

fn box_json(b: &Box3) -> Value {
    json!({ "lo": b.lo, "hi": b.hi })
}

fn support_json(scene: &Scene, s: Support) -> Value {
    match s {
        Support::Blue(i) => json!({ "kind": "blue", "point": scene.retained[i].coords() }),
        Support::SmaxBound(_) => json!({ "kind": "smax" }),
        Support::Unbounded(_) => json!({ "kind": "unbounded" }),
    }
}

pub fn candidate_json(scene: &Scene, c: &CandidateBox) -> Value {
    let supports: Map<String, Value> =
        Direction::ALL.iter().map(|&d| (d.name().to_string(), support_json(scene, c.support(d)))).collect();
    json!({
        "box": box_json(&c.bx),
        "volume": c.volume(),
        "supports": supports,
        "case_label": c.case_label.to_string(),
        "source": c.source.name(),
    })
}

fn scene_json(scene: &Scene) -> Value {
    json!({
        "s_min": box_json(&scene.s_min),
        "s_max": {
            "lo": scene.s_max.lo.map(finite_or_null),
            "hi": scene.s_max.hi.map(finite_or_null),
        },
        "retained": scene.m(),
        "discarded_inside": scene.discarded_inside,
        "discarded_outside": scene.discarded_outside,
    })
}

fn finite_or_null(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

fn directions_json(ds: &[Direction]) -> Value {
    Value::Array(ds.iter().map(|d| json!(d.name())).collect())
}

pub fn solve_json(scene: &Scene, r: &SolveResult, timings: bool) -> Value {
    let s = &r.stats;
    let mut stats = json!({
        "staircase_points": s.staircase_points,
        "subsystems": s.subsystems,
        "per_label": s.per_label,
        "per_source": s.per_source,
        "sweep_seeds": s.sweep.seeds,
        "sweep_leaves": s.sweep.leaves,
        "supplementary_seeds": s.supplementary.seeds,
        "supplementary_pruned": s.supplementary.pruned,
        "supplementary_improved": s.supplementary_improved,
        "case7_layers": s.case7.layers,
        "case7_evaluations": s.case7.evaluations,
    });
    if timings {
        stats["timings_ns"] = json!({
            "preprocess": s.timings.preprocess_ns,
            "structures": s.timings.structures_ns,
            "cases": s.timings.cases_ns,
            "total": s.timings.total_ns,
        });
    }
    let mut doc = match &r.outcome {
        Outcome::Bounded(c) => {
            let mut v = candidate_json(scene, c);
            v["outcome"] = json!("bounded");
            v
        }
        Outcome::Unbounded(ds) => json!({ "outcome": "unbounded", "directions": directions_json(ds) }),
    };
    doc["scene"] = scene_json(scene);
    doc["stats"] = stats;
    doc
}

pub fn oracle_json(r: &OracleResult) -> Value {
    match &r.outcome {
        OracleOutcome::Bounded { bx, volume } => json!({
            "outcome": "bounded",
            "box": box_json(bx),
            "volume": volume,
            "candidates_examined": r.candidates_examined,
        }),
        OracleOutcome::Unbounded { directions } => {
            json!({ "outcome": "unbounded", "directions": directions_json(directions) })
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}
