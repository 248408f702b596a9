//! Scaling sweeps.
//!
//! CSV columns, in order:
//! `generator,seed,n,m,mode,phase_preprocess_ns,phase_structures_ns,phase_cases_ns,total_ns,volume,case_label`.
//! A run that fails keeps its row, with an empty volume and the error in
//! `case_label`.

use crate::error::Result;
use crate::generate::{generate, GenSpec, Generator};
use crate::oracle::solve_bruteforce;
use crate::solver::{solve, Outcome, SolveOptions};
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;

pub const COLUMNS: [&str; 11] = [
    "generator",
    "seed",
    "n",
    "m",
    "mode",
    "phase_preprocess_ns",
    "phase_structures_ns",
    "phase_cases_ns",
    "total_ns",
    "volume",
    "case_label",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Fast,
    Oracle,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchSpec {
    pub generator: Generator,
    pub ms: Vec<usize>,
    pub ns: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    pub mode: Mode,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub generator: String,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub mode: Mode,
    pub phase_preprocess_ns: u64,
    pub phase_structures_ns: u64,
    pub phase_cases_ns: u64,
    pub total_ns: u64,
    pub volume: Option<f64>,
    pub case_label: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Slopes {
    /// Log-log slope of median time against `m`, one per fixed `n`.
    pub vs_m: BTreeMap<usize, f64>,
    /// Log-log slope of median time against `n`, one per fixed `m`.
    pub vs_n: BTreeMap<usize, f64>,
}

fn run_one(spec: &GenSpec, mode: Mode) -> BenchRecord {
    let mut rec = BenchRecord {
        generator: spec.generator.name().to_string(),
        seed: spec.seed,
        n: spec.n,
        m: spec.m,
        mode,
        phase_preprocess_ns: 0,
        phase_structures_ns: 0,
        phase_cases_ns: 0,
        total_ns: 0,
        volume: None,
        case_label: String::new(),
    };
    let d = match generate(spec) {
        Ok(d) => d,
        Err(e) => {
            rec.case_label = format!("error: {e}");
            return rec;
        }
    };
    match mode {
        Mode::Fast => match solve(&d.red, &d.blue, &SolveOptions::default()) {
            Ok(r) => {
                let t = r.stats.timings;
                rec.phase_preprocess_ns = t.preprocess_ns;
                rec.phase_structures_ns = t.structures_ns;
                rec.phase_cases_ns = t.cases_ns;
                rec.total_ns = t.total_ns;
                rec.volume = r.volume();
                rec.case_label = match &r.outcome {
                    Outcome::Bounded(c) => c.case_label.to_string(),
                    Outcome::Unbounded(_) => "unbounded".into(),
                };
            }
            Err(e) => rec.case_label = format!("error: {e}"),
        },
        Mode::Oracle => {
            let t = Instant::now();
            let r = solve_bruteforce(&d.red, &d.blue);
            rec.total_ns = t.elapsed().as_nanos() as u64;
            match r {
                Ok(r) => {
                    rec.volume = r.volume();
                    rec.case_label = if r.volume().is_some() { "oracle" } else { "unbounded" }.into();
                }
                Err(e) => rec.case_label = format!("error: {e}"),
            }
        }
    }
    rec
}

/// Runs every `(m, n, rep)` combination in order, passing each record to
/// `sink` as soon as it is done.
pub fn run_bench(spec: &BenchSpec, mut sink: impl FnMut(&BenchRecord) -> Result<()>) -> Result<Vec<BenchRecord>> {
    let mut out = Vec::new();
    for &m in &spec.ms {
        for &n in &spec.ns {
            for rep in 0..spec.reps {
                let g = GenSpec::new(spec.generator, n, m, spec.seed + rep as u64);
                let rec = run_one(&g, spec.mode);
                sink(&rec)?;
                out.push(rec);
            }
        }
    }
    Ok(out)
}

pub fn csv_writer<W: std::io::Write>(w: W) -> Result<csv::Writer<W>> {
    let mut wtr = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    wtr.write_record(COLUMNS).map_err(csv_io)?;
    wtr.flush()?;
    Ok(wtr)
}

/// Writes one row and flushes, so an interrupted sweep leaves whole rows.
pub fn write_record<W: std::io::Write>(wtr: &mut csv::Writer<W>, r: &BenchRecord) -> Result<()> {
    wtr.serialize(r).map_err(csv_io)?;
    wtr.flush()?;
    Ok(())
}

fn csv_io(e: csv::Error) -> crate::error::Error {
    crate::error::Error::Io(std::io::Error::other(e.to_string()))
}

pub fn median(mut v: Vec<u64>) -> u64 {
    v.sort_unstable();
    let k = v.len();
    if k == 0 {
        0
    } else if k % 2 == 1 {
        v[k / 2]
    } else {
        (v[k / 2 - 1] + v[k / 2]) / 2
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(pts: &[(f64, f64)]) -> Option<f64> {
    if pts.len() < 2 {
        return None;
    }
    let lx: Vec<f64> = pts.iter().map(|p| p.0.ln()).collect();
    let ly: Vec<f64> = pts.iter().map(|p| p.1.max(1.0).ln()).collect();
    let k = pts.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / k, ly.iter().sum::<f64>() / k);
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    Some(sxy / sxx)
}

pub fn slopes(records: &[BenchRecord]) -> Slopes {
    let mut groups: BTreeMap<(usize, usize), Vec<u64>> = BTreeMap::new();
    for r in records {
        groups.entry((r.m, r.n)).or_default().push(r.total_ns);
    }
    let med: BTreeMap<(usize, usize), u64> = groups.into_iter().map(|(k, v)| (k, median(v))).collect();
    let mut by_n: BTreeMap<usize, Vec<(f64, f64)>> = BTreeMap::new();
    let mut by_m: BTreeMap<usize, Vec<(f64, f64)>> = BTreeMap::new();
    for (&(m, n), &t) in &med {
        by_n.entry(n).or_default().push((m as f64, t as f64));
        by_m.entry(m).or_default().push((n as f64, t as f64));
    }
    let fit = |g: BTreeMap<usize, Vec<(f64, f64)>>| -> BTreeMap<usize, f64> {
        g.into_iter().filter_map(|(k, pts)| loglog_slope(&pts).map(|s| (k, s))).collect()
    };
    Slopes { vs_m: fit(by_n), vs_n: fit(by_m) }
}

pub fn summary(s: &Slopes) -> String {
    let mut out = String::new();
    for (n, v) in &s.vs_m {
        out.push_str(&format!("slope time~m at n={n}: {v:.3}\n"));
    }
    for (m, v) in &s.vs_n {
        out.push_str(&format!("slope time~n at m={m}: {v:.3}\n"));
    }
    out
}
