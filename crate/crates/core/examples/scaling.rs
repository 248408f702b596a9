//! A small timing sweep in m and in n, with fitted log-log slopes.

use sepbox::bench::{run_bench, slopes, summary, BenchSpec, Mode};
use sepbox::generate::Generator;

fn main() -> sepbox::Result<()> {
    let base = BenchSpec { generator: Generator::SparseBlockers, ms: vec![], ns: vec![], reps: 3, seed: 1, mode: Mode::Fast };
    let in_m = BenchSpec { ms: vec![100, 200, 400, 800], ns: vec![2000], ..base.clone() };
    let in_n = BenchSpec { ms: vec![50], ns: vec![1000, 10_000, 100_000], ..base };
    for spec in [in_m, in_n] {
        let rows = run_bench(&spec, |r| {
            println!("m {:>5} n {:>7} total {:>9} ns  {}", r.m, r.n, r.total_ns, r.case_label);
            Ok(())
        })?;
        print!("{}", summary(&slopes(&rows)));
    }
    Ok(())
}
