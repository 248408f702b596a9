//! Differential run: the solver against the brute-force oracle on a few
//! hundred generated scenes.

use sepbox::selftest;
use sepbox::SolveOptions;

fn main() {
    let count = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(400);
    for (name, opts) in [("full", SolveOptions::default()), ("cases only", SolveOptions::cases_only())] {
        let r = selftest::run(count, 7, &opts);
        println!(
            "{name:<10} instances {} bounded {} mismatches {}",
            r.instances,
            r.bounded,
            r.mismatches.len()
        );
        for m in r.mismatches.iter().take(3) {
            println!("    {} seed {}: got {:?}, oracle {:?}", m.spec.generator, m.spec.seed, m.fast, m.oracle);
        }
    }
}
