use sepbox::generate::{generate, GenSpec, Generator};
use sepbox::oracle::solve_bruteforce;
use sepbox::{solve, SolveOptions};

#[test]
fn fast_matches_oracle_on_generated_scenes() {
    let mut bad = Vec::new();
    let mut n_cases = 0;
    for g in Generator::ALL {
        for seed in 0..60u64 {
            let spec = GenSpec::new(g, 1 + (seed as usize % 6), (seed as usize * 7) % 13, seed);
            let d = generate(&spec).unwrap();
            let Ok(o) = solve_bruteforce(&d.red, &d.blue) else { continue };
            let r = solve(&d.red, &d.blue, &SolveOptions::default()).unwrap();
            n_cases += 1;
            if r.volume() != o.volume() {
                bad.push((g, seed, r.volume(), o.volume()));
            }
        }
    }
    assert!(bad.is_empty(), "{} of {n_cases} mismatched: {bad:?}", bad.len());
}
