//! The layered case-7 search: SMAWK per layer against the direct scan,
//! with the optional audit of each matrix block.

use sepbox::candidates::growth::Grower;
use sepbox::case7::{enumerate_case7_direct, enumerate_case7_fast, Audit, Case7Stats};
use sepbox::generate::{generate, GenSpec, Generator};
use sepbox::regions::Structures;
use sepbox::{build_scene, GrowthImpl};

fn main() -> sepbox::Result<()> {
    let mut stats = Case7Stats::default();
    let mut audit = Audit::new(11);
    let mut agree = 0;
    let mut found = 0;
    let runs = 200;
    for seed in 0..runs {
        let d = generate(&GenSpec::new(Generator::ClusteredCorners, 4, 40, seed))?;
        let scene = build_scene(&d.red, &d.blue)?;
        let st = Structures::from_scene(&scene);
        let g = Grower::new(&st, GrowthImpl::Staircase);
        let fast = enumerate_case7_fast(g, &mut stats, Some(&mut audit));
        let (direct, _) = enumerate_case7_direct(g);
        agree += usize::from(fast.volume == direct.volume);
        found += usize::from(fast.volume.is_some());
    }
    println!("{agree}/{runs} scenes agree, {found} with a case-7 box");
    println!(
        "layers {} evaluations {} (rows+cols {}), worst per-layer ratio {:.3}",
        stats.layers,
        stats.evaluations,
        stats.dims,
        stats.worst_ratio_milli as f64 / 1000.0
    );
    println!(
        "audit: {} blocks, {} naive mismatches, {}/{} monotonicity violations",
        audit.blocks_checked, audit.naive_mismatches, audit.monotone_violations, audit.monotone_checks
    );
    Ok(())
}
