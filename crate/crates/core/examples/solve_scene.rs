//! Solve a hand-made scene and print the box, its supports and the
//! pattern label.

use sepbox::{solve, Direction, Point3, SolveOptions, Support};

fn main() -> sepbox::Result<()> {
    let p = Point3::new;
    let red = [p(0.0, 0.0, 0.0), p(1.0, 1.0, 1.0), p(0.3, 0.8, 0.5)];
    let blue = [
        // one blocker per direction
        p(3.0, 0.5, 0.5),
        p(-2.0, 0.5, 0.5),
        p(0.5, 3.0, 0.5),
        p(0.5, -2.0, 0.5),
        p(0.5, 0.5, 3.0),
        p(0.5, 0.5, -2.0),
        // points in edge and corner regions
        p(2.0, 0.5, 2.0),
        p(1.5, 2.5, 1.5),
        p(-1.0, -1.0, 0.5),
        p(0.2, -1.5, -1.0),
        // inside the red hull, ignored
        p(0.5, 0.5, 0.5),
    ];
    let r = solve(&red, &blue, &SolveOptions::default())?;
    let Some(best) = r.best() else {
        println!("unbounded: {:?}", r.outcome);
        return Ok(());
    };
    println!("box    {:?} .. {:?}", best.bx.lo, best.bx.hi);
    println!("volume {}", best.volume());
    println!("label  {} (from {})", best.case_label, best.source.name());
    let scene = sepbox::build_scene(&red, &blue)?;
    for d in Direction::ALL {
        let s = match best.support(d) {
            Support::Blue(i) => format!("blue {:?}", scene.retained[i].coords()),
            Support::SmaxBound(_) => "s_max boundary".to_string(),
            Support::Unbounded(_) => "unbounded".to_string(),
        };
        println!("  {:<6} {s}", d.name());
    }
    println!("retained {} / discarded {} inside, {} outside", r.stats.retained, r.stats.discarded_inside, r.stats.discarded_outside);
    Ok(())
}
