//! Inputs off general position: a single red point, blue points on the red
//! hull's planes, and an empty blue set.

use sepbox::oracle::solve_bruteforce;
use sepbox::{solve, Point3, SolveOptions};

fn show(name: &str, red: &[Point3], blue: &[Point3]) -> sepbox::Result<()> {
    let r = solve(red, blue, &SolveOptions::default())?;
    let o = solve_bruteforce(red, blue)?;
    println!("{name:<22} solver {:?}  oracle {:?}  subsystems {}", r.volume(), o.volume(), r.stats.subsystems);
    Ok(())
}

fn main() -> sepbox::Result<()> {
    let p = Point3::new;
    let six = |c: f64| vec![p(c, 0., 0.), p(-c, 0., 0.), p(0., c, 0.), p(0., -c, 0.), p(0., 0., c), p(0., 0., -c)];

    let mut blue = six(2.0);
    blue.extend([p(1.0, 1.0, 0.0), p(-1.0, 0.0, 1.0), p(0.0, -1.0, -1.0)]);
    show("single red point", &[p(0., 0., 0.)], &blue)?;

    // flat red hull (z = 0) with blue points on that plane
    let red = [p(0., 0., 0.), p(1., 1., 0.)];
    let mut blue = vec![p(3., 0.5, 0.), p(-3., 0.5, 0.), p(0.5, 3., 0.), p(0.5, -3., 0.), p(0.5, 0.5, 2.), p(0.5, 0.5, -2.)];
    blue.extend([p(2., 2., 0.), p(-1., 2., 0.), p(1.5, -1., 1.)]);
    show("flat hull, blue on it", &red, &blue)?;

    // blue on the hull's faces clamps s_max there
    let red = [p(0., 0., 0.), p(1., 1., 1.)];
    let mut blue = six(3.0);
    blue.push(p(1.0, 0.5, 0.5));
    show("blue on a red face", &red, &blue)?;

    let r = solve(&red, &[], &SolveOptions::default())?;
    println!("{:<22} {:?}", "no blue points", r.outcome);
    Ok(())
}
