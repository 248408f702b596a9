#![allow(dead_code)]

use sepbox::generate::{generate, GenSpec, Generator};
use sepbox::{build_scene, Point3, Scene};

/// Six blockers at distance `d` around the unit cube.
pub fn blockers(d: f64) -> Vec<Point3> {
    let p = Point3::new;
    vec![p(1. + d, 0.5, 0.5), p(-d, 0.5, 0.5), p(0.5, 1. + d, 0.5), p(0.5, -d, 0.5), p(0.5, 0.5, 1. + d), p(0.5, 0.5, -d)]
}

/// Generated scene `i` of a mixed family: generators in rotation, `m`
/// cycling through `0..=max_m`.
pub fn mixed(i: u64, max_m: usize) -> (Vec<Point3>, Vec<Point3>) {
    let g = Generator::ALL[(i % 4) as usize];
    let k = (i / 4) as usize;
    let mut spec = GenSpec::new(g, 1 + k % 12, (k * 3 + i as usize) % (max_m + 1), 9000 + i);
    spec.grid = 3 + (k % 3) as u32;
    let d = generate(&spec).unwrap();
    (d.red, d.blue)
}

pub fn mixed_scene(i: u64, max_m: usize) -> Scene {
    let (r, b) = mixed(i, max_m);
    build_scene(&r, &b).unwrap()
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sepbox::regions::{minimal, slot_masks, Structures};

/// Unit-cube red pair, six blockers, and `m` random blue points; integer
/// coordinates when `grid`.
pub fn random_scene(seed: u64, m: usize, grid: bool) -> Scene {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = || if grid { rng.gen_range(-2..4) as f64 } else { rng.gen_range(-2.0..3.0) };
    let mut blue = blockers(2.5);
    for _ in 0..m {
        blue.push(Point3::new(c(), c(), c()));
    }
    build_scene(&[Point3::new(0., 0., 0.), Point3::new(1., 1., 1.)], &blue).unwrap()
}

/// Staircases against brute-force dominance, and idempotence.
pub fn check_staircases(st: &Structures) -> Result<(), String> {
    let cons = &st.sys.cons;
    for m in slot_masks() {
        let members: Vec<usize> = (0..cons.len()).filter(|&i| cons[i].mask == m).collect();
        let min = &st.min[m as usize];
        for &i in &members {
            let kept = min.contains(&i);
            if !kept && !min.iter().any(|&k| cons[k].dominates(&cons[i])) {
                return Err(format!("point {i} neither kept nor dominated"));
            }
            let strictly = members.iter().any(|&j| j != i && cons[j].dominates(&cons[i]) && !cons[i].dominates(&cons[j]));
            if strictly && kept {
                return Err(format!("dominated point {i} kept"));
            }
        }
        for &a in min {
            if min.iter().any(|&b| a != b && cons[a].dominates(&cons[b])) {
                return Err(format!("kept point {a} dominates another"));
            }
        }
        if &minimal(cons, min, m) != min {
            return Err(format!("filter not idempotent on mask {m:#b}"));
        }
    }
    Ok(())
}

/// Every pointer against a directional scan over the staircase.
pub fn check_pointers(st: &Structures) -> Result<(), String> {
    let cons = &st.sys.cons;
    for m in slot_masks() {
        let elems = &st.min[m as usize];
        for (i, c) in cons.iter().enumerate() {
            for d in sepbox::Direction::ALL {
                let got = st.pointers.get(i, m, d);
                let want = if c.mask & m == 0 {
                    None
                } else {
                    let a = d.axis();
                    let v = c.coords.coord(a);
                    let ranked = elems.iter().enumerate().map(|(pos, &e)| (cons[e].coords.coord(a), pos, e));
                    let by = |x: &(f64, usize, usize), y: &(f64, usize, usize)| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1));
                    if d.is_positive() {
                        ranked.filter(|x| x.0 > v).min_by(by).map(|x| x.2)
                    } else {
                        ranked.filter(|x| x.0 < v).max_by(by).map(|x| x.2)
                    }
                };
                if got != want {
                    return Err(format!("pointer {i} mask {m:#b} {}: {got:?} vs {want:?}", d.name()));
                }
            }
        }
    }
    Ok(())
}

/// Random inverse-Monge matrix (maximization form): every adjacent 2x2
/// cross difference is nonnegative. `ties` draws small integers.
pub fn random_monge(rng: &mut ChaCha8Rng, rows: usize, cols: usize, ties: bool) -> Vec<Vec<f64>> {
    let mut a = vec![vec![0.0; cols]; rows];
    let cell = |rng: &mut ChaCha8Rng| if ties { rng.gen_range(0..3) as f64 } else { rng.gen_range(0.0..10.0) };
    for i in 0..rows {
        for j in 0..cols {
            a[i][j] = match (i, j) {
                (0, 0) => cell(rng),
                (0, _) => a[0][j - 1] + cell(rng) - 5.0,
                (_, 0) => a[i - 1][0] + cell(rng) - 5.0,
                _ => a[i - 1][j] + a[i][j - 1] - a[i - 1][j - 1] + cell(rng),
            };
        }
    }
    a
}
