mod common;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sepbox::oracle::solve_bruteforce;
use sepbox::report::{render, solve_json};
use sepbox::solver::solve_scene;
use sepbox::{build_scene, solve, Case7Impl, GrowthImpl, Outcome, Point3, SolveOptions};

#[test]
fn matches_oracle_under_every_option_set() {
    let mut direct = SolveOptions { case7: Case7Impl::Direct, ..Default::default() };
    direct.growth = GrowthImpl::Scan;
    let exhaustive = SolveOptions { exhaustive: true, ..Default::default() };
    for i in 0..400 {
        let (red, blue) = common::mixed(i, 12);
        let want = solve_bruteforce(&red, &blue).unwrap().volume();
        for opts in [&SolveOptions::default(), &direct, &exhaustive] {
            assert_eq!(solve(&red, &blue, opts).unwrap().volume(), want, "scene {i}");
        }
    }
}

#[test]
fn permutation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..200 {
        let (red, blue) = common::mixed(i, 30);
        let (mut red2, mut blue2) = (red.clone(), blue.clone());
        red2.shuffle(&mut rng);
        blue2.shuffle(&mut rng);
        let sa = build_scene(&red, &blue).unwrap();
        let sb = build_scene(&red2, &blue2).unwrap();
        let a = solve_scene(&sa, &SolveOptions::default());
        let b = solve_scene(&sb, &SolveOptions::default());
        assert_eq!(a.volume(), b.volume(), "scene {i}");
        assert_eq!(a.best().map(|c| c.bx), b.best().map(|c| c.bx), "scene {i}");
        // supports are reported by coordinates, so the documents match too
        assert_eq!(render(&solve_json(&sa, &a, false)), render(&solve_json(&sb, &b, false)), "scene {i}");
    }
}

#[test]
fn translation_moves_the_box() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..200 {
        let grid = |rng: &mut ChaCha8Rng| Point3::from([0; 3].map(|_| rng.gen_range(-3..5) as f64));
        let red: Vec<Point3> = (0..1 + i % 4).map(|_| grid(&mut rng)).collect();
        let blue: Vec<Point3> = (0..12).map(|_| grid(&mut rng)).collect();
        let t = [0; 3].map(|_| rng.gen_range(-50..50) as f64);
        let shift = |v: &[Point3]| v.iter().map(|p| Point3::new(p.x + t[0], p.y + t[1], p.z + t[2])).collect::<Vec<_>>();
        let a = solve(&red, &blue, &SolveOptions::default()).unwrap();
        let b = solve(&shift(&red), &shift(&blue), &SolveOptions::default()).unwrap();
        match (&a.outcome, &b.outcome) {
            (Outcome::Bounded(x), Outcome::Bounded(y)) => {
                assert_eq!(x.volume(), y.volume(), "scene {i}");
                for ax in 0..3 {
                    assert_eq!(x.bx.lo[ax] + t[ax], y.bx.lo[ax]);
                    assert_eq!(x.bx.hi[ax] + t[ax], y.bx.hi[ax]);
                }
            }
            (Outcome::Unbounded(x), Outcome::Unbounded(y)) => assert_eq!(x, y),
            _ => panic!("scene {i}: outcome kind changed"),
        }
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    for i in 0..50 {
        let scene = common::mixed_scene(i, 40);
        let a = render(&solve_json(&scene, &solve_scene(&scene, &SolveOptions::default()), false));
        let b = render(&solve_json(&scene, &solve_scene(&scene, &SolveOptions::default()), false));
        assert_eq!(a, b);
    }
}

#[test]
fn bounded_results_sit_between_smin_and_smax() {
    for i in 0..200 {
        let scene = common::mixed_scene(i, 40);
        if let Outcome::Bounded(c) = solve_scene(&scene, &SolveOptions::default()).outcome {
            assert!(scene.s_min.is_subset_of(&c.bx) && c.bx.is_subset_of(&scene.s_max));
            assert!(c.volume() >= sepbox::geom::volume(&scene.s_min));
        }
    }
}
