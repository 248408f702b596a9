mod common;

use proptest::prelude::*;
use sepbox::geom::{contains_open, Box3};
use sepbox::preprocess::{classify, compute_smax, compute_smin, RegionKind};
use sepbox::{build_scene, Direction, Point3};

fn pt() -> impl Strategy<Value = Point3> {
    prop::array::uniform3(-3.0..4.0f64).prop_map(Point3::from)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scene_invariants(red in prop::collection::vec(prop::array::uniform3(0.0..1.0f64).prop_map(Point3::from), 1..6),
                        blue in prop::collection::vec(pt(), 0..40)) {
        let s = build_scene(&red, &blue).unwrap();
        prop_assert!(s.s_min.is_subset_of(&s.s_max));
        prop_assert_eq!(s.m() + s.discarded_inside + s.discarded_outside, blue.len());
        for (i, p) in s.retained.iter().enumerate() {
            prop_assert!(contains_open(&s.s_max, p));
            prop_assert!(!contains_open(&s.s_min, p));
            prop_assert!(s.regions[i].kind() != RegionKind::Side);
            prop_assert_eq!(classify(&s.s_min, &s.s_max, p).unwrap(), s.regions[i]);
            prop_assert_eq!(blue[s.blue_index[i]], *p);
        }
        for w in s.retained.windows(2) {
            prop_assert!(w[0].coords() <= w[1].coords());
        }
        // no blue point lies in the open interior of s_max along an open corridor
        for d in Direction::ALL {
            if let Some(b) = s.smax_blocker[d.index()] {
                prop_assert_eq!(blue[b].coord(d.axis()), s.s_max.face(d));
            }
        }
    }

    #[test]
    fn smin_ignores_order_and_duplicates(red in prop::collection::vec(pt(), 1..10), dup in 0usize..10) {
        let base = compute_smin(&red).unwrap();
        let mut other: Vec<Point3> = red.iter().rev().copied().collect();
        other.push(red[dup % red.len()]);
        prop_assert_eq!(compute_smin(&other).unwrap(), base);
    }

    /// Leaving s_max on some axis swallows a blue point. This needs general
    /// position: a full-dimensional red hull, and the blocker strictly
    /// inside its corridor.
    #[test]
    fn leaving_smax_hits_blue(red in prop::collection::vec(prop::array::uniform3(0.0..1.0f64).prop_map(Point3::from), 2..5),
                              blue in prop::collection::vec(pt(), 1..30),
                              face in 0usize..6, t in 0.001..1.0f64, u in prop::array::uniform3(0.01..0.99f64), dist in 0.1..3.0f64) {
        let s_min = compute_smin(&red).unwrap();
        prop_assume!((0..3).all(|a| s_min.extent(a) > 0.0));
        let d = Direction::from_index(face);
        // plant one point in the corridor of d
        let mut c = [0, 1, 2].map(|a| s_min.lo[a] + u[a] * (s_min.hi[a] - s_min.lo[a]));
        c[d.axis()] = if d.is_positive() { s_min.hi[d.axis()] + dist } else { s_min.lo[d.axis()] - dist };
        let mut blue = blue;
        blue.push(Point3::from(c));
        let s_max = compute_smax(&s_min, &blue);
        prop_assert!(s_max.face(d).is_finite());
        let mut b: Box3 = s_min;
        let c = s_max.face(d);
        b.set_face(d, if d.is_positive() { c + t } else { c - t });
        prop_assert!(blue.iter().any(|p| contains_open(&b, p)) || !b.is_valid());
    }
}

#[test]
fn spec_examples() {
    let p = Point3::new;
    assert_eq!(compute_smin(&[p(0., 0., 0.), p(1., 2., 3.)]).unwrap(), Box3::new([0.; 3], [1., 2., 3.]));
    assert_eq!(compute_smin(&[p(1., 1., 1.)]).unwrap(), Box3::new([1.; 3], [1.; 3]));
    assert_eq!(compute_smin(&[p(0., 0., 0.), p(1., 0., 0.), p(0.5, -2., 5.)]).unwrap(), Box3::new([0., -2., 0.], [1., 0., 5.]));
    assert!(matches!(compute_smin(&[]), Err(sepbox::Error::EmptyRedSet)));
    assert!(matches!(compute_smin(&[p(f64::NAN, 0., 0.)]), Err(sepbox::Error::NonFiniteInput { .. })));

    let unit = Box3::new([0.; 3], [1.; 3]);
    let m = compute_smax(&unit, &[p(3., 0.5, 0.5)]);
    assert_eq!(m.hi[0], 3.0);
    assert!(m.lo.iter().all(|v| v.is_infinite()) && m.hi[1].is_infinite() && m.hi[2].is_infinite());
    assert_eq!(compute_smax(&unit, &common::blockers(1.0)), Box3::new([-1.; 3], [2.; 3]));
    assert!(!compute_smax(&unit, &[p(2., 5., 5.)]).is_bounded());

    let red = [p(0., 0., 0.), p(1., 1., 1.)];
    let s = build_scene(&red, &[p(0.5, 0.5, 0.5), p(3., 0.5, 0.5)]).unwrap();
    assert_eq!((s.discarded_inside, s.s_max.hi[0], s.m()), (1, 3.0, 0));
    let mut blue = common::blockers(1.0);
    blue.push(p(1.5, 1.5, 1.5));
    let s = build_scene(&red, &blue).unwrap();
    assert_eq!(s.retained, vec![p(1.5, 1.5, 1.5)]);
    assert_eq!(s.regions[0], sepbox::RegionId::corner(1, 1, 1));
    // a blue point on a face of s_min clamps s_max to that face
    let s = build_scene(&red, &[p(1.0, 0.5, 0.5)]).unwrap();
    assert_eq!(s.s_max.hi[0], 1.0);
}
