use proptest::prelude::*;
use sepbox::geom::{contains_closed, contains_open, volume};
use sepbox::{Box3, Direction, Point3};

fn coord() -> impl Strategy<Value = f64> {
    prop_oneof![(-4i32..5).prop_map(|v| v as f64), -4.0..4.0f64]
}

fn a_box() -> impl Strategy<Value = Box3> {
    prop::array::uniform3((coord(), coord())).prop_map(|a| {
        let lo = a.map(|(x, y)| x.min(y));
        let hi = a.map(|(x, y)| x.max(y));
        Box3::new(lo, hi)
    })
}

proptest! {
    #[test]
    fn open_implies_closed(b in a_box(), c in prop::array::uniform3(coord())) {
        let p = Point3::from(c);
        prop_assert!(!contains_open(&b, &p) || contains_closed(&b, &p));
    }

    #[test]
    fn volume_is_monotone(b in a_box(), grow in prop::array::uniform3((0.0..2.0f64, 0.0..2.0f64))) {
        let mut big = b;
        for a in 0..3 {
            big.lo[a] -= grow[a].0;
            big.hi[a] += grow[a].1;
        }
        prop_assert!(b.is_subset_of(&big));
        prop_assert!(volume(&b) <= volume(&big));
    }
}

#[test]
fn opposite_is_an_involution() {
    for d in Direction::ALL {
        assert_eq!(d.opposite().opposite(), d);
        assert_ne!(d.opposite(), d);
        assert_eq!(d.opposite().axis(), d.axis());
    }
}

#[test]
fn spec_examples() {
    assert_eq!(volume(&Box3::new([0.; 3], [1., 2., 3.])), 6.0);
    assert_eq!(volume(&Box3::new([0., 0., 1.], [1., 1., 1.])), 0.0);
    let u = Box3::new([0.; 3], [1.; 3]);
    assert!(contains_closed(&u, &Point3::new(1., 1., 1.)));
    assert!(!contains_closed(&u, &Point3::new(1.0001, 0.5, 0.5)));
    assert!(!contains_open(&u, &Point3::new(1., 0.5, 0.5)));
    assert!(!contains_open(&u, &Point3::new(0., 0., 0.)));
    assert!(contains_open(&u, &Point3::new(0.5, 0.5, 0.5)));
    let inf = Box3::new([0.; 3], [1., 1., f64::INFINITY]);
    assert_eq!(volume(&inf), f64::INFINITY);
}
