use proptest::prelude::*;
use sepbox::dataset::{Dataset, Format};
use sepbox::Point3;

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![any::<f64>().prop_filter("finite", |v| v.is_finite()), -10.0..10.0f64, Just(-0.0)]
}

fn pts() -> impl Strategy<Value = Vec<Point3>> {
    prop::collection::vec(prop::array::uniform3(finite()).prop_map(Point3::from), 0..20)
}

proptest! {
    #[test]
    fn round_trips_exactly(red in pts(), blue in pts()) {
        let d = Dataset::new(red, blue);
        for f in [Format::Csv, Format::Json] {
            let back = Dataset::parse(&d.render(f).unwrap(), f).unwrap();
            prop_assert_eq!(back.red.len(), d.red.len());
            for (a, b) in back.red.iter().chain(&back.blue).zip(d.red.iter().chain(&d.blue)) {
                for ax in 0..3 {
                    prop_assert_eq!(a.coord(ax).to_bits(), b.coord(ax).to_bits());
                }
            }
        }
    }
}
