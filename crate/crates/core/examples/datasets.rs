//! Generate one dataset per generator, write it in both formats and read it
//! back.

use sepbox::dataset::{Dataset, Format};
use sepbox::generate::{generate, GenSpec, Generator};

fn main() -> sepbox::Result<()> {
    let dir = std::env::temp_dir().join("sepbox-datasets");
    std::fs::create_dir_all(&dir)?;
    for g in Generator::ALL {
        let d = generate(&GenSpec::new(g, 8, 12, 42))?;
        for (f, ext) in [(Format::Csv, "csv"), (Format::Json, "json")] {
            let path = dir.join(format!("{}.{ext}", g.name()));
            d.save(&path, f)?;
            let back = Dataset::load(&path, f)?;
            assert_eq!(back, d);
        }
        let r = sepbox::solve(&d.red, &d.blue, &Default::default())?;
        println!("{:<18} red {:>2} blue {:>2} volume {:?}", g.name(), d.red.len(), d.blue.len(), r.volume());
    }
    println!("written to {}", dir.display());
    Ok(())
}
