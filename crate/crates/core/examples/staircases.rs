//! Dominance-minimal staircases of edge and corner regions, and the
//! neighbour pointers between them.

use sepbox::preprocess::RegionKind;
use sepbox::regions::Structures;
use sepbox::{build_scene, Direction, Point3, RegionId};

fn main() -> sepbox::Result<()> {
    let p = Point3::new;
    let red = [p(0.0, 0.0, 0.0), p(1.0, 1.0, 1.0)];
    let mut blue = vec![p(5.0, 0.5, 0.5), p(-4.0, 0.5, 0.5), p(0.5, 5.0, 0.5), p(0.5, -4.0, 0.5), p(0.5, 0.5, 5.0), p(0.5, 0.5, -4.0)];
    // top-right edge: (2.5, _, 3) is dominated by (2, _, 2)
    blue.extend([p(2.0, 0.5, 2.0), p(3.0, 0.5, 1.5), p(2.5, 0.5, 3.0)]);
    // right-front-top corner
    blue.extend([p(2.0, 3.0, 4.0), p(3.0, 4.0, 2.0), p(4.0, 2.0, 3.0), p(4.5, 4.5, 4.5)]);
    // right-front edge
    blue.push(p(2.5, 1.5, 0.5));

    let scene = build_scene(&red, &blue)?;
    let st = Structures::from_scene(&scene);
    for r in RegionId::all() {
        let pts: Vec<[f64; 3]> = match r.kind() {
            RegionKind::Edge => st.staircase2d(r).steps.iter().map(|&i| scene.retained[i].coords()).collect(),
            RegionKind::Corner => st.staircase3d(r).corners.iter().map(|&i| scene.retained[i].coords()).collect(),
            RegionKind::Side => continue,
        };
        if !pts.is_empty() {
            println!("{r}: {pts:?}");
        }
    }

    let q = scene.retained.iter().position(|&x| x == p(2.5, 1.5, 0.5)).unwrap();
    let con = st.con_of_point(q).unwrap();
    let edge = RegionId::edge(Direction::Right, Direction::Top);
    for d in Direction::ALL {
        let hit = st.pointers.get(con, edge.mask(), d).map(|c| st.sys.cons[c].coords.coords());
        println!("pointer from {:?} into {edge} toward {}: {hit:?}", scene.retained[q].coords(), d.name());
    }
    Ok(())
}
