mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sepbox::geom::contains_open;
use sepbox::regions::{slot_masks, Structures};
use sepbox::system::box_of;
use sepbox::{Direction, Scene};

fn scenes() -> impl Iterator<Item = Scene> {
    (0..100u64).map(|s| common::random_scene(s, 20 + (s as usize * 37) % 181, s % 3 == 0))
}

#[test]
fn staircases_against_brute_force() {
    for scene in scenes() {
        common::check_staircases(&Structures::from_scene(&scene)).unwrap();
    }
}

#[test]
fn staircases_exclude_the_same_boxes() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for scene in scenes().take(40) {
        let st = Structures::from_scene(&scene);
        for _ in 0..50 {
            let mut f = st.sys.base;
            for d in Direction::ALL {
                let i = d.index();
                f[i] += rng.gen::<f64>() * (st.sys.bound[i] - st.sys.base[i]).min(6.0);
            }
            let b = box_of(&f);
            for m in slot_masks() {
                let all = st.sys.cons.iter().filter(|c| c.mask == m).any(|c| contains_open(&b, &c.coords));
                let stairs = st.min[m as usize].iter().any(|&i| contains_open(&b, &st.sys.cons[i].coords));
                assert_eq!(all, stairs);
            }
        }
    }
}

#[test]
fn pointers_against_scan() {
    for scene in scenes() {
        common::check_pointers(&Structures::from_scene(&scene)).unwrap();
    }
}
