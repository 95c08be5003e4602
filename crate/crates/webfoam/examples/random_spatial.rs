// Random spatial diagrams: skein expansion against the signed Tait count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use webfoam::generate::{random_spatial, SpatialParams};
use webfoam::skein::euler_char;
use webfoam::tait::signed_tait;

pub fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let params = SpatialParams {
        max_vertices: 6,
        max_crossings: 8,
        twist_probability: 0.25,
    };
    for _ in 0..12 {
        let d = random_spatial(params, &mut rng);
        let r = euler_char(&d);
        let sign = if (d.vertex_count() / 2) % 2 == 0 {
            1
        } else {
            -1
        };
        println!(
            "vertices {}  crossings {}  twisted {}  chi {:4}  signed tait {:4}  leaves {}",
            d.vertex_count(),
            d.crossing_count(),
            d.twisted_count(),
            r.chi,
            sign * signed_tait(&d),
            r.expansion_leaves
        );
    }
}
