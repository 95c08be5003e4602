// Exhaustive plane trivalent webs, checking planar dimension against the Tait count on each.

use std::time::Instant;

use webfoam::generate::plane_maps;
use webfoam::tait::{planar_lsharp_dim, tait_count};

pub fn main() {
    let start = Instant::now();
    for level in plane_maps(8) {
        let n = level[0].vertex_count();
        let loop_free: Vec<_> = level.iter().filter(|m| !m.has_loop()).collect();
        let counts: Vec<u64> = loop_free
            .iter()
            .map(|m| {
                let w = m.to_diagram().underlying_web();
                assert_eq!(planar_lsharp_dim(&w), tait_count(&w));
                tait_count(&w)
            })
            .collect();
        println!(
            "{n} vertices: {} maps, {} loop-free, tait counts {counts:?}",
            level.len(),
            loop_free.len()
        );
    }
    println!("{:.1} ms", start.elapsed().as_secs_f64() * 1e3);
}
