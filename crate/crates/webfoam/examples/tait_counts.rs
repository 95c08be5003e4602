// Tait colorings of a triangular prism built by hand.

use std::error::Error;

use webfoam::tait::{one_set_ledger, planar_lsharp_dim, signed_tait, tait_count};
use webfoam::web_core::DiagramBuilder;

pub fn main() -> Result<(), Box<dyn Error>> {
    // outer triangle a0 a1 a2, inner triangle b0 b1 b2, spokes a_k b_k
    let mut b = DiagramBuilder::new();
    let at = |x: i32| x.rem_euclid(360);
    for k in 0..3 {
        let p = 90 + 120 * k;
        b.vertex(&format!("a{k}"), [at(p + 120), at(p + 180), at(p + 240)]);
        b.vertex(&format!("b{k}"), [at(p), at(p + 150), at(p + 210)]);
    }
    for k in 0..3 {
        let (p, n) = (90 + 120 * k, (k + 1) % 3);
        let q = p + 120;
        b.join_labeled(
            (&format!("a{k}"), at(p + 120)),
            (&format!("a{n}"), at(q + 240)),
            &format!("a{k}a{n}"),
        );
        b.join_labeled(
            (&format!("b{k}"), at(p + 150)),
            (&format!("b{n}"), at(q + 210)),
            &format!("b{k}b{n}"),
        );
        b.join_labeled(
            (&format!("a{k}"), at(p + 180)),
            (&format!("b{k}"), at(p)),
            &format!("a{k}b{k}"),
        );
    }
    let prism = b.build()?;
    let web = prism.underlying_web();
    println!(
        "vertices {}  edges {}",
        web.vertex_count(),
        web.edge_count()
    );
    println!("tait colorings     {}", tait_count(&web));
    println!("signed count       {}", signed_tait(&prism));
    println!("planar dimension   {}", planar_lsharp_dim(&web));
    for s in one_set_ledger(&web) {
        println!(
            "  one-set {:?}  complement circles {}  even {}",
            s.edges, s.n, s.even
        );
    }
    Ok(())
}
