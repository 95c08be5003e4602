// Exact rational dimension formulas and the octahedron parity table.

use std::error::Error;

use num_rational::Rational64 as Q;
use webfoam::dims_gradings::{
    check_octahedron, dim_mod6, formal_dim, format_q, psi_invariants, triangle_parity,
    BifoldTopology, EXACT_TRIANGLES,
};

pub fn main() -> Result<(), Box<dyn Error>> {
    let suspension = BifoldTopology {
        chi_sigma: 4,
        t: 2,
        ..Default::default()
    };
    let r = dim_mod6(&suspension)?;
    println!(
        "suspension datum: formal {}  mod 6 {}  parity {:?}",
        format_q(formal_dim(&suspension)?),
        format_q(r.dim_mod6),
        r.parity
    );

    for n in 0..4 {
        let p = psi_invariants(n)?;
        println!(
            "psi_{n}: self-intersection {}  chi {}  t {}  constant {}",
            format_q(p.sigma_self),
            p.chi,
            p.t,
            format_q(p.constant)
        );
    }

    // κ off the congruence has no mod 6 reduction
    let off = BifoldTopology {
        kappa: Q::new(1, 3),
        ..suspension
    };
    println!(
        "kappa 1/3: {}",
        dim_mod6(&off)
            .err()
            .map(|e| e.to_string())
            .unwrap_or_default()
    );

    for tri in EXACT_TRIANGLES {
        println!("triangle {tri:?}: parity {:?}", triangle_parity(tri));
    }
    println!("octahedron consistent: {}", check_octahedron().ok());
    Ok(())
}
