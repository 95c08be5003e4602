// Numerical check of the rank-3 ADHM data and the Chern series.

use std::error::Error;

use webfoam::adhm::{chern_nu, verify};

pub fn main() -> Result<(), Box<dyn Error>> {
    let r = verify(3, 10, 100, 2026)?;
    println!(
        "grid {} points x {} samples",
        r.grid_points, r.samples_per_point
    );
    println!("relations      {:.2e}", r.relation_residual);
    println!("beta alpha     {:.2e}", r.max_beta_alpha);
    println!("moment         {:.2e}", r.max_moment);
    println!(
        "min sv         {:.4} / {:.4}",
        r.min_sv_alpha, r.min_sv_beta
    );
    println!("intertwiners   {:?}", r.intertwiner_monomials);
    println!("pass           {}", r.pass);
    for n in 1..=8 {
        let c = chern_nu(n, 12)?;
        println!(
            "N = {n}: nu {}  mod 2 {}  series {:?}",
            c.nu,
            c.nu_mod2,
            &c.coefficients[..6]
        );
    }
    Ok(())
}
