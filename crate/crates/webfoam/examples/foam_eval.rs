// Closed foam evaluations over F2.

use std::error::Error;

use webfoam::foam_eval::{
    eval_sphere, eval_surface, eval_theta, neck_cut, parse_foam, Atom, NeckSite,
};

pub fn main() -> Result<(), Box<dyn Error>> {
    print!("spheres S(0..=6):");
    for l in 0..=6 {
        print!(" {}", eval_sphere(l));
    }
    println!();

    println!("theta foams with dots summing to 3:");
    for a in 0..=3 {
        for b in 0..=3 - a {
            let c = 3 - a - b;
            println!("  ({a},{b},{c}) -> {}", eval_theta(a, b, c));
        }
    }

    for g in 0..=3 {
        println!("genus {g} surface, no dots: {}", eval_surface(g, 0));
    }

    let torus = neck_cut(&Atom::Surface { genus: 1, dots: 0 }, NeckSite::Essential)?;
    println!("torus cut along its neck: {torus} = {}", torus.eval()?);

    for text in [
        "theta 0 1 2",
        "sphere 2 * theta 1 2 0",
        "sum-t2 0 (sphere 0) + sphere 2",
    ] {
        let e = parse_foam(text)?;
        println!("{text:32} = {}", e.eval()?);
    }
    Ok(())
}
