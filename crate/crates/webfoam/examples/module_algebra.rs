// F2 modules: quotients, edge decompositions and the Hopf link against the unlink.

use std::error::Error;

use webfoam::module_algebra::{
    edge_decomposition, known_module, poly_string, quotient_module, summand, Presentation,
};

pub fn main() -> Result<(), Box<dyn Error>> {
    let p = Presentation::parse(
        &["u1", "u2", "u3"],
        &["u1+u2+u3", "u1*u2+u1*u3+u2*u3+1", "u1*u2*u3"],
    )?;
    let theta = quotient_module(&p)?;
    println!(
        "theta quotient: dim {}  basis {:?}",
        theta.dim(),
        theta.labels()
    );
    for name in theta.operator_names() {
        println!(
            "  {name}: minimal polynomial {}",
            poly_string(&theta.minimal_polynomial(&name)?)
        );
    }

    let d = edge_decomposition(&theta, &theta.operator_names())?;
    for (edges, dim) in &d.summands {
        println!("  summand {edges:?}: dim {dim}");
    }

    let unknot = known_module("unknot")?;
    let product = unknot.tensor(&unknot.aliased(&[("w", "u")])?)?;
    println!(
        "unknot x unknot: dim {}  graded {:?}",
        product.dim(),
        product.graded_dims()
    );

    let edges = vec!["u1".to_string(), "u2".to_string()];
    for name in ["unlink_2", "hopf"] {
        let m = known_module(name)?;
        let s = summand(&m, &edges, &[])?;
        println!(
            "{name:8} dim {}  empty-set summand dim {}  cyclic {}",
            m.dim(),
            s.dim(),
            s.is_cyclic()
        );
    }
    Ok(())
}
