// Skein expansion of the catalogue's knotted diagrams.

use std::error::Error;

use webfoam::catalogue::{diagrams, entry};
use webfoam::skein::{euler_char, euler_char_dual, tutte_check};
use webfoam::tait::signed_tait;
use webfoam::web_core::ResolutionKind;

pub fn main() -> Result<(), Box<dyn Error>> {
    for name in ["hopf", "lhc", "trefoil", "k33", "kinoshita_theta"] {
        let d = entry(name).ok_or("missing entry")?.diagram();
        let r = euler_char(&d);
        println!(
            "{name:16} crossings {:2}  chi {:3}  dual {:3}  leaves {:4}  signed tait {:3}",
            d.crossing_count(),
            r.chi,
            euler_char_dual(&d).chi,
            r.expansion_leaves,
            signed_tait(&d)
        );
    }

    // resolve one crossing of the trefoil by hand
    let trefoil = diagrams::trefoil();
    let c = trefoil.crossing_ids()[0].to_string();
    for kind in [ResolutionKind::SmoothA, ResolutionKind::EdgeB] {
        let r = trefoil.resolve_crossing(&c, kind)?;
        println!("trefoil, {c} -> {kind:?}: chi {}", euler_char(&r).chi);
    }

    // the Tutte relation at a pair of sides on one face of the cube
    let cube = diagrams::cube();
    let f = &cube.faces()[0];
    let t = tutte_check(&cube, f[0], f[2])?;
    println!(
        "cube site: H {} I {} res1 {} res0 {}  holds {}",
        t.h,
        t.i,
        t.res1,
        t.res0,
        t.holds()
    );
    Ok(())
}
