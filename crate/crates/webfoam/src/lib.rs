//! Combinatorial core of SU(3) instanton homology for webs and foams.
//!
//! - [`web_core`]: webs, planar diagrams, crossing resolutions
//! - [`tait`]: Tait colorings, 1-sets, signed counts, planar dimensions
//! - [`skein`]: Euler characteristics by crossing expansion
//! - [`foam_eval`]: closed dotted foams over F2
//! - [`module_algebra`]: explicit F2 modules with edge operators
//! - [`dims_gradings`]: moduli dimension formulas and parity bookkeeping
//! - [`adhm`]: equivariant ADHM data and the point-class coefficient
//! - [`generate`]: exhaustive plane maps and random spatial diagrams
//! - [`catalogue`]: bundled example webs with expected invariants
//! - [`cli`]: the `webfoam` command line

pub mod adhm;
pub mod catalogue;
pub mod cli;
pub mod dims_gradings;
pub mod foam_eval;
pub mod generate;
pub mod module_algebra;
pub mod skein;
pub mod tait;
pub mod web_core;
