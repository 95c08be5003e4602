//! Dimension formulas typed out again from their definitions.

use num_rational::Rational64 as Q;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use webfoam::dims_gradings::BifoldTopology;

pub fn modulo(x: Q, m: i64) -> Q {
    let m = Q::from_integer(m);
    x - m * (x / m).floor()
}

/// Formal dimension and the mod 6 residue.
pub fn oracle(b: &BifoldTopology) -> (Q, Q) {
    let z = Q::from_integer;
    let bb = z(b.b_plus - b.b_1 + 1);
    let formal = z(12) * b.kappa - z(8) * bb + b.sigma_self + z(2 * b.chi_sigma) - z(b.t);
    let residue = z(-2) * bb + z(2) * (-b.sigma_self + z(b.chi_sigma) + z(b.t));
    (formal, residue)
}

pub fn random_topology(rng: &mut ChaCha8Rng, solve_kappa: bool) -> BifoldTopology {
    let sigma_self = Q::new(rng.random_range(-12..=12), 2);
    let t = rng.random_range(0..=8);
    let kappa = if solve_kappa {
        // 12κ = −3Σ··Σ + 3t + 6m
        (Q::from_integer(-3) * sigma_self + Q::from_integer(3 * t + 6 * rng.random_range(-4..=4)))
            / 12
    } else {
        Q::new(rng.random_range(-48..=48), rng.random_range(1..=24))
    };
    BifoldTopology {
        kappa,
        b_plus: rng.random_range(0..=4),
        b_1: rng.random_range(0..=4),
        sigma_self,
        chi_sigma: rng.random_range(-6..=6),
        t,
    }
}
