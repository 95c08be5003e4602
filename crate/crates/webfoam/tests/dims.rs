use num_rational::Rational64 as Q;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use webfoam::dims_gradings::{
    check_octahedron, dim_mod6, expected_parity, formal_dim, psi_invariants, so3_dim,
    triangle_parity, BifoldTopology, DimsError, EXACT_TRIANGLES,
};

#[path = "support/dims_oracle.rs"]
mod dims_oracle;

use dims_oracle::{modulo, oracle, random_topology};

#[test]
fn suspension_and_psi_data() {
    let b = BifoldTopology {
        chi_sigma: 4,
        t: 2,
        ..Default::default()
    };
    assert_eq!(formal_dim(&b).unwrap(), Q::from_integer(-2));
    let want = [
        Q::from_integer(-4),
        Q::new(-5, 2),
        Q::from_integer(-2),
        Q::new(-5, 2),
    ];
    for n in 0..4u32 {
        let p = psi_invariants(n).unwrap();
        assert_eq!(p.constant, want[n as usize]);
        assert_eq!(p.sigma_self, Q::from_integer(2) - Q::new(n as i64, 2));
        assert_eq!(p.chi, n as i64 + 1);
        assert_eq!(p.t, (n * n.saturating_sub(1) / 2) as i64);
    }
}

#[test]
fn ten_thousand_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut agreed = 0;
    for i in 0..10_000 {
        let b = random_topology(&mut rng, i % 2 == 0);
        let (formal, residue) = oracle(&b);
        assert_eq!(formal_dim(&b).unwrap(), formal);
        let congruent = modulo(formal - residue, 6) == Q::from_integer(0);
        match dim_mod6(&b) {
            Ok(r) => {
                assert!(congruent, "{b:?}");
                assert_eq!(r.dim_mod6, modulo(formal, 6));
                assert!(formal.is_integer());
                assert_eq!(r.parity, Some(expected_parity(b.sigma_self)));
                assert_eq!(
                    r.parity.unwrap() as i64,
                    (b.sigma_self * 2).to_integer().rem_euclid(2)
                );
                agreed += 1;
            }
            Err(DimsError::Congruence { .. }) => assert!(!congruent, "{b:?}"),
            Err(e) => panic!("{e}"),
        }
    }
    assert!(agreed >= 5_000);
}

#[test]
fn octahedron_table() {
    let r = check_octahedron();
    assert!(r.triangles_odd && r.faces_consistent && r.opposite_unjoined);
    assert_eq!(EXACT_TRIANGLES.len(), 4);
    for tri in EXACT_TRIANGLES {
        assert_eq!(triangle_parity(tri), Some(1));
    }
}

proptest! {
    #[test]
    fn so3_integrality_implies_the_congruence(num in -64i64..64, s in -8i64..8, t in 0i64..6, chi in -4i64..4) {
        let b = BifoldTopology { sigma_self: Q::new(s, 2), t, chi_sigma: chi, ..Default::default() };
        let r = so3_dim(Q::new(num, 32), &b).unwrap();
        if r.d_r.is_integer() {
            let lhs = Q::from_integer(12) * r.kappa;
            let rhs = Q::from_integer(-3) * b.sigma_self + Q::from_integer(3 * t);
            prop_assert_eq!(modulo(lhs - rhs, 6), Q::from_integer(0));
        }
    }

    #[test]
    fn parity_ignores_kappa_shifts(s in -8i64..8, t in 0i64..6, m in -3i64..3, bp in 0i64..3) {
        let sigma = Q::new(s, 2);
        let kappa = (Q::from_integer(-3) * sigma + Q::from_integer(3 * t + 6 * m)) / 12;
        let b = BifoldTopology { kappa, sigma_self: sigma, t, b_plus: bp, ..Default::default() };
        let shifted = BifoldTopology { kappa: kappa + Q::new(1, 2), ..b };
        prop_assert_eq!(dim_mod6(&b).unwrap().parity, dim_mod6(&shifted).unwrap().parity);
    }
}
