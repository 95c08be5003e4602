//! Exact formal dimensions of moduli spaces, their residues, and Z/2 grading bookkeeping.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

pub type Q = Rational64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimsError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("formal dimension {formal} and residue expression {expression} disagree mod 6")]
    Congruence { formal: Q, expression: Q },
    #[error("n = {0} outside 0..=3")]
    OutOfRange(u32),
    #[error("framings are defined on different edge sets")]
    EdgeMismatch,
}

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

fn half(n: i64) -> Q {
    Q::new(n, 2)
}

pub fn is_integer(x: Q) -> bool {
    x.is_integer()
}

/// Representative of `x mod m` in `[0, m)`.
pub fn rem_euclid(x: Q, m: i64) -> Q {
    let m = q(m);
    x - m * (x / m).floor()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BifoldTopology {
    #[serde(serialize_with = "ser_q")]
    pub kappa: Q,
    pub b_plus: i64,
    pub b_1: i64,
    #[serde(serialize_with = "ser_q")]
    pub sigma_self: Q,
    pub chi_sigma: i64,
    pub t: i64,
}

fn ser_q<S: serde::Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_q(*x))
}

pub fn format_q(x: Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl Default for BifoldTopology {
    fn default() -> Self {
        BifoldTopology {
            kappa: Q::zero(),
            b_plus: 0,
            b_1: 0,
            sigma_self: Q::zero(),
            chi_sigma: 0,
            t: 0,
        }
    }
}

impl BifoldTopology {
    /// `Σ··Σ` must be a half-integer and `t` non-negative.
    pub fn validate(&self) -> Result<(), DimsError> {
        if !(self.sigma_self * 2).is_integer() {
            return Err(DimsError::Invalid(format!(
                "self-intersection {} is not a multiple of 1/2",
                format_q(self.sigma_self)
            )));
        }
        if self.t < 0 {
            return Err(DimsError::Invalid(
                "negative tetrahedral point count".into(),
            ));
        }
        Ok(())
    }

    /// `b⁺ − b¹ + 1`.
    fn b_term(&self) -> Q {
        q(self.b_plus - self.b_1 + 1)
    }
}

pub fn formal_dim(b: &BifoldTopology) -> Result<Q, DimsError> {
    b.validate()?;
    Ok(q(12) * b.kappa - q(8) * b.b_term() + b.sigma_self + q(2 * b.chi_sigma) - q(b.t))
}

/// `−2(b⁺ − b¹ + 1) + 2(−Σ··Σ + χ + t)`, the residue of the formal dimension mod 6.
pub fn mod6_expression(b: &BifoldTopology) -> Q {
    q(-2) * b.b_term() + q(2) * (-b.sigma_self + q(b.chi_sigma) + q(b.t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DimReport {
    #[serde(serialize_with = "ser_q")]
    pub dim: Q,
    #[serde(serialize_with = "ser_q")]
    pub dim_mod6: Q,
    /// `dim mod 2` when the dimension is an integer.
    pub parity: Option<u8>,
}

pub fn dim_mod6(b: &BifoldTopology) -> Result<DimReport, DimsError> {
    let formal = formal_dim(b)?;
    let expression = mod6_expression(b);
    let r = rem_euclid(formal, 6);
    if r != rem_euclid(expression, 6) {
        return Err(DimsError::Congruence { formal, expression });
    }
    let parity = formal
        .is_integer()
        .then(|| formal.to_integer().rem_euclid(2) as u8);
    Ok(DimReport {
        dim: formal,
        dim_mod6: r,
        parity,
    })
}

/// `2Σ··Σ mod 2`.
pub fn expected_parity(sigma_self: Q) -> u8 {
    (sigma_self * 2).to_integer().rem_euclid(2) as u8
}

/// The `κ` residue that makes the two dimension formulas agree: `12κ ≡ −3Σ··Σ + 3t (mod 6)`.
pub fn congruence_holds(kappa: Q, sigma_self: Q, t: i64) -> bool {
    let diff = q(12) * kappa + q(3) * sigma_self - q(3 * t);
    diff.is_integer() && diff.to_integer().rem_euclid(6) == 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct So3Report {
    #[serde(serialize_with = "ser_q")]
    pub d_r: Q,
    #[serde(serialize_with = "ser_q")]
    pub kappa: Q,
}

/// SO(3) formal dimension `8κ_r − 3(b⁺ − b¹ + 1) + Σ··Σ/2 + χ − t/2`; the `kappa` field of `b` is ignored.
pub fn so3_dim(kappa_r: Q, b: &BifoldTopology) -> Result<So3Report, DimsError> {
    b.validate()?;
    let d_r = q(8) * kappa_r - q(3) * b.b_term() + b.sigma_self / q(2) + q(b.chi_sigma) - half(b.t);
    Ok(So3Report {
        d_r,
        kappa: q(4) * kappa_r,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PsiInvariants {
    pub n: u32,
    #[serde(serialize_with = "ser_q")]
    pub sigma_self: Q,
    pub chi: i64,
    pub t: i64,
    /// Dimension is `12κ + constant`.
    #[serde(serialize_with = "ser_q")]
    pub constant: Q,
}

pub fn psi_invariants(n: u32) -> Result<PsiInvariants, DimsError> {
    if n > 3 {
        return Err(DimsError::OutOfRange(n));
    }
    let k = n as i64;
    Ok(PsiInvariants {
        n,
        sigma_self: q(2) - half(k),
        chi: k + 1,
        t: k * (k - 1) / 2,
        constant: q(-4 + 2 * k) - half(k * k),
    })
}

pub fn closed_foam_dim(kappa: Q, sigma_self: Q, chi: i64, t: i64) -> Q {
    q(12) * kappa + sigma_self + q(2 * chi) - q(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DotBudget {
    #[serde(serialize_with = "ser_q")]
    pub kappa: Q,
    /// `κ ≥ 0` and a multiple of 1/6; otherwise the evaluation vanishes.
    pub feasible: bool,
}

/// Solve `12κ + Σ··Σ + 2χ − t = 2l` for `κ`.
pub fn dot_budget(l: u32, sigma_self: Q, chi: i64, t: i64) -> DotBudget {
    let kappa = (q(2 * l as i64) - sigma_self - q(2 * chi) + q(t)) / q(12);
    DotBudget {
        kappa,
        feasible: !kappa.is_negative() && (kappa * 6).is_integer(),
    }
}

/// Semi-framing offsets per edge, stored doubled so half-integers are exact.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SemiFraming {
    pub doubled: BTreeMap<String, i64>,
}

impl SemiFraming {
    pub fn from_halves<'a>(entries: impl IntoIterator<Item = (&'a str, i64)>) -> Self {
        SemiFraming {
            doubled: entries
                .into_iter()
                .map(|(e, d)| (e.to_string(), d))
                .collect(),
        }
    }
}

pub fn framing_delta(a: &SemiFraming, b: &SemiFraming) -> Result<Q, DimsError> {
    if a.doubled.keys().ne(b.doubled.keys()) {
        return Err(DimsError::EdgeMismatch);
    }
    let total: i64 = a.doubled.iter().map(|(e, x)| x - b.doubled[e]).sum();
    Ok(half(total))
}

pub fn same_parity(a: &SemiFraming, b: &SemiFraming) -> Result<bool, DimsError> {
    Ok(framing_delta(a, b)?.is_integer())
}

/// Per-facet obstruction `q_f`, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FacetObstruction {
    pub doubled: i64,
}

pub fn relative_self_intersection(qs: &[FacetObstruction]) -> Q {
    half(qs.iter().map(|f| f.doubled).sum())
}

/// Degree of the induced map: `2Q mod 2`.
pub fn map_parity(qs: &[FacetObstruction]) -> u8 {
    qs.iter().map(|f| f.doubled).sum::<i64>().rem_euclid(2) as u8
}

/// The six webs of the octahedral diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Octa {
    L0,
    L1,
    L2,
    K0,
    K1,
    K2,
}

impl fmt::Display for Octa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

use Octa::*;

/// Every map of the octahedron with its mod 2 degree.
pub const OCTAHEDRON_MAPS: [(Octa, Octa, u8); 12] = [
    (L0, L1, 0),
    (L1, L2, 0),
    (L2, L0, 1),
    (K0, K2, 0),
    (K2, L1, 1),
    (L1, K0, 0),
    (L0, K2, 1),
    (K2, K1, 0),
    (K1, L0, 0),
    (L2, K0, 0),
    (K0, K1, 0),
    (K1, L2, 1),
];

/// Cyclically ordered exact triangles.
pub const EXACT_TRIANGLES: [[Octa; 3]; 4] =
    [[L0, L1, L2], [K0, K2, L1], [L0, K2, K1], [L2, K0, K1]];

pub const COMMUTING_FACES: [[Octa; 3]; 4] =
    [[L0, L1, K2], [L0, K1, L2], [K0, L1, L2], [K0, K1, K2]];

/// Opposite vertices (never joined by a map).
pub const OPPOSITE: [(Octa, Octa); 3] = [(L0, K0), (L1, K1), (L2, K2)];

pub fn octahedron_parity(from: Octa, to: Octa) -> Option<u8> {
    OCTAHEDRON_MAPS
        .iter()
        .find(|(a, b, _)| *a == from && *b == to)
        .map(|m| m.2)
}

/// Sum of degrees around an exact triangle.
pub fn triangle_parity(tri: [Octa; 3]) -> Option<u8> {
    let mut s = 0;
    for i in 0..3 {
        s += octahedron_parity(tri[i], tri[(i + 1) % 3])?;
    }
    Some(s % 2)
}

/// Degrees of the direct map and of the two-step composite across a commuting face.
pub fn face_parities(face: [Octa; 3]) -> Option<(u8, u8)> {
    for (s, m, t) in [
        (0, 1, 2),
        (0, 2, 1),
        (1, 0, 2),
        (1, 2, 0),
        (2, 0, 1),
        (2, 1, 0),
    ] {
        let (s, m, t) = (face[s], face[m], face[t]);
        if let (Some(direct), Some(a), Some(b)) = (
            octahedron_parity(s, t),
            octahedron_parity(s, m),
            octahedron_parity(m, t),
        ) {
            return Some((direct, (a + b) % 2));
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OctahedronReport {
    pub triangles_odd: bool,
    pub faces_consistent: bool,
    pub opposite_unjoined: bool,
}

impl OctahedronReport {
    pub fn ok(&self) -> bool {
        self.triangles_odd && self.faces_consistent && self.opposite_unjoined
    }
}

pub fn check_octahedron() -> OctahedronReport {
    OctahedronReport {
        triangles_odd: EXACT_TRIANGLES
            .iter()
            .all(|t| triangle_parity(*t) == Some(1)),
        faces_consistent: COMMUTING_FACES
            .iter()
            .all(|f| matches!(face_parities(*f), Some((a, b)) if a == b)),
        opposite_unjoined: OPPOSITE
            .iter()
            .all(|&(a, b)| octahedron_parity(a, b).is_none() && octahedron_parity(b, a).is_none()),
    }
}

/// Used by the CLI to parse `p/q` flags.
pub fn parse_q(s: &str) -> Result<Q, DimsError> {
    s.trim()
        .parse::<Q>()
        .map_err(|_| DimsError::Invalid(format!("not a rational: {s:?}")))
}

impl PsiInvariants {
    pub fn topology(&self, kappa: Q) -> BifoldTopology {
        BifoldTopology {
            kappa,
            sigma_self: self.sigma_self,
            chi_sigma: self.chi,
            t: self.t,
            b_plus: 0,
            b_1: 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suspension_datum() {
        let b = BifoldTopology {
            chi_sigma: 4,
            t: 2,
            ..Default::default()
        };
        assert_eq!(formal_dim(&b).unwrap(), q(-2));
        let r = dim_mod6(&b).unwrap();
        assert_eq!(r.dim_mod6, q(4));
        assert_eq!(r.parity, Some(0));
    }

    #[test]
    fn constants() {
        assert_eq!(formal_dim(&BifoldTopology::default()).unwrap(), q(-8));
        assert_eq!(
            rem_euclid(mod6_expression(&BifoldTopology::default()), 6),
            q(4)
        );
        let so3 = so3_dim(Q::new(1, 32), &BifoldTopology::default()).unwrap();
        assert_eq!(so3.kappa, Q::new(1, 8));
        assert_eq!(
            so3_dim(Q::zero(), &BifoldTopology::default()).unwrap().d_r,
            q(-3)
        );
    }

    #[test]
    fn psi_constants_match_formal_dim() {
        let want = [q(-4), Q::new(-5, 2), q(-2), Q::new(-5, 2)];
        for n in 0..4 {
            let p = psi_invariants(n).unwrap();
            assert_eq!(p.constant, want[n as usize]);
            assert_eq!(formal_dim(&p.topology(Q::zero())).unwrap(), p.constant);
        }
        assert_eq!(psi_invariants(3).unwrap().t, 3);
        assert_eq!(psi_invariants(4), Err(DimsError::OutOfRange(4)));
    }

    #[test]
    fn half_integer_self_intersection() {
        let b = BifoldTopology {
            sigma_self: Q::new(1, 2),
            kappa: Q::new(-1, 8),
            ..Default::default()
        };
        let r = dim_mod6(&b).unwrap();
        assert_eq!(r.parity, Some(expected_parity(b.sigma_self)));
        assert_eq!(r.parity, Some(1));
        let bad = BifoldTopology {
            kappa: Q::from_integer(1),
            ..b
        };
        assert!(matches!(dim_mod6(&bad), Err(DimsError::Congruence { .. })));
    }

    #[test]
    fn budgets() {
        assert_eq!(
            dot_budget(2, Q::zero(), 2, 0),
            DotBudget {
                kappa: Q::zero(),
                feasible: true
            }
        );
        assert_eq!(dot_budget(3, Q::zero(), 3, 0).kappa, Q::zero());
        let b = dot_budget(0, Q::zero(), 2, 0);
        assert_eq!(b.kappa, Q::new(-1, 3));
        assert!(!b.feasible);
        assert_eq!(closed_foam_dim(Q::zero(), Q::zero(), 2, 0), q(4));
    }

    #[test]
    fn framings() {
        let a = SemiFraming::from_halves([("x", 0), ("y", 0), ("z", 0)]);
        let b = SemiFraming::from_halves([("x", 1), ("y", 1), ("z", 1)]);
        let c = SemiFraming::from_halves([("x", 1), ("y", 0), ("z", 0)]);
        assert_eq!(framing_delta(&a, &a).unwrap(), Q::zero());
        assert_eq!(framing_delta(&b, &a).unwrap(), Q::new(3, 2));
        assert!(!same_parity(&b, &a).unwrap());
        assert!(!same_parity(&c, &a).unwrap());
        let d = SemiFraming::from_halves([("x", 0)]);
        assert_eq!(framing_delta(&a, &d), Err(DimsError::EdgeMismatch));
    }

    #[test]
    fn facet_obstructions() {
        assert_eq!(map_parity(&[FacetObstruction { doubled: 0 }; 3]), 0);
        assert_eq!(map_parity(&[FacetObstruction { doubled: 1 }]), 1);
        assert_eq!(
            relative_self_intersection(&[FacetObstruction { doubled: 3 }]),
            Q::new(3, 2)
        );
    }

    #[test]
    fn octahedron() {
        assert!(check_octahedron().ok());
        for (a, b, p) in OCTAHEDRON_MAPS {
            let even_block = [L0, L1, K0, K1];
            if even_block.contains(&a) && even_block.contains(&b) {
                assert_eq!(p, 0, "{a}->{b}");
            }
        }
    }

    #[test]
    fn rational_flags() {
        assert_eq!(parse_q("3/2").unwrap(), Q::new(3, 2));
        assert_eq!(parse_q("-4").unwrap(), q(-4));
        assert!(parse_q("x").is_err());
    }
}
