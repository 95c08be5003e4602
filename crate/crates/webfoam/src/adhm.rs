//! Equivariant ADHM data for the order-`N³` Heisenberg-type group and the point-class coefficient.
//!
//! Matrices are complex double precision; the Chern series is exact over big integers.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use thiserror::Error;

pub type C = Complex64;
pub type CMatrix = DMatrix<C>;

pub const EQUATION_TOL: f64 = 1e-10;
pub const RELATION_TOL: f64 = 1e-12;
pub const RANK_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AdhmError {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("representation relation fails: {0}")]
    Relation(String),
    #[error("no monomial intertwiner for character {0}")]
    NoIntertwiner(usize),
    #[error("series order must be at least 4, got {0}")]
    OrderTooSmall(usize),
}

fn cis(theta: f64) -> C {
    C::from_polar(1.0, theta)
}

/// Largest entry modulus.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn min_singular_value(m: &CMatrix) -> f64 {
    m.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

fn unitary_defect(m: &CMatrix) -> f64 {
    max_abs(&(m.adjoint() * m - CMatrix::identity(m.nrows(), m.ncols())))
}

fn mat_pow(m: &CMatrix, k: usize) -> CMatrix {
    (0..k).fold(CMatrix::identity(m.nrows(), m.ncols()), |acc, _| acc * m)
}

fn inverse(m: &CMatrix) -> CMatrix {
    // all group matrices are unitary
    m.adjoint()
}

fn group_commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b * inverse(a) * inverse(b)
}

#[derive(Clone, Debug)]
pub struct GroupRep {
    pub n: usize,
    pub zeta: C,
    pub epsilon: C,
    pub rho_g: CMatrix,
    pub rho_h: CMatrix,
    pub rho_gamma: CMatrix,
}

/// Characters of the two lines in `U = U1 ⊕ U2`: `(χ(g), χ(h))`.
pub fn characters(zeta: C) -> [(C, C); 2] {
    [(zeta, zeta), (zeta.inv(), C::one())]
}

/// For `N = 3` the displayed form `diag(ω, 1, ω⁻¹)` with a cyclic permutation; otherwise
/// `ε·diag(ζ^j)` and the shift `e_j ↦ e_{j+1}`.
pub fn build_rep(n: usize) -> Result<GroupRep, AdhmError> {
    if n < 2 {
        return Err(AdhmError::RankTooSmall(n));
    }
    let zeta = cis(2.0 * PI / n as f64);
    let epsilon = if n % 2 == 1 {
        C::one()
    } else {
        cis(PI / n as f64)
    };
    let (rho_g, rho_h) = if n == 3 {
        let g = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            zeta,
            C::one(),
            zeta.inv(),
        ]));
        let mut h = CMatrix::zeros(3, 3);
        for (i, j) in [(0, 1), (1, 2), (2, 0)] {
            h[(i, j)] = C::one();
        }
        (g, h)
    } else {
        let g = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            n,
            (0..n).map(|j| epsilon * zeta.powu(j as u32)),
        ));
        let mut h = CMatrix::zeros(n, n);
        for j in 0..n {
            h[((j + 1) % n, j)] = epsilon;
        }
        (g, h)
    };
    let rho_gamma = group_commutator(&rho_g, &rho_h);
    let rep = GroupRep {
        n,
        zeta,
        epsilon,
        rho_g,
        rho_h,
        rho_gamma,
    };
    let r = rep.relation_residuals();
    if r.max() > RELATION_TOL {
        return Err(AdhmError::Relation(format!("{r:?}")));
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct RelationResiduals {
    /// `ρ(x)^N` against `ε^N·I`, which is the identity for odd `N`.
    pub power_g: f64,
    pub power_h: f64,
    pub commutator_scalar: f64,
    pub unitary: f64,
    pub det_g: f64,
    pub det_h: f64,
}

impl RelationResiduals {
    pub fn max(&self) -> f64 {
        [
            self.power_g,
            self.power_h,
            self.commutator_scalar,
            self.unitary,
            self.det_g,
            self.det_h,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

impl GroupRep {
    pub fn relation_residuals(&self) -> RelationResiduals {
        let n = self.n;
        let id = CMatrix::identity(n, n);
        let scalar = id.clone() * self.epsilon.powu(n as u32);
        RelationResiduals {
            power_g: max_abs(&(mat_pow(&self.rho_g, n) - &scalar)),
            power_h: max_abs(&(mat_pow(&self.rho_h, n) - &scalar)),
            commutator_scalar: max_abs(&(&self.rho_gamma - id * self.zeta)),
            unitary: unitary_defect(&self.rho_g).max(unitary_defect(&self.rho_h)),
            det_g: (self.rho_g.determinant() - C::one()).norm(),
            det_h: (self.rho_h.determinant() - C::one()).norm(),
        }
    }

    /// `‖F ρ(x) − χ(x) ρ(x) F‖` over `x ∈ {g, h}`.
    pub fn intertwining_defect(&self, f: &CMatrix, chi: (C, C)) -> f64 {
        let dg = f * &self.rho_g - &self.rho_g * f * chi.0;
        let dh = f * &self.rho_h - &self.rho_h * f * chi.1;
        max_abs(&dg).max(max_abs(&dh))
    }
}

#[derive(Clone, Debug)]
pub struct Intertwiners {
    pub f1: CMatrix,
    pub f2: CMatrix,
    /// Exponents `(p, q)` with `F = ρ(g)^p ρ(h)^q`.
    pub monomials: [(usize, usize); 2],
    pub s: CMatrix,
    pub c: C,
}

/// Search the `N²` monomials `ρ(g)^p ρ(h)^q` for the two twisted intertwiners.
pub fn find_intertwiners(rep: &GroupRep) -> Result<Intertwiners, AdhmError> {
    let chars = characters(rep.zeta);
    let mut found = Vec::new();
    for (i, &chi) in chars.iter().enumerate() {
        let hit = (0..rep.n)
            .flat_map(|p| (0..rep.n).map(move |q| (p, q)))
            .find_map(|(p, q)| {
                let f = mat_pow(&rep.rho_g, p) * mat_pow(&rep.rho_h, q);
                (rep.intertwining_defect(&f, chi) < RELATION_TOL).then_some((f, (p, q)))
            })
            .ok_or(AdhmError::NoIntertwiner(i + 1))?;
        found.push(hit);
    }
    let (f2, m2) = found.pop().unwrap();
    let (f1, m1) = found.pop().unwrap();
    let comm = &f1 * &f2 - &f2 * &f1;
    // [F1, F2] is a scalar times a unitary; C = -1/scale keeps S unitary
    let scale = (comm.adjoint() * &comm)[(0, 0)].re.sqrt();
    let c = C::new(-1.0 / scale, 0.0);
    let s = comm * c;
    Ok(Intertwiners {
        f1,
        f2,
        monomials: [m1, m2],
        s,
        c,
    })
}

#[derive(Clone, Debug)]
pub struct AdhmData {
    pub t1: C,
    pub t2: C,
    pub a: C,
    pub b: C,
    pub f1: CMatrix,
    pub f2: CMatrix,
    pub s: CMatrix,
    pub c: C,
    /// `t1 t2 = 0`: ideal point of the Uhlenbeck completion, with `a = b = 0`.
    pub uhlenbeck: bool,
}

/// `|a| = |b|` and `t1 t2 + C a b = 0`, with `arg a = arg t1` and `arg b = arg t2`.
pub fn scalar_solution(w: &Intertwiners, t1: C, t2: C) -> AdhmData {
    let prod = t1 * t2;
    let uhlenbeck = prod.norm() == 0.0;
    let (a, b) = if uhlenbeck {
        (C::zero(), C::zero())
    } else {
        let r = (prod.norm() / w.c.norm()).sqrt();
        (C::from_polar(r, t1.arg()), C::from_polar(r, t2.arg()))
    };
    AdhmData {
        t1,
        t2,
        a,
        b,
        f1: w.f1.clone(),
        f2: w.f2.clone(),
        s: w.s.clone(),
        c: w.c,
        uhlenbeck,
    }
}

impl AdhmData {
    pub fn scalar_residuals(&self) -> (f64, f64) {
        (
            (self.t1 * self.t2 + self.c * self.a * self.b).norm(),
            (self.a.norm_sqr() - self.b.norm_sqr()).abs(),
        )
    }

    fn n(&self) -> usize {
        self.f1.nrows()
    }
}

/// `α_z = (t1F1 − z1; t2F2 − z2; a)` and `β_z = (−t2F2 + z2, t1F1 − z1, bS)`.
pub fn adhm_operators(d: &AdhmData, z: (C, C)) -> (CMatrix, CMatrix) {
    homogeneous_operators(d, [d.t1, d.t2, d.a, d.b], z)
}

fn homogeneous_operators(d: &AdhmData, p: [C; 4], z: (C, C)) -> (CMatrix, CMatrix) {
    let n = d.n();
    let id = CMatrix::identity(n, n);
    let tau1 = &d.f1 * p[0] - &id * z.0;
    let tau2 = &d.f2 * p[1] - &id * z.1;
    let mut alpha = CMatrix::zeros(3 * n, n);
    alpha.view_mut((0, 0), (n, n)).copy_from(&tau1);
    alpha.view_mut((n, 0), (n, n)).copy_from(&tau2);
    alpha.view_mut((2 * n, 0), (n, n)).copy_from(&(&id * p[2]));
    let mut beta = CMatrix::zeros(n, 3 * n);
    beta.view_mut((0, 0), (n, n)).copy_from(&(-tau2));
    beta.view_mut((0, n), (n, n)).copy_from(&tau1);
    beta.view_mut((0, 2 * n), (n, n)).copy_from(&(&d.s * p[3]));
    (alpha, beta)
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct OperatorCheck {
    pub beta_alpha: f64,
    /// `α*α − ββ*`.
    pub moment: f64,
    pub min_sv_alpha: f64,
    pub min_sv_beta: f64,
}

pub fn check_operators(d: &AdhmData, z: (C, C)) -> OperatorCheck {
    let (alpha, beta) = adhm_operators(d, z);
    OperatorCheck {
        beta_alpha: max_abs(&(&beta * &alpha)),
        moment: max_abs(&(alpha.adjoint() * &alpha - &beta * beta.adjoint())),
        min_sv_alpha: min_singular_value(&alpha),
        min_sv_beta: min_singular_value(&beta),
    }
}

/// Homogeneous coordinates `[t1, t2, a, b, u]`, with `z = (u, u)`.
pub fn homogeneous_svs(d: &AdhmData, point: [C; 5]) -> (f64, f64) {
    let (alpha, beta) = homogeneous_operators(
        d,
        [point[0], point[1], point[2], point[3]],
        (point[4], point[4]),
    );
    (min_singular_value(&alpha), min_singular_value(&beta))
}

#[derive(Clone, Debug, Serialize)]
pub struct RankScan {
    pub samples: usize,
    pub min_sv_alpha_generic: f64,
    pub min_sv_beta_generic: f64,
    /// `[0,0,0,1,0]`: `α` vanishes identically.
    pub alpha_drop_sv: f64,
    /// `[0,0,1,0,0]`: `β` vanishes identically.
    pub beta_drop_sv: f64,
    pub ok: bool,
}

pub const ALPHA_DROP: [f64; 5] = [0.0, 0.0, 0.0, 1.0, 0.0];
pub const BETA_DROP: [f64; 5] = [0.0, 0.0, 1.0, 0.0, 0.0];

fn real_point(p: [f64; 5]) -> [C; 5] {
    p.map(|x| C::new(x, 0.0))
}

/// Sample the quadric `t1 t2 + C a b = 0` away from the two degenerate points.
pub fn homogeneous_rank_scan(w: &Intertwiners, samples: usize, seed: u64) -> RankScan {
    let mut rng = StdRng::seed_from_u64(seed);
    let base = scalar_solution(w, C::one(), C::one());
    let mut min_a = f64::INFINITY;
    let mut min_b = f64::INFINITY;
    let rand_c =
        |rng: &mut StdRng| C::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    for _ in 0..samples {
        let (t1, t2, a) = (rand_c(&mut rng), rand_c(&mut rng), rand_c(&mut rng));
        let b = -(t1 * t2) / (w.c * a);
        let u = rand_c(&mut rng);
        let mut p = [t1, t2, a, b, u];
        let norm = p.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        for x in &mut p {
            *x /= norm;
        }
        let (sa, sb) = homogeneous_svs(&base, p);
        min_a = min_a.min(sa);
        min_b = min_b.min(sb);
    }
    let (alpha_drop, _) = homogeneous_svs(&base, real_point(ALPHA_DROP));
    let (_, beta_drop) = homogeneous_svs(&base, real_point(BETA_DROP));
    RankScan {
        samples,
        min_sv_alpha_generic: min_a,
        min_sv_beta_generic: min_b,
        alpha_drop_sv: alpha_drop,
        beta_drop_sv: beta_drop,
        ok: min_a > RANK_TOL && min_b > RANK_TOL && alpha_drop < RANK_TOL && beta_drop < RANK_TOL,
    }
}

/// Truncated power series in `h` with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    pub coeffs: Vec<BigInt>,
}

impl PowerSeries {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// Inverse of a series with constant term 1.
    pub fn inverse(&self) -> Self {
        assert!(self.coeffs[0].is_one(), "constant term must be 1");
        let n = self.order();
        let mut inv = vec![BigInt::zero(); n + 1];
        inv[0] = BigInt::one();
        for k in 1..=n {
            let mut s = BigInt::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -s;
        }
        PowerSeries { coeffs: inv }
    }

    /// `1 − h²`.
    pub fn one_minus_h2(order: usize) -> Self {
        let mut s = Self::one(order);
        if order >= 2 {
            s.coeffs[2] = BigInt::from(-1);
        }
        s
    }
}

/// `(1 − h²)^{−N}` truncated at `h^order`.
pub fn chern_series(n: usize, order: usize) -> PowerSeries {
    PowerSeries::one_minus_h2(order).pow(n).inverse()
}

#[derive(Clone, Debug, Serialize)]
pub struct ChernReport {
    pub n: usize,
    pub order: usize,
    pub coefficients: Vec<String>,
    pub nu: i64,
    pub nu_mod2: u8,
    pub identity_holds: bool,
}

pub fn chern_nu(n: usize, order: usize) -> Result<ChernReport, AdhmError> {
    if order < 4 {
        return Err(AdhmError::OrderTooSmall(order));
    }
    let series = chern_series(n, order);
    let check = PowerSeries::one_minus_h2(order).pow(n).mul(&series);
    let nu = series.coeffs[2].to_i64().expect("small coefficient");
    Ok(ChernReport {
        n,
        order,
        coefficients: series.coeffs.iter().map(|c| c.to_string()).collect(),
        nu,
        nu_mod2: nu.rem_euclid(2) as u8,
        identity_holds: check == PowerSeries::one(order),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub rank: usize,
    pub relation_residual: f64,
    pub intertwiner_monomials: [(usize, usize); 2],
    pub intertwining_residual: f64,
    pub c: (f64, f64),
    pub s_unitary_residual: f64,
    pub grid_points: usize,
    pub samples_per_point: usize,
    pub max_scalar_residual: f64,
    pub max_beta_alpha: f64,
    pub max_moment: f64,
    pub min_sv_alpha: f64,
    pub min_sv_beta: f64,
    pub uhlenbeck_flagged: bool,
    pub rank_scan: RankScan,
    pub nu: i64,
    pub nu_mod2: u8,
    pub series_identity: bool,
    pub pass: bool,
}

/// Log-spaced magnitudes in `[10^-2, 10^2]`, with phases spread over the circle.
pub fn grid(side: usize) -> Vec<(C, C)> {
    let mag = |i: usize| 10f64.powf(-2.0 + 4.0 * i as f64 / (side - 1).max(1) as f64);
    let mut out = Vec::with_capacity(side * side);
    for i in 0..side {
        for j in 0..side {
            let t1 = C::from_polar(mag(i), 0.7 * i as f64 + 0.3);
            let t2 = C::from_polar(mag(j), -1.1 * j as f64 + 0.5);
            out.push((t1, t2));
        }
    }
    out
}

pub fn verify(
    rank: usize,
    side: usize,
    samples: usize,
    seed: u64,
) -> Result<VerifyReport, AdhmError> {
    let rep = build_rep(rank)?;
    let w = find_intertwiners(&rep)?;
    let chars = characters(rep.zeta);
    let intertwining = rep
        .intertwining_defect(&w.f1, chars[0])
        .max(rep.intertwining_defect(&w.f2, chars[1]));
    let mut rng = StdRng::seed_from_u64(seed);
    let mut scalar = 0f64;
    let mut ba = 0f64;
    let mut moment = 0f64;
    let mut sva = f64::INFINITY;
    let mut svb = f64::INFINITY;
    let points = grid(side);
    for &(t1, t2) in &points {
        let d = scalar_solution(&w, t1, t2);
        let (r1, r2) = d.scalar_residuals();
        // residuals relative to the size of the data
        let size = 1.0 + t1.norm() * t2.norm();
        scalar = scalar.max(r1 / size).max(r2 / size);
        for _ in 0..samples {
            let z = (
                C::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)),
                C::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)),
            );
            let c = check_operators(&d, z);
            let scale = 1.0 + (t1.norm() + t2.norm() + z.0.norm() + z.1.norm()).powi(2);
            ba = ba.max(c.beta_alpha / scale);
            moment = moment.max(c.moment / scale);
            sva = sva.min(c.min_sv_alpha);
            svb = svb.min(c.min_sv_beta);
        }
    }
    let boundary = scalar_solution(&w, C::new(0.5, 0.0), C::zero());
    let uhlenbeck_flagged =
        boundary.uhlenbeck && boundary.a.norm() == 0.0 && boundary.b.norm() == 0.0;
    let scan = homogeneous_rank_scan(&w, 200, seed ^ 0x5eed);
    let chern = chern_nu(rank, 8)?;
    let relation_residual = rep.relation_residuals().max();
    let s_unitary_residual = unitary_defect(&w.s);
    let pass = relation_residual < RELATION_TOL
        && intertwining < RELATION_TOL
        && s_unitary_residual < EQUATION_TOL
        && scalar < EQUATION_TOL
        && ba < EQUATION_TOL
        && moment < EQUATION_TOL
        && sva > RANK_TOL
        && svb > RANK_TOL
        && uhlenbeck_flagged
        && scan.ok
        && chern.nu == rank as i64
        && chern.identity_holds;
    Ok(VerifyReport {
        rank,
        relation_residual,
        intertwiner_monomials: w.monomials,
        intertwining_residual: intertwining,
        c: (w.c.re, w.c.im),
        s_unitary_residual,
        grid_points: points.len(),
        samples_per_point: samples,
        max_scalar_residual: scalar,
        max_beta_alpha: ba,
        max_moment: moment,
        min_sv_alpha: sva,
        min_sv_beta: svb,
        uhlenbeck_flagged,
        rank_scan: scan,
        nu: chern.nu,
        nu_mod2: chern.nu_mod2,
        series_identity: chern.identity_holds,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_three_rep() {
        let rep = build_rep(3).unwrap();
        let omega = cis(2.0 * PI / 3.0);
        assert!((rep.rho_g[(0, 0)] - omega).norm() < 1e-15);
        assert!((rep.rho_g[(2, 2)] - omega.inv()).norm() < 1e-15);
        assert!(max_abs(&(&rep.rho_gamma - CMatrix::identity(3, 3) * omega)) < RELATION_TOL);
        assert!(rep.relation_residuals().max() < RELATION_TOL);
    }

    #[test]
    fn even_rank_epsilon() {
        let rep = build_rep(2).unwrap();
        assert!((rep.epsilon - C::i()).norm() < 1e-15);
        assert!((rep.epsilon.powu(8) - C::one()).norm() < 1e-12);
        assert!(matches!(build_rep(1), Err(AdhmError::RankTooSmall(1))));
    }

    #[test]
    fn intertwiners_and_scalar_equations() {
        let rep = build_rep(3).unwrap();
        let w = find_intertwiners(&rep).unwrap();
        assert!(unitary_defect(&w.s) < 1e-12);
        let d = scalar_solution(&w, C::one(), C::one());
        let (r1, r2) = d.scalar_residuals();
        assert!(r1 < 1e-12 && r2 < 1e-12);
        assert!((d.a.norm() - 3f64.powf(0.25)).abs() < 1e-12);
        let scaled = scalar_solution(&w, C::new(2.0, 0.0), C::new(2.0, 0.0));
        assert!((scaled.a.norm() - 2.0 * d.a.norm()).abs() < 1e-12);
        assert!(scalar_solution(&w, C::new(1.0, 0.0), C::zero()).uhlenbeck);
    }

    #[test]
    fn chern_coefficients() {
        for n in 1..=8 {
            let r = chern_nu(n, 8).unwrap();
            assert_eq!(r.nu, n as i64);
            assert!(r.identity_holds);
        }
        assert_eq!(chern_nu(3, 8).unwrap().nu_mod2, 1);
        assert!(matches!(chern_nu(3, 3), Err(AdhmError::OrderTooSmall(3))));
    }

    #[test]
    fn small_verify_passes() {
        let r = verify(3, 3, 5, 7).unwrap();
        assert!(r.pass, "{r:?}");
    }
}
