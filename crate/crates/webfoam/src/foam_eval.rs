//! Closed dotted foams evaluated over F2.
//!
//! Foams are symbolic: a handful of named atoms with dot counts per facet, decorated by
//! connected sums, bubbles and neck cuts, combined by disjoint union (`*`) and F2 sums (`+`).

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::module_algebra::F2Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoamError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("facet {facet} out of range; foam has {facets}")]
    UnknownFacet { facet: usize, facets: usize },
    #[error("neck site not supported on this foam")]
    UnsupportedSite,
    #[error("operation needs a single foam, not a sum or product")]
    NotSingleFoam,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Sphere(u32),
    Theta([u32; 3]),
    /// Suspension of the tetrahedral web: dots `k` on the inner facets, `l` on the outer ones.
    TetSusp {
        k: [u32; 3],
        l: [u32; 3],
    },
    /// Closed orientable surface of genus `genus` with all dots on its single facet.
    Surface {
        genus: u32,
        dots: u32,
    },
    /// Sphere summed with `a` copies of the standard RP² and `b` of its mirror.
    CrossCap {
        a: u32,
        b: u32,
        dots: u32,
    },
}

/// Eval of the unknotted sphere: 1 exactly for an even number of dots ≥ 2.
pub fn eval_sphere(l: u32) -> u8 {
    (l >= 2 && l.is_multiple_of(2)) as u8
}

fn xie_reduce(mut l: u32) -> u32 {
    while l >= 3 {
        l -= 2;
    }
    l
}

pub fn eval_theta(l1: u32, l2: u32, l3: u32) -> u8 {
    let mut r = [xie_reduce(l1), xie_reduce(l2), xie_reduce(l3)];
    r.sort();
    (r == [0, 1, 2]) as u8
}

pub fn eval_tet_susp(k: [u32; 3], l: [u32; 3]) -> u8 {
    eval_theta(k[0] + l[0], k[1] + l[1], k[2] + l[2])
}

pub fn eval_surface(genus: u32, dots: u32) -> u8 {
    if genus == 0 {
        eval_sphere(dots)
    } else {
        (dots == 0) as u8
    }
}

pub fn eval_crosscap(_a: u32, b: u32, dots: u32) -> u8 {
    if b >= 1 {
        (dots == 0) as u8
    } else {
        eval_sphere(dots)
    }
}

impl Atom {
    pub fn facets(&self) -> usize {
        match self {
            Atom::Theta(_) => 3,
            Atom::TetSusp { .. } => 6,
            _ => 1,
        }
    }

    pub fn eval(&self) -> u8 {
        match *self {
            Atom::Sphere(l) => eval_sphere(l),
            Atom::Theta([a, b, c]) => eval_theta(a, b, c),
            Atom::TetSusp { k, l } => eval_tet_susp(k, l),
            Atom::Surface { genus, dots } => eval_surface(genus, dots),
            Atom::CrossCap { a, b, dots } => eval_crosscap(a, b, dots),
        }
    }

    pub fn dots(&self, facet: usize) -> Result<u32, FoamError> {
        self.check_facet(facet)?;
        Ok(match self {
            Atom::Sphere(l) => *l,
            Atom::Theta(l) => l[facet],
            Atom::TetSusp { k, l } => {
                if facet < 3 {
                    k[facet]
                } else {
                    l[facet - 3]
                }
            }
            Atom::Surface { dots, .. } | Atom::CrossCap { dots, .. } => *dots,
        })
    }

    fn check_facet(&self, facet: usize) -> Result<(), FoamError> {
        if facet < self.facets() {
            Ok(())
        } else {
            Err(FoamError::UnknownFacet {
                facet,
                facets: self.facets(),
            })
        }
    }

    /// Same atom with `n` more dots on `facet`; a negative `n` removes dots.
    pub fn with_dots(&self, facet: usize, n: i64) -> Result<Atom, FoamError> {
        self.check_facet(facet)?;
        let bump = |x: &mut u32| {
            *x = u32::try_from(*x as i64 + n).expect("dot count stays non-negative");
        };
        let mut a = self.clone();
        match &mut a {
            Atom::Sphere(l) => bump(l),
            Atom::Theta(l) => bump(&mut l[facet]),
            Atom::TetSusp { k, l } => {
                if facet < 3 {
                    bump(&mut k[facet])
                } else {
                    bump(&mut l[facet - 3])
                }
            }
            Atom::Surface { dots, .. } | Atom::CrossCap { dots, .. } => bump(dots),
        }
        Ok(a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decoration {
    SumT2,
    SumRplus,
    SumRminus,
}

/// A compressing disk for neck cutting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeckSite {
    /// Essential curve on a surface of positive genus.
    Essential,
    /// Curve on `facet` cutting off a sphere that takes `dots_off` of its dots.
    FacetNeck { facet: usize, dots_off: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FoamExpr {
    Zero,
    Atom(Atom),
    Decorated {
        inner: Box<FoamExpr>,
        deco: Decoration,
        facet: usize,
    },
    /// A bubble with `k` dots attached to `facet` of `host`.
    Bubbled {
        host: Box<FoamExpr>,
        facet: usize,
        k: u32,
    },
    Product(Vec<FoamExpr>),
    Sum(Vec<FoamExpr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EvalResult {
    pub value: u8,
}

impl FoamExpr {
    pub fn atom(a: Atom) -> Self {
        FoamExpr::Atom(a)
    }

    pub fn sphere(l: u32) -> Self {
        FoamExpr::Atom(Atom::Sphere(l))
    }

    pub fn theta(l1: u32, l2: u32, l3: u32) -> Self {
        FoamExpr::Atom(Atom::Theta([l1, l2, l3]))
    }

    pub fn decorate(self, deco: Decoration, facet: usize) -> Self {
        FoamExpr::Decorated {
            inner: Box::new(self),
            deco,
            facet,
        }
    }

    pub fn bubble(self, facet: usize, k: u32) -> Self {
        FoamExpr::Bubbled {
            host: Box::new(self),
            facet,
            k,
        }
    }

    pub fn eval(&self) -> Result<u8, FoamError> {
        Ok(match self {
            FoamExpr::Zero => 0,
            FoamExpr::Atom(a) => a.eval(),
            FoamExpr::Decorated { inner, deco, facet } => {
                apply_sum((**inner).clone(), *deco, *facet)?.eval()?
            }
            FoamExpr::Bubbled { host, facet, k } => {
                burst_bubble((**host).clone(), *facet, *k)?.eval()?
            }
            FoamExpr::Product(fs) => {
                let mut v = 1;
                for f in fs {
                    v &= f.eval()?;
                }
                v
            }
            FoamExpr::Sum(fs) => {
                let mut v = 0;
                for f in fs {
                    v ^= f.eval()?;
                }
                v
            }
        })
    }

    pub fn evaluate(&self) -> Result<EvalResult, FoamError> {
        Ok(EvalResult {
            value: self.eval()?,
        })
    }

    /// Number of facets of a single (possibly decorated) foam.
    pub fn facets(&self) -> Result<usize, FoamError> {
        match self {
            FoamExpr::Atom(a) => Ok(a.facets()),
            FoamExpr::Decorated { inner, .. } | FoamExpr::Bubbled { host: inner, .. } => {
                inner.facets()
            }
            _ => Err(FoamError::NotSingleFoam),
        }
    }

    /// Add dots to a facet of a single foam, pushing through decorations.
    pub fn add_dots(&self, facet: usize, n: i64) -> Result<FoamExpr, FoamError> {
        match self {
            FoamExpr::Atom(a) => Ok(FoamExpr::Atom(a.with_dots(facet, n)?)),
            FoamExpr::Decorated {
                inner,
                deco,
                facet: f,
            } => Ok(inner.add_dots(facet, n)?.decorate(*deco, *f)),
            FoamExpr::Bubbled { host, facet: f, k } => Ok(host.add_dots(facet, n)?.bubble(*f, *k)),
            FoamExpr::Zero => Ok(FoamExpr::Zero),
            _ => Err(FoamError::NotSingleFoam),
        }
    }
}

/// Rewrite a connected sum at `facet`: `#T²` and `#R₋` become two extra dots plus the foam itself,
/// `#R₊` changes nothing.
pub fn apply_sum(e: FoamExpr, deco: Decoration, facet: usize) -> Result<FoamExpr, FoamError> {
    let facets = e.facets()?;
    if facet >= facets {
        return Err(FoamError::UnknownFacet { facet, facets });
    }
    Ok(match deco {
        Decoration::SumRplus => e,
        Decoration::SumT2 | Decoration::SumRminus => FoamExpr::Sum(vec![e.add_dots(facet, 2)?, e]),
    })
}

/// Burst a bubble carrying `k` dots: zero for `k = 0`, else `k - 1` dots move to the host facet.
pub fn burst_bubble(host: FoamExpr, facet: usize, k: u32) -> Result<FoamExpr, FoamError> {
    let facets = host.facets()?;
    if facet >= facets {
        return Err(FoamError::UnknownFacet { facet, facets });
    }
    let k = xie_reduce(k);
    if k == 0 {
        return Ok(FoamExpr::Zero);
    }
    host.add_dots(facet, k as i64 - 1)
}

const NECK_TERMS: [(u32, u32); 4] = [(0, 0), (0, 2), (1, 1), (2, 0)];

/// Surger along a compressing disk and sum the four dotted copies.
pub fn neck_cut(a: &Atom, site: NeckSite) -> Result<FoamExpr, FoamError> {
    let terms = match site {
        NeckSite::Essential => {
            let Atom::Surface { genus, dots } = *a else {
                return Err(FoamError::UnsupportedSite);
            };
            if genus == 0 {
                return Err(FoamError::UnsupportedSite);
            }
            NECK_TERMS
                .iter()
                .map(|&(i, j)| {
                    FoamExpr::Atom(Atom::Surface {
                        genus: genus - 1,
                        dots: dots + i + j,
                    })
                })
                .collect()
        }
        NeckSite::FacetNeck { facet, dots_off } => {
            if a.dots(facet)? < dots_off {
                return Err(FoamError::UnsupportedSite);
            }
            let rest = a.with_dots(facet, -(dots_off as i64))?;
            NECK_TERMS
                .iter()
                .map(|&(i, j)| {
                    Ok(FoamExpr::Product(vec![
                        FoamExpr::Atom(rest.with_dots(facet, i as i64)?),
                        FoamExpr::sphere(dots_off + j),
                    ]))
                })
                .collect::<Result<_, FoamError>>()?
        }
    };
    Ok(FoamExpr::Sum(terms))
}

/// `M[l][l'] = S(l + l')` for `l, l' ∈ {0,1,2}`.
pub fn unknot_pairing_matrix() -> [[u8; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| eval_sphere((i + j) as u32)))
}

/// Row `i` lists the coefficients of the dual basis element `β'_i` on `D'(0), D'(1), D'(2)`.
pub fn unknot_dual_basis() -> [[u8; 3]; 3] {
    let m = F2Matrix::from_rows(&unknot_pairing_matrix());
    let inv = m.inverse().expect("pairing is perfect");
    std::array::from_fn(|i| std::array::from_fn(|j| inv.get(i, j) as u8))
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Sphere(l) => write!(f, "sphere {l}"),
            Atom::Theta([a, b, c]) => write!(f, "theta {a} {b} {c}"),
            Atom::TetSusp { k, l } => write!(
                f,
                "tet {} {} {} {} {} {}",
                k[0], k[1], k[2], l[0], l[1], l[2]
            ),
            Atom::Surface { genus, dots } => write!(f, "surface {genus} {dots}"),
            Atom::CrossCap { a, b, dots } => write!(f, "crosscap {a} {b} {dots}"),
        }
    }
}

impl fmt::Display for FoamExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, fs: &[FoamExpr], op: &str| -> fmt::Result {
            write!(f, "(")?;
            for (i, x) in fs.iter().enumerate() {
                if i > 0 {
                    write!(f, " {op} ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")
        };
        match self {
            FoamExpr::Zero => write!(f, "0"),
            FoamExpr::Atom(a) => write!(f, "({a})"),
            FoamExpr::Decorated { inner, deco, facet } => {
                let name = match deco {
                    Decoration::SumT2 => "sum-t2",
                    Decoration::SumRplus => "sum-rplus",
                    Decoration::SumRminus => "sum-rminus",
                };
                write!(f, "({name} {facet} {inner})")
            }
            FoamExpr::Bubbled { host, facet, k } => write!(f, "(bubble {k} {facet} {host})"),
            FoamExpr::Product(fs) => join(f, fs, "*"),
            FoamExpr::Sum(fs) => join(f, fs, "+"),
        }
    }
}

/// Parse the prefix foam language, e.g. `sum-t2 (sphere 0) + theta 0 1 2 * sphere 2`.
pub fn parse_foam(text: &str) -> Result<FoamExpr, FoamError> {
    let tokens: Vec<String> = text
        .replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_string)
        .collect();
    let mut p = FoamParser { tokens, pos: 0 };
    let e = p.sum()?;
    if p.pos != p.tokens.len() {
        return Err(FoamError::Syntax(format!(
            "unexpected {:?}",
            p.tokens[p.pos]
        )));
    }
    Ok(e)
}

struct FoamParser {
    tokens: Vec<String>,
    pos: usize,
}

impl FoamParser {
    fn peek(&self) -> Option<&str> {
        self.tokens.get(self.pos).map(String::as_str)
    }

    fn next(&mut self) -> Result<String, FoamError> {
        let t = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| FoamError::Syntax("unexpected end of input".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn number(&mut self) -> Result<u32, FoamError> {
        let t = self.next()?;
        t.parse()
            .map_err(|_| FoamError::Syntax(format!("expected a number, found {t:?}")))
    }

    fn numbers<const N: usize>(&mut self) -> Result<[u32; N], FoamError> {
        let mut out = [0; N];
        for x in &mut out {
            *x = self.number()?;
        }
        Ok(out)
    }

    fn optional_number(&mut self) -> Option<u32> {
        let v = self.peek()?.parse().ok()?;
        self.pos += 1;
        Some(v)
    }

    fn sum(&mut self) -> Result<FoamExpr, FoamError> {
        let mut terms = vec![self.product()?];
        while self.peek() == Some("+") {
            self.pos += 1;
            terms.push(self.product()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            FoamExpr::Sum(terms)
        })
    }

    fn product(&mut self) -> Result<FoamExpr, FoamError> {
        let mut fs = vec![self.factor()?];
        while self.peek() == Some("*") {
            self.pos += 1;
            fs.push(self.factor()?);
        }
        Ok(if fs.len() == 1 {
            fs.pop().unwrap()
        } else {
            FoamExpr::Product(fs)
        })
    }

    fn factor(&mut self) -> Result<FoamExpr, FoamError> {
        let head = self.next()?;
        let e = match head.as_str() {
            "(" => {
                let e = self.sum()?;
                if self.next()? != ")" {
                    return Err(FoamError::Syntax("missing )".into()));
                }
                e
            }
            "0" => FoamExpr::Zero,
            "sphere" => FoamExpr::sphere(self.number()?),
            "theta" => FoamExpr::Atom(Atom::Theta(self.numbers()?)),
            "tet" => {
                let [k1, k2, k3, l1, l2, l3] = self.numbers()?;
                FoamExpr::Atom(Atom::TetSusp {
                    k: [k1, k2, k3],
                    l: [l1, l2, l3],
                })
            }
            "surface" => {
                let [genus, dots] = self.numbers()?;
                FoamExpr::Atom(Atom::Surface { genus, dots })
            }
            "crosscap" => {
                let [a, b, dots] = self.numbers()?;
                if a + b == 0 {
                    return Err(FoamError::Syntax("crosscap needs a + b >= 1".into()));
                }
                FoamExpr::Atom(Atom::CrossCap { a, b, dots })
            }
            "sum-t2" | "sum-rplus" | "sum-rminus" => {
                let deco = match head.as_str() {
                    "sum-t2" => Decoration::SumT2,
                    "sum-rplus" => Decoration::SumRplus,
                    _ => Decoration::SumRminus,
                };
                let facet = self.optional_number().unwrap_or(0) as usize;
                let inner = self.factor()?;
                check_single(&inner, facet)?;
                inner.decorate(deco, facet)
            }
            "bubble" => {
                let k = self.number()?;
                let facet = self.optional_number().unwrap_or(0) as usize;
                let host = self.factor()?;
                check_single(&host, facet)?;
                host.bubble(facet, k)
            }
            other => return Err(FoamError::Syntax(format!("unknown foam {other:?}"))),
        };
        Ok(e)
    }
}

fn check_single(e: &FoamExpr, facet: usize) -> Result<(), FoamError> {
    let facets = e.facets()?;
    if facet >= facets {
        return Err(FoamError::UnknownFacet { facet, facets });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_values() {
        let v: Vec<u8> = (0..7).map(eval_sphere).collect();
        assert_eq!(v, [0, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn theta_values() {
        assert_eq!(eval_theta(0, 1, 2), 1);
        assert_eq!(eval_theta(1, 1, 1), 0);
        assert_eq!(eval_theta(2, 2, 0), 0);
        assert_eq!(eval_theta(0, 3, 2), 1);
        assert_eq!(eval_theta(2, 2, 2), 0);
        assert_eq!(eval_tet_susp([0, 1, 1], [1, 0, 0]), 0);
        assert_eq!(eval_tet_susp([0, 0, 0], [0, 1, 2]), 1);
    }

    #[test]
    fn surfaces() {
        assert_eq!(eval_surface(1, 0), 1);
        assert_eq!(eval_surface(2, 1), 0);
        assert_eq!(eval_crosscap(1, 0, 2), 1);
        assert_eq!(eval_crosscap(1, 1, 0), 1);
    }

    #[test]
    fn sums() {
        let t2 = FoamExpr::sphere(0).decorate(Decoration::SumT2, 0);
        assert_eq!(t2.eval().unwrap(), 1);
        let rp = FoamExpr::theta(0, 1, 2).decorate(Decoration::SumRplus, 2);
        assert_eq!(rp.eval().unwrap(), 1);
        let bad = apply_sum(FoamExpr::sphere(0), Decoration::SumT2, 1);
        assert_eq!(
            bad,
            Err(FoamError::UnknownFacet {
                facet: 1,
                facets: 1
            })
        );
    }

    #[test]
    fn torus_neck() {
        let cut = neck_cut(&Atom::Surface { genus: 1, dots: 0 }, NeckSite::Essential).unwrap();
        assert_eq!(cut.eval().unwrap(), 1);
        assert_eq!(
            neck_cut(&Atom::Sphere(2), NeckSite::Essential),
            Err(FoamError::UnsupportedSite)
        );
    }

    #[test]
    fn pairing_and_dual_basis() {
        assert_eq!(unknot_pairing_matrix(), [[0, 0, 1], [0, 1, 0], [1, 0, 1]]);
        assert_eq!(unknot_dual_basis(), [[1, 0, 1], [0, 1, 0], [1, 0, 0]]);
    }

    #[test]
    fn parse_and_eval() {
        let cases = [
            ("theta 0 1 2", 1),
            ("sphere 4", 1),
            ("sum-t2 (sphere 0)", 1),
            ("sum-rminus (sphere 0)", 1),
            ("bubble 2 (sphere 0)", 0),
            ("bubble 2 2 (theta 0 1 1)", 1),
            ("sphere 2 * theta 0 1 2 + sphere 2", 0),
            ("(sphere 2 + sphere 0) * sphere 2", 1),
            ("tet 0 1 2 0 0 0", 1),
        ];
        for (src, want) in cases {
            assert_eq!(parse_foam(src).unwrap().eval().unwrap(), want, "{src}");
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_foam("cube 3"), Err(FoamError::Syntax(_))));
        assert!(matches!(parse_foam("theta 0 1"), Err(FoamError::Syntax(_))));
        assert_eq!(
            parse_foam("sum-t2 4 (theta 0 0 0)"),
            Err(FoamError::UnknownFacet {
                facet: 4,
                facets: 3
            })
        );
        assert_eq!(
            parse_foam("sum-t2 (sphere 0 + sphere 2)"),
            Err(FoamError::NotSingleFoam)
        );
    }

    #[test]
    fn display_round_trips() {
        let e = parse_foam("bubble 1 2 (sum-t2 1 (theta 0 1 1)) + sphere 2 * surface 1 0").unwrap();
        assert_eq!(parse_foam(&e.to_string()).unwrap(), e);
    }
}
