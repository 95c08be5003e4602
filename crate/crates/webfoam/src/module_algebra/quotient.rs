//! Cyclic modules `F2[x1..xn] / I` by degree-bounded linear algebra.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::f2::F2Matrix;
use super::poly::{
    degree, monomial_cmp, monomial_label, monomials_of_degree, parse_poly, Monomial, Poly,
};
use super::{F2Module, ModuleError};

pub const DEGREE_BOUND: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<Poly>,
}

impl Presentation {
    pub fn parse(generators: &[&str], relations: &[&str]) -> Result<Self, ModuleError> {
        let generators: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let relations = relations
            .iter()
            .map(|r| parse_poly(r, &generators))
            .collect::<Result<_, _>>()?;
        Ok(Presentation {
            generators,
            relations,
        })
    }
}

/// Substitute operator matrices into a polynomial.
pub fn evaluate(p: &Poly, ops: &[F2Matrix], n: usize) -> F2Matrix {
    let mut acc = F2Matrix::zeros(n, n);
    for m in &p.terms {
        let mut t = F2Matrix::identity(n);
        for (a, &e) in ops.iter().zip(m) {
            if e > 0 {
                t = t.mul(&a.pow(e));
            }
        }
        acc = acc.add(&t);
    }
    acc
}

pub fn quotient_module(p: &Presentation) -> Result<F2Module, ModuleError> {
    quotient_module_bounded(p, DEGREE_BOUND)
}

pub fn quotient_module_bounded(p: &Presentation, bound: u32) -> Result<F2Module, ModuleError> {
    let nv = p.generators.len();
    let relations: Vec<&Poly> = p.relations.iter().filter(|r| !r.is_zero()).collect();
    for d in 1..=bound {
        if let Some(m) = attempt(p, &relations, nv, d)? {
            return Ok(m);
        }
    }
    Err(ModuleError::DegreeBound(bound))
}

fn attempt(
    p: &Presentation,
    relations: &[&Poly],
    nv: usize,
    d: u32,
) -> Result<Option<F2Module>, ModuleError> {
    let top = d + 1;
    // columns ordered largest monomial first, so pivots are leading terms
    let mut cols: Vec<Monomial> = (0..=top).flat_map(|k| monomials_of_degree(nv, k)).collect();
    cols.sort_by(|a, b| monomial_cmp(b, a));
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();

    let mut rows: Vec<Vec<usize>> = Vec::new();
    for r in relations {
        let rd = r.degree();
        if rd > top {
            continue;
        }
        for k in 0..=top - rd {
            for m in monomials_of_degree(nv, k) {
                rows.push(r.mul_monomial(&m).terms.iter().map(|t| index[t]).collect());
            }
        }
    }
    let mut mac = F2Matrix::zeros(rows.len(), cols.len());
    for (i, r) in rows.iter().enumerate() {
        for &j in r {
            mac.set(i, j, true);
        }
    }
    let pivots = mac.rref();
    let leading: HashSet<usize> = pivots.iter().copied().collect();
    let closed = cols
        .iter()
        .enumerate()
        .filter(|(_, m)| degree(m) >= d)
        .all(|(j, _)| leading.contains(&j));
    if !closed {
        return Ok(None);
    }

    let mut basis: Vec<usize> = (0..cols.len()).filter(|j| !leading.contains(j)).collect();
    basis.sort_by(|&a, &b| monomial_cmp(&cols[a], &cols[b]));
    let pos: HashMap<usize, usize> = basis.iter().enumerate().map(|(i, &j)| (j, i)).collect();
    let pivot_row: HashMap<usize, usize> =
        pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
    let n = basis.len();

    let normal_form = |m: &Monomial| -> Vec<bool> {
        let j = index[m];
        let mut v = vec![false; n];
        if let Some(&i) = pos.get(&j) {
            v[i] = true;
        } else {
            let r = pivot_row[&j];
            for (&c, &i) in &pos {
                if mac.get(r, c) {
                    v[i] = true;
                }
            }
        }
        v
    };

    let mut ops = Vec::with_capacity(nv);
    for x in 0..nv {
        let columns: Vec<Vec<bool>> = basis
            .iter()
            .map(|&j| {
                let mut m = cols[j].clone();
                m[x] += 1;
                normal_form(&m)
            })
            .collect();
        ops.push(F2Matrix::from_columns(n, &columns));
    }
    let commuting = (0..nv).all(|i| (i + 1..nv).all(|j| ops[i].commutes_with(&ops[j])));
    if !commuting || relations.iter().any(|r| !evaluate(r, &ops, n).is_zero()) {
        return Ok(None);
    }
    let labels = basis
        .iter()
        .map(|&j| monomial_label(&cols[j], &p.generators))
        .collect();
    let operators: BTreeMap<String, F2Matrix> = p.generators.iter().cloned().zip(ops).collect();
    F2Module::new(labels, operators, None).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_companion() {
        let p = Presentation::parse(&["u"], &["u^3+u"]).unwrap();
        let m = quotient_module(&p).unwrap();
        assert_eq!(m.labels(), ["1", "u", "u^2"]);
        let u = m.operator("u").unwrap();
        assert_eq!(u.column(0), [false, true, false]);
        assert_eq!(u.column(1), [false, false, true]);
        assert_eq!(u.column(2), [false, true, false]);
    }

    #[test]
    fn theta_basis() {
        let p = Presentation::parse(
            &["u1", "u2", "u3"],
            &["u1+u2+u3", "u1*u2+u1*u3+u2*u3+1", "u1*u2*u3"],
        )
        .unwrap();
        let m = quotient_module(&p).unwrap();
        assert_eq!(m.dim(), 6);
        let want: HashSet<&str> = ["1", "u1", "u1^2", "u2", "u1*u2", "u1^2*u2"].into();
        assert_eq!(
            m.labels()
                .iter()
                .map(|s| s.as_str())
                .collect::<HashSet<_>>(),
            want
        );
    }

    #[test]
    fn unit_ideal_is_zero() {
        let p = Presentation::parse(&["u"], &["u+1", "u"]).unwrap();
        assert_eq!(quotient_module(&p).unwrap().dim(), 0);
    }

    #[test]
    fn infinite_quotient_reports_bound() {
        let p = Presentation::parse(&["x", "y"], &["x^2"]).unwrap();
        assert_eq!(
            quotient_module_bounded(&p, 4),
            Err(ModuleError::DegreeBound(4))
        );
    }
}
