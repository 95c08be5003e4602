//! Simultaneous eigenspace splitting under the edge operators.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::f2::F2Matrix;
use super::{F2Module, ModuleError};

/// Nonzero summands `V(s)` keyed by the sorted edge set `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDecomposition {
    pub edges: Vec<String>,
    pub summands: BTreeMap<Vec<String>, usize>,
    pub total: usize,
}

impl EdgeDecomposition {
    pub fn dim_of(&self, s: &[&str]) -> usize {
        let mut key: Vec<String> = s.iter().map(|x| x.to_string()).collect();
        key.sort();
        self.summands.get(&key).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .summands
            .iter()
            .map(|(s, d)| json!({"edges": s, "dim": d}))
            .collect();
        json!({"edges": self.edges, "summands": rows, "total": self.total})
    }
}

/// Stacked conditions cutting out `V(s)`: `u_e = 0` for `e` in `s`, `u_e^2 + 1 = 0` otherwise.
///
/// The second condition describes `im(u_e)`, since `u^3 + u = u(u+1)^2` splits the space.
fn conditions(m: &F2Module, edges: &[String], s: &[bool]) -> F2Matrix {
    let n = m.dim();
    let mut stack = F2Matrix::zeros(0, n);
    for (e, &inside) in edges.iter().zip(s) {
        let u = m.operator(e).expect("checked edge");
        let c = if inside {
            u.clone()
        } else {
            u.mul(u).add(&F2Matrix::identity(n))
        };
        stack = stack.vstack(&c);
    }
    stack
}

fn check(m: &F2Module, edges: &[String]) -> Result<(), ModuleError> {
    for e in edges {
        let u = m
            .operator(e)
            .ok_or_else(|| ModuleError::UnknownOperator(e.clone()))?;
        if !u.pow(3).add(u).is_zero() {
            return Err(ModuleError::NotCubic(e.clone()));
        }
    }
    Ok(())
}

pub fn edge_decomposition(
    m: &F2Module,
    edges: &[String],
) -> Result<EdgeDecomposition, ModuleError> {
    check(m, edges)?;
    let k = edges.len();
    assert!(k < 24, "too many edges for subset enumeration");
    let mut summands = BTreeMap::new();
    let mut total = 0;
    for mask in 0u32..1 << k {
        let s: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
        let dim = m.dim() - conditions(m, edges, &s).rank();
        if dim > 0 {
            let mut key: Vec<String> = (0..k).filter(|&i| s[i]).map(|i| edges[i].clone()).collect();
            key.sort();
            summands.insert(key, dim);
            total += dim;
        }
    }
    Ok(EdgeDecomposition {
        edges: edges.to_vec(),
        summands,
        total,
    })
}

/// The summand `V(s)` as a module in its own right.
pub fn summand(m: &F2Module, edges: &[String], s: &[&str]) -> Result<F2Module, ModuleError> {
    check(m, edges)?;
    let mask: Vec<bool> = edges.iter().map(|e| s.contains(&e.as_str())).collect();
    let basis = conditions(m, edges, &mask).kernel();
    m.restrict(&basis)
}
