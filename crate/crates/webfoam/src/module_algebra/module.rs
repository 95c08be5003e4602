use std::collections::{BTreeMap, HashSet};

use serde_json::{json, Value};

use super::f2::F2Matrix;
use super::ModuleError;

/// Finite-dimensional GF(2) vector space with named commuting operators.
///
/// Operator matrices act on column vectors: column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Module {
    labels: Vec<String>,
    operators: BTreeMap<String, F2Matrix>,
    /// Z/2 degree per basis vector, when known.
    grading: Option<Vec<u8>>,
}

impl F2Module {
    pub fn new(
        labels: Vec<String>,
        operators: BTreeMap<String, F2Matrix>,
        grading: Option<Vec<u8>>,
    ) -> Result<Self, ModuleError> {
        let n = labels.len();
        for (name, a) in &operators {
            if a.rows() != n || a.cols() != n {
                return Err(ModuleError::Shape(name.clone()));
            }
        }
        if grading.as_ref().is_some_and(|g| g.len() != n) {
            return Err(ModuleError::Shape("grading".into()));
        }
        let ops: Vec<(&String, &F2Matrix)> = operators.iter().collect();
        for (i, (x, a)) in ops.iter().enumerate() {
            for (y, b) in &ops[i + 1..] {
                if !a.commutes_with(b) {
                    return Err(ModuleError::NonCommuting((*x).clone(), (*y).clone()));
                }
            }
        }
        Ok(F2Module {
            labels,
            operators,
            grading,
        })
    }

    pub fn zero() -> Self {
        F2Module {
            labels: Vec::new(),
            operators: BTreeMap::new(),
            grading: Some(Vec::new()),
        }
    }

    /// One-dimensional even module on which every named operator acts by `value`.
    pub fn scalar(names: &[&str], value: bool) -> Self {
        let m = if value {
            F2Matrix::identity(1)
        } else {
            F2Matrix::zeros(1, 1)
        };
        F2Module {
            labels: vec!["1".into()],
            operators: names.iter().map(|n| (n.to_string(), m.clone())).collect(),
            grading: Some(vec![0]),
        }
    }

    /// `dim`-dimensional module of the given parity with no operators.
    pub fn plain(dim: usize, odd: bool) -> Self {
        F2Module {
            labels: (0..dim).map(|i| format!("b{i}")).collect(),
            operators: BTreeMap::new(),
            grading: Some(vec![odd as u8; dim]),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn operators(&self) -> &BTreeMap<String, F2Matrix> {
        &self.operators
    }

    pub fn operator(&self, name: &str) -> Option<&F2Matrix> {
        self.operators.get(name)
    }

    pub fn operator_names(&self) -> Vec<String> {
        self.operators.keys().cloned().collect()
    }

    pub fn grading(&self) -> Option<&[u8]> {
        self.grading.as_deref()
    }

    pub fn with_grading(mut self, grading: Option<Vec<u8>>) -> Result<Self, ModuleError> {
        if grading.as_ref().is_some_and(|g| g.len() != self.dim()) {
            return Err(ModuleError::Shape("grading".into()));
        }
        self.grading = grading;
        Ok(self)
    }

    pub fn even(self) -> Self {
        let n = self.dim();
        F2Module {
            grading: Some(vec![0; n]),
            ..self
        }
    }

    /// The grading shift `M{1}`.
    pub fn shift(&self) -> Self {
        F2Module {
            grading: self
                .grading
                .as_ref()
                .map(|g| g.iter().map(|x| x ^ 1).collect()),
            ..self.clone()
        }
    }

    /// `(even, odd)` dimensions, if graded.
    pub fn graded_dims(&self) -> Option<(usize, usize)> {
        let g = self.grading.as_ref()?;
        let odd = g.iter().filter(|&&x| x == 1).count();
        Some((g.len() - odd, odd))
    }

    pub fn euler_characteristic(&self) -> Option<i64> {
        self.graded_dims().map(|(e, o)| e as i64 - o as i64)
    }

    /// Operators renamed: each `(new, old)` pair names a copy of operator `old`.
    pub fn aliased(&self, names: &[(&str, &str)]) -> Result<Self, ModuleError> {
        let mut ops = BTreeMap::new();
        for &(new, old) in names {
            let a = self
                .operators
                .get(old)
                .ok_or_else(|| ModuleError::UnknownOperator(old.into()))?;
            ops.insert(new.to_string(), a.clone());
        }
        Ok(F2Module {
            operators: ops,
            ..self.clone()
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, ModuleError> {
        if self.operator_names() != other.operator_names() {
            return Err(ModuleError::OperatorMismatch);
        }
        let ops = self
            .operators
            .iter()
            .map(|(k, a)| (k.clone(), a.direct_sum(&other.operators[k])))
            .collect();
        let grading = match (&self.grading, &other.grading) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        let labels = self
            .labels
            .iter()
            .map(|l| format!("{l}[0]"))
            .chain(other.labels.iter().map(|l| format!("{l}[1]")))
            .collect();
        Ok(F2Module {
            labels,
            operators: ops,
            grading,
        })
    }

    pub fn direct_sum_all(parts: &[F2Module]) -> Result<Self, ModuleError> {
        let mut it = parts.iter();
        let Some(first) = it.next() else {
            return Ok(F2Module::zero());
        };
        let mut acc = first.clone();
        for p in it {
            acc = acc.direct_sum(p)?;
        }
        Ok(acc)
    }

    /// Tensor product; operator names of the factors must be disjoint.
    pub fn tensor(&self, other: &Self) -> Result<Self, ModuleError> {
        let (n, m) = (self.dim(), other.dim());
        let mut ops = BTreeMap::new();
        for (k, a) in &self.operators {
            ops.insert(k.clone(), a.kron(&F2Matrix::identity(m)));
        }
        for (k, b) in &other.operators {
            if ops
                .insert(k.clone(), F2Matrix::identity(n).kron(b))
                .is_some()
            {
                return Err(ModuleError::DuplicateOperator(k.clone()));
            }
        }
        let mut labels = Vec::with_capacity(n * m);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        let grading = match (&self.grading, &other.grading) {
            (Some(a), Some(b)) => Some(
                a.iter()
                    .flat_map(|x| b.iter().map(move |y| x ^ y))
                    .collect(),
            ),
            _ => None,
        };
        Ok(F2Module {
            labels,
            operators: ops,
            grading,
        })
    }

    /// Every operator satisfies `u^3 + u = 0`.
    pub fn check_cubic(&self) -> Result<(), ModuleError> {
        for (k, a) in &self.operators {
            if !a.pow(3).add(a).is_zero() {
                return Err(ModuleError::NotCubic(k.clone()));
            }
        }
        Ok(())
    }

    /// Minimal polynomial of an operator, coefficients from the constant term up.
    pub fn minimal_polynomial(&self, name: &str) -> Result<Vec<u8>, ModuleError> {
        let a = self
            .operator(name)
            .ok_or_else(|| ModuleError::UnknownOperator(name.into()))?;
        Ok(minimal_polynomial(a))
    }

    /// Restriction to an invariant subspace spanned by the given independent columns.
    pub fn restrict(&self, basis: &[Vec<bool>]) -> Result<Self, ModuleError> {
        let n = self.dim();
        let b = F2Matrix::from_columns(n, basis);
        if b.rank() != basis.len() {
            return Err(ModuleError::Shape("dependent basis".into()));
        }
        let mut ops = BTreeMap::new();
        for (k, a) in &self.operators {
            let r = b
                .solve(&a.mul(&b))
                .ok_or_else(|| ModuleError::NotInvariant(k.clone()))?;
            ops.insert(k.clone(), r);
        }
        let grading = self.grading.as_ref().and_then(|g| {
            basis
                .iter()
                .map(|v| {
                    let degs: HashSet<u8> = (0..n).filter(|&i| v[i]).map(|i| g[i]).collect();
                    (degs.len() == 1).then(|| *degs.iter().next().unwrap())
                })
                .collect::<Option<Vec<u8>>>()
        });
        Ok(F2Module {
            labels: (0..basis.len()).map(|i| format!("w{i}")).collect(),
            operators: ops,
            grading,
        })
    }

    /// Cyclic submodule generated by `v`, as a list of spanning vectors in echelon form.
    pub fn cyclic_span(&self, v: &[bool]) -> Vec<Vec<bool>> {
        let n = self.dim();
        let mut span: Vec<Vec<bool>> = Vec::new();
        let mut queue = vec![v.to_vec()];
        while let Some(w) = queue.pop() {
            let mut cand = span.clone();
            cand.push(w.clone());
            if F2Matrix::from_columns(n, &cand).rank() > span.len() {
                span.push(w.clone());
                for a in self.operators.values() {
                    queue.push(a.mul_vec(&w));
                }
            }
        }
        span
    }

    /// True when some single vector generates the whole module (exhaustive search).
    pub fn is_cyclic(&self) -> bool {
        let n = self.dim();
        if n == 0 {
            return true;
        }
        assert!(n <= 24, "exhaustive cyclicity search limited to dim 24");
        (1u64..1 << n).any(|bits| {
            let v: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
            self.cyclic_span(&v).len() == n
        })
    }

    pub fn to_json(&self) -> Value {
        let ops: BTreeMap<&String, Value> = self
            .operators
            .iter()
            .map(|(k, a)| {
                (
                    k,
                    json!({
                        "matrix": a.to_rows(),
                        "minimal_polynomial": poly_string(&minimal_polynomial(a)),
                    }),
                )
            })
            .collect();
        json!({
            "dim": self.dim(),
            "basis": self.labels,
            "graded_dims": self.graded_dims().map(|(e, o)| json!({"even": e, "odd": o})),
            "chi": self.euler_characteristic(),
            "operators": ops,
        })
    }
}

pub fn minimal_polynomial(a: &F2Matrix) -> Vec<u8> {
    let n = a.rows();
    let flat = |m: &F2Matrix| -> Vec<bool> {
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j))
            .collect()
    };
    let mut powers = vec![flat(&F2Matrix::identity(n))];
    let mut cur = F2Matrix::identity(n);
    loop {
        cur = cur.mul(a);
        let target = flat(&cur);
        let basis = F2Matrix::from_columns(n * n, &powers);
        let y = F2Matrix::from_columns(n * n, &[target]);
        if let Some(x) = basis.solve(&y) {
            let mut coeffs: Vec<u8> = (0..powers.len()).map(|i| x.get(i, 0) as u8).collect();
            coeffs.push(1);
            return coeffs;
        }
        powers.push(flat(&cur));
    }
}

pub fn poly_string(coeffs: &[u8]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c == 1)
        .map(|(k, _)| match k {
            0 => "1".to_string(),
            1 => "u".to_string(),
            _ => format!("u^{k}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn companion() -> F2Matrix {
        F2Matrix::from_rows(&[[0, 0, 0], [1, 0, 1], [0, 1, 0]])
    }

    #[test]
    fn minimal_polynomial_of_companion() {
        assert_eq!(minimal_polynomial(&companion()), vec![0, 1, 0, 1]);
        assert_eq!(poly_string(&[0, 1, 0, 1]), "u^3+u");
        assert_eq!(minimal_polynomial(&F2Matrix::identity(2)), vec![1, 1]);
    }

    #[test]
    fn non_commuting_rejected() {
        let a = F2Matrix::from_rows(&[[0, 1], [0, 0]]);
        let b = F2Matrix::from_rows(&[[1, 0], [0, 0]]);
        let ops = BTreeMap::from([("a".to_string(), a), ("b".to_string(), b)]);
        let labels = vec!["x".into(), "y".into()];
        assert!(matches!(
            F2Module::new(labels, ops, None),
            Err(ModuleError::NonCommuting(..))
        ));
    }

    #[test]
    fn shift_flips_parity() {
        let m = F2Module::plain(3, false);
        assert_eq!(m.shift().graded_dims(), Some((0, 3)));
        assert_eq!(m.shift().euler_characteristic(), Some(-3));
    }
}
