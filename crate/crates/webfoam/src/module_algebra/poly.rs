//! Polynomials over GF(2) in named variables.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::ModuleError;

/// Exponent vector, one entry per generator.
pub type Monomial = Vec<u32>;

pub fn degree(m: &Monomial) -> u32 {
    m.iter().sum()
}

/// Graded order; ties broken by the exponent of the last variable first.
pub fn monomial_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    degree(a)
        .cmp(&degree(b))
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

pub fn monomial_label(m: &Monomial, names: &[String]) -> String {
    let parts: Vec<String> = m
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, n)| {
            if e == 1 {
                n.clone()
            } else {
                format!("{n}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// All monomials in `n` variables of total degree exactly `d`.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    pub terms: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly {
            terms: BTreeSet::from([m]),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(degree).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Poly {
            terms: self
                .terms
                .symmetric_difference(&other.terms)
                .cloned()
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = BTreeSet::new();
        for a in &self.terms {
            for b in &other.terms {
                let m: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if !out.insert(m.clone()) {
                    out.remove(&m);
                }
            }
        }
        Poly { terms: out }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| t.iter().zip(m).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let n = self.terms.iter().next().map_or(0, Vec::len);
        (0..e).fold(Poly::one(n), |acc, _| acc.mul(self))
    }

    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.iter().max_by(|a, b| monomial_cmp(a, b))
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut ms: Vec<&Monomial> = self.terms.iter().collect();
        ms.sort_by(|a, b| monomial_cmp(b, a));
        ms.iter()
            .map(|m| monomial_label(m, names))
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Parse `u1*u2 + u3^2 + 1`-style text; integer coefficients are read mod 2.
pub fn parse_poly(text: &str, names: &[String]) -> Result<Poly, ModuleError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        names,
    };
    let poly = p.sum()?;
    if p.pos != p.tokens.len() {
        return Err(ModuleError::Parse(format!("trailing input in {text:?}")));
    }
    Ok(poly)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, ModuleError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            out.push(Tok::Num(
                s.parse().map_err(|_| ModuleError::Parse(s.clone()))?,
            ));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
            }
            out.push(Tok::Ident(s));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Sym(c));
            chars.next();
        } else {
            return Err(ModuleError::Parse(format!("unexpected {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn sum(&mut self) -> Result<Poly, ModuleError> {
        let mut acc = self.product()?;
        // over F2 subtraction is addition
        while matches!(self.peek(), Some(Tok::Sym('+' | '-'))) {
            self.pos += 1;
            acc = acc.add(&self.product()?);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Poly, ModuleError> {
        let mut acc = self.power()?;
        while matches!(self.peek(), Some(Tok::Sym('*'))) {
            self.pos += 1;
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly, ModuleError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Sym('^'))) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    let e = u32::try_from(e).map_err(|_| ModuleError::Parse("exponent".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(ModuleError::Parse("exponent must be a number".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, ModuleError> {
        let n = self.names.len();
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Num(c)) => Ok(if c % 2 == 1 {
                Poly::one(n)
            } else {
                Poly::zero()
            }),
            Some(Tok::Ident(name)) => {
                let i = self
                    .names
                    .iter()
                    .position(|g| *g == name)
                    .ok_or_else(|| ModuleError::Parse(format!("unknown variable {name}")))?;
                let mut m = vec![0; n];
                m[i] = 1;
                Ok(Poly::monomial(m))
            }
            Some(Tok::Sym('(')) => {
                let p = self.sum()?;
                if self.peek() != Some(&Tok::Sym(')')) {
                    return Err(ModuleError::Parse("missing )".into()));
                }
                self.pos += 1;
                Ok(p)
            }
            other => Err(ModuleError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}
