#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use webfoam::web_core::{Diagram, NodeKind};

/// Laurent polynomial in A.
pub type Laurent = BTreeMap<i32, i64>;

fn mul(p: &Laurent, q: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (a, x) in p {
        for (b, y) in q {
            *out.entry(a + b).or_insert(0) += x * y;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// Darts of the web edge leaving vertex dart `x`, through every crossing it passes.
pub fn edge_darts(d: &Diagram, x: usize) -> HashSet<usize> {
    let mut out = HashSet::from([x]);
    let mut y = d.partner(x);
    loop {
        out.insert(y);
        let (n, pos) = d.dart_node(y);
        let node = &d.nodes()[n];
        if !node.is_crossing() {
            return out;
        }
        let z = node.darts[(pos + 2) % 4];
        out.insert(z);
        y = d.partner(z);
    }
}

/// Kauffman bracket of the link left after deleting `deleted` darts; vertices must become bivalent.
pub fn bracket_without(d: &Diagram, deleted: &HashSet<usize>) -> Laurent {
    let n = d.dart_count();
    let mut fixed: Vec<(usize, usize)> = Vec::new();
    let mut live: Vec<usize> = Vec::new();
    for (i, node) in d.nodes().iter().enumerate() {
        let kept: Vec<usize> = node
            .darts
            .iter()
            .copied()
            .filter(|x| !deleted.contains(x))
            .collect();
        match node.kind {
            NodeKind::Vertex { .. } => {
                if kept.len() == 2 {
                    fixed.push((kept[0], kept[1]));
                } else {
                    assert!(kept.is_empty(), "vertex must lose exactly one edge");
                }
            }
            NodeKind::Crossing { .. } => match kept.len() {
                4 => live.push(i),
                2 => fixed.push((kept[0], kept[1])),
                0 => {}
                _ => unreachable!(),
            },
        }
    }
    for x in 0..n {
        if !deleted.contains(&x) && x < d.partner(x) {
            fixed.push((x, d.partner(x)));
        }
    }
    let delta: Laurent = [(2, -1), (-2, -1)].into_iter().collect();
    let mut total = Laurent::new();
    for state in 0u32..(1 << live.len()) {
        let mut parent: Vec<usize> = (0..n).collect();
        let join = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            p[ra] = rb;
        };
        for &(a, b) in &fixed {
            join(&mut parent, a, b);
        }
        let mut exp = 0;
        for (k, &ci) in live.iter().enumerate() {
            let node = &d.nodes()[ci];
            let NodeKind::Crossing { over } = node.kind else {
                unreachable!()
            };
            let p: Vec<usize> = (0..4)
                .map(|i| node.darts[(over as usize + i) % 4])
                .collect();
            if state >> k & 1 == 0 {
                exp += 1;
                join(&mut parent, p[1], p[2]);
                join(&mut parent, p[3], p[0]);
            } else {
                exp -= 1;
                join(&mut parent, p[0], p[1]);
                join(&mut parent, p[2], p[3]);
            }
        }
        let roots: HashSet<usize> = (0..n)
            .filter(|x| !deleted.contains(x))
            .map(|x| find(&mut parent, x))
            .collect();
        let loops = roots.len() + d.circles().len();
        let mut term: Laurent = [(exp, 1)].into_iter().collect();
        for _ in 1..loops.max(1) {
            term = mul(&term, &delta);
        }
        for (e, c) in term {
            *total.entry(e).or_insert(0) += c;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

pub fn bracket(d: &Diagram) -> Laurent {
    bracket_without(d, &HashSet::new())
}

pub fn is_monomial(p: &Laurent) -> bool {
    p.len() == 1 && p.values().all(|c| c.abs() == 1)
}

/// Brackets of the three knots obtained by deleting one edge of a theta diagram.
pub fn constituent_brackets(d: &Diagram) -> Vec<Laurent> {
    let u = d
        .nodes()
        .iter()
        .find(|n| !n.is_crossing())
        .expect("theta has vertices");
    u.darts
        .iter()
        .map(|&x| bracket_without(d, &edge_darts(d, x)))
        .collect()
}
