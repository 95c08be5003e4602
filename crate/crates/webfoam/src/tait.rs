//! Tait colorings, 1-sets and the planar dimension count.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::web_core::{Diagram, Web};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TaitError {
    #[error("edge set is not a 1-set")]
    NotOneSet,
}

/// Colors in `{0, 1, 2}` indexed by edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaitColoring {
    pub color: Vec<u8>,
}

/// A perfect matching of the vertices; circle edges may be in or out.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OneSet {
    /// Sorted edge indices.
    pub edges: Vec<usize>,
}

impl OneSet {
    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneSetInfo {
    pub edges: Vec<String>,
    pub even: bool,
    pub n: usize,
}

/// `+1` iff the slot colors are an even permutation.
pub fn vertex_sign(slot_colors: [u8; 3]) -> i64 {
    if (slot_colors[0] + 1) % 3 == slot_colors[1] {
        1
    } else {
        -1
    }
}

/// Edge order for the search: breadth first from each component's first vertex.
fn search_order(w: &Web) -> Vec<usize> {
    let mut order = Vec::with_capacity(w.edge_count());
    let mut placed = vec![false; w.edge_count()];
    let mut visited = vec![false; w.vertex_count()];
    for root in 0..w.vertex_count() {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for (e, end) in w.slots(v) {
                if !placed[e] {
                    placed[e] = true;
                    order.push(e);
                }
                let other = w.edges()[e].ends.expect("vertex edge")[1 - end as usize].vertex;
                if !visited[other] {
                    visited[other] = true;
                    queue.push_back(other);
                }
            }
        }
    }
    order.extend((0..w.edge_count()).filter(|&e| !placed[e]));
    order
}

/// Visit every Tait coloring of `w`.
pub fn for_each_coloring(w: &Web, mut visit: impl FnMut(&[u8])) {
    if w.has_loop() {
        return;
    }
    let order = search_order(w);
    let mut color = vec![u8::MAX; w.edge_count()];
    fn ok(w: &Web, color: &[u8], e: usize, c: u8) -> bool {
        match w.edges()[e].ends {
            None => true,
            Some(ends) => ends.iter().all(|p| {
                w.vertex_edges(p.vertex)
                    .iter()
                    .all(|&f| f == e || color[f] != c)
            }),
        }
    }
    fn go(w: &Web, order: &[usize], k: usize, color: &mut Vec<u8>, visit: &mut dyn FnMut(&[u8])) {
        if k == order.len() {
            visit(color);
            return;
        }
        let e = order[k];
        for c in 0..3 {
            if ok(w, color, e, c) {
                color[e] = c;
                go(w, order, k + 1, color, visit);
                color[e] = u8::MAX;
            }
        }
    }
    go(w, &order, 0, &mut color, &mut visit);
}

pub fn tait_colorings(w: &Web) -> Vec<TaitColoring> {
    let mut out = Vec::new();
    for_each_coloring(w, |c| out.push(TaitColoring { color: c.to_vec() }));
    out
}

fn coloring_sign(w: &Web, color: &[u8]) -> i64 {
    (0..w.vertex_count())
        .map(|v| vertex_sign(w.vertex_edges(v).map(|e| color[e])))
        .product()
}

/// Unsigned and signed coloring counts, computed one component at a time.
pub fn coloring_counts(w: &Web) -> (u64, i64) {
    let mut count = 1u64;
    let mut signed = 1i64;
    for comp in w.components() {
        let sub = restrict(w, &comp);
        let mut c = 0u64;
        let mut s = 0i64;
        for_each_coloring(&sub, |col| {
            c += 1;
            s += coloring_sign(&sub, col);
        });
        count *= c;
        signed *= s;
    }
    (count, signed)
}

/// Number of Tait colorings.
pub fn tait_count(w: &Web) -> u64 {
    coloring_counts(w).0
}

/// Sum over Tait colorings of the product of vertex signs, with `o_v` read from slot order.
pub fn signed_tait_web(w: &Web) -> i64 {
    coloring_counts(w).1
}

/// Signed Tait count of a diagram; vertex orientations come from the plane and twist marks.
pub fn signed_tait(d: &Diagram) -> i64 {
    signed_tait_web(&d.underlying_web())
}

/// Sub-web on the given edges (a union of components).
pub(crate) fn restrict(w: &Web, edges: &[usize]) -> Web {
    use crate::web_core::{Edge, Port};
    let mut vmap = vec![usize::MAX; w.vertex_count()];
    let mut vertices = Vec::new();
    let mut out = Vec::new();
    for &e in edges {
        let edge = &w.edges()[e];
        let ends = edge.ends.map(|ends| {
            ends.map(|p| {
                if vmap[p.vertex] == usize::MAX {
                    vmap[p.vertex] = vertices.len();
                    vertices.push(w.vertices()[p.vertex].clone());
                }
                Port {
                    vertex: vmap[p.vertex],
                    slot: p.slot,
                }
            })
        });
        out.push(Edge {
            id: edge.id.clone(),
            label: edge.label.clone(),
            ends,
        });
    }
    Web::new(vertices, out).expect("components are closed under incidence")
}

/// All 1-sets of `w`.
pub fn one_sets(w: &Web) -> Vec<OneSet> {
    let n = w.vertex_count();
    let mut covered = vec![false; n];
    let mut chosen = Vec::new();
    let mut matchings = Vec::new();
    fn go(w: &Web, covered: &mut Vec<bool>, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(v) = covered.iter().position(|c| !c) else {
            out.push(chosen.clone());
            return;
        };
        let mut tried = Vec::new();
        for e in w.vertex_edges(v) {
            if tried.contains(&e) || w.edges()[e].is_loop() {
                continue;
            }
            tried.push(e);
            let [a, b] = w.edges()[e].ends.expect("vertex edge");
            let u = if a.vertex == v { b.vertex } else { a.vertex };
            if covered[u] {
                continue;
            }
            covered[v] = true;
            covered[u] = true;
            chosen.push(e);
            go(w, covered, chosen, out);
            chosen.pop();
            covered[v] = false;
            covered[u] = false;
        }
    }
    go(w, &mut covered, &mut chosen, &mut matchings);
    let circles: Vec<usize> = (0..w.edge_count())
        .filter(|&e| w.edges()[e].is_circle())
        .collect();
    let mut out = Vec::new();
    for m in matchings {
        for mask in 0u64..(1u64 << circles.len()) {
            let mut edges = m.clone();
            edges.extend(
                circles
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &c)| c),
            );
            edges.sort_unstable();
            out.push(OneSet { edges });
        }
    }
    out.sort();
    out
}

pub fn is_one_set(w: &Web, s: &OneSet) -> bool {
    let mut hits = vec![0u8; w.vertex_count()];
    for &e in &s.edges {
        if e >= w.edge_count() {
            return false;
        }
        if let Some(ends) = w.edges()[e].ends {
            for p in ends {
                hits[p.vertex] += 1;
            }
        }
    }
    hits.iter().all(|&h| h == 1)
}

/// Vertex count of each circle of the complementary 2-set.
pub fn complement_circles(w: &Web, s: &OneSet) -> Result<Vec<usize>, TaitError> {
    if !is_one_set(w, s) {
        return Err(TaitError::NotOneSet);
    }
    let n = w.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut circles = Vec::new();
    for (e, edge) in w.edges().iter().enumerate() {
        if s.contains(e) {
            continue;
        }
        match edge.ends {
            None => circles.push(0),
            Some([a, b]) => {
                adj[a.vertex].push(b.vertex);
                adj[b.vertex].push(a.vertex);
            }
        }
    }
    debug_assert!(adj.iter().all(|a| a.len() == 2));
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut size = 0;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            size += 1;
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        circles.push(size);
    }
    Ok(circles)
}

/// Every circle of the complement carries an even number of vertices.
pub fn is_even_one_set(w: &Web, s: &OneSet) -> Result<bool, TaitError> {
    Ok(complement_circles(w, s)?.iter().all(|c| c % 2 == 0))
}

pub fn one_set_ledger(w: &Web) -> Vec<OneSetInfo> {
    one_sets(w)
        .into_iter()
        .map(|s| {
            let circles = complement_circles(w, &s).expect("enumerated 1-set");
            OneSetInfo {
                edges: s.edges.iter().map(|&e| w.edges()[e].id.clone()).collect(),
                even: circles.iter().all(|c| c % 2 == 0),
                n: circles.len(),
            }
        })
        .collect()
}

/// Sum over even 1-sets of `2^n(s)`; meaningful for planar webs.
pub fn planar_lsharp_dim(w: &Web) -> u64 {
    one_sets(w)
        .iter()
        .map(|s| complement_circles(w, s).expect("enumerated 1-set"))
        .filter(|c| c.iter().all(|k| k % 2 == 0))
        .map(|c| 1u64 << c.len())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::web_core::parse_web;

    fn theta() -> Web {
        parse_web(
            r#"{"vertices":["u","v"],"edges":[
            {"id":"a","ends":[["u",0],["v",2]]},
            {"id":"b","ends":[["u",1],["v",1]]},
            {"id":"c","ends":[["u",2],["v",0]]}]}"#,
        )
        .unwrap()
    }

    fn handcuffs() -> Web {
        parse_web(
            r#"{"vertices":["u","v"],"edges":[
            {"id":"l","ends":[["u",0],["u",1]]},
            {"id":"m","ends":[["v",0],["v",1]]},
            {"id":"bar","ends":[["u",2],["v",2]]}]}"#,
        )
        .unwrap()
    }

    #[test]
    fn theta_counts() {
        let w = theta();
        assert_eq!(tait_count(&w), 6);
        assert_eq!(signed_tait_web(&w), -6);
        assert_eq!(planar_lsharp_dim(&w), 6);
        let sets = one_sets(&w);
        assert_eq!(sets.len(), 3);
        assert!(sets.iter().all(|s| s.edges.len() == 1));
        assert!(sets.iter().all(|s| is_even_one_set(&w, s).unwrap()));
    }

    #[test]
    fn unknot_one_sets() {
        let w = Web::unlink(1);
        let sets = one_sets(&w);
        assert_eq!(
            sets,
            vec![OneSet { edges: vec![] }, OneSet { edges: vec![0] }]
        );
        assert!(is_even_one_set(&w, &sets[0]).unwrap());
        assert_eq!(planar_lsharp_dim(&w), 3);
        assert_eq!(tait_count(&w), 3);
    }

    #[test]
    fn empty_web() {
        let w = Web::unlink(0);
        assert_eq!(tait_count(&w), 1);
        assert_eq!(signed_tait_web(&w), 1);
        assert_eq!(planar_lsharp_dim(&w), 1);
    }

    #[test]
    fn handcuffs_are_uncolorable() {
        let w = handcuffs();
        assert_eq!(tait_count(&w), 0);
        let bar = OneSet { edges: vec![2] };
        assert!(is_one_set(&w, &bar));
        assert!(!is_even_one_set(&w, &bar).unwrap());
        assert_eq!(planar_lsharp_dim(&w), 0);
    }

    #[test]
    fn non_one_set_is_an_error() {
        let w = theta();
        let all = OneSet {
            edges: vec![0, 1, 2],
        };
        assert_eq!(is_even_one_set(&w, &all), Err(TaitError::NotOneSet));
    }

    #[test]
    fn reversing_one_vertex_negates_signed_count() {
        let w = theta();
        assert_eq!(signed_tait_web(&w.with_reversed_vertex(0)), 6);
    }

    #[test]
    fn sign_is_permutation_parity() {
        assert_eq!(vertex_sign([0, 1, 2]), 1);
        assert_eq!(vertex_sign([1, 2, 0]), 1);
        assert_eq!(vertex_sign([2, 1, 0]), -1);
        assert_eq!(vertex_sign([0, 2, 1]), -1);
    }
}
