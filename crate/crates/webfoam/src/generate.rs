//! Plane trivalent maps by exhaustive growth, and random spatial diagrams.
//!
//! A [`PlaneMap`] on `n` vertices has darts `3v, 3v+1, 3v+2` at vertex `v` in counterclockwise
//! order, so only the edge pairing is stored. Every connected map arises from the theta or the
//! dumbbell by repeatedly adding a chord inside a face or a lollipop on a side.

use std::collections::BTreeSet;

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::skein::insert_site_crossing;
use crate::web_core::{Diagram, DiagramBuilder};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneMap {
    partner: Vec<usize>,
}

fn rot(d: usize) -> usize {
    3 * (d / 3) + (d % 3 + 1) % 3
}

impl PlaneMap {
    pub fn theta() -> Self {
        PlaneMap {
            partner: vec![5, 4, 3, 2, 1, 0],
        }
    }

    /// Two loops joined by a bridge.
    pub fn dumbbell() -> Self {
        PlaneMap {
            partner: vec![3, 2, 1, 0, 5, 4],
        }
    }

    /// A fixed-point-free involution on `3n` darts; planarity is not checked.
    pub fn from_partner(partner: Vec<usize>) -> Option<Self> {
        let n = partner.len();
        let ok = n.is_multiple_of(3)
            && (0..n).all(|d| partner[d] < n && partner[d] != d && partner[partner[d]] == d);
        ok.then_some(PlaneMap { partner })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.partner.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(d) = stack.pop() {
            for e in [self.partner[d], rot(d)] {
                if !seen[e] {
                    seen[e] = true;
                    stack.push(e);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connected with `V − E + F = 2`.
    pub fn is_spherical(&self) -> bool {
        let v = self.vertex_count() as i64;
        let e = (self.partner.len() / 2) as i64;
        self.is_connected() && v - e + self.faces().len() as i64 == 2
    }

    pub fn vertex_count(&self) -> usize {
        self.partner.len() / 3
    }

    pub fn partner(&self, d: usize) -> usize {
        self.partner[d]
    }

    pub fn has_loop(&self) -> bool {
        (0..self.partner.len()).any(|d| d / 3 == self.partner[d] / 3)
    }

    /// Dart cycles under `d ↦ rot(partner(d))`, matching [`Diagram::faces`].
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.partner.len()];
        let mut out = Vec::new();
        for s in 0..self.partner.len() {
            let mut f = Vec::new();
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                f.push(d);
                d = rot(self.partner[d]);
            }
            if !f.is_empty() {
                out.push(f);
            }
        }
        out
    }

    /// Subdivide the side leaving `d`; returns the new dart pointing into the face on its right.
    fn subdivide(&mut self, d: usize) -> usize {
        let p = self.partner[d];
        let base = self.partner.len();
        self.partner.extend([d, usize::MAX, p]);
        self.partner[d] = base;
        self.partner[p] = base + 2;
        base + 1
    }

    /// Join points on the sides leaving `d1` and `d2`; both sides must lie on one face.
    pub fn with_chord(&self, d1: usize, d2: usize) -> Self {
        let mut m = self.clone();
        let x = m.subdivide(d1);
        // on a shared side the second point lands after the first
        let second = if d1 == d2 { x + 1 } else { d2 };
        let y = m.subdivide(second);
        m.partner[x] = y;
        m.partner[y] = x;
        m
    }

    /// Attach a bridge ending in a loop to the side leaving `d`.
    pub fn with_lollipop(&self, d: usize) -> Self {
        let mut m = self.clone();
        let x = m.subdivide(d);
        let w = m.partner.len();
        m.partner.extend([x, w + 2, w + 1]);
        m.partner[x] = w;
        m
    }

    /// Minimal breadth-first relabelling over all root darts.
    pub fn canonical(&self) -> Vec<usize> {
        let n = self.partner.len();
        let mut best: Option<Vec<usize>> = None;
        for root in 0..n {
            let mut label = vec![usize::MAX; n];
            let mut order = vec![root];
            label[root] = 0;
            let mut i = 0;
            while i < order.len() {
                let d = order[i];
                for e in [self.partner[d], rot(d)] {
                    if label[e] == usize::MAX {
                        label[e] = order.len();
                        order.push(e);
                    }
                }
                i += 1;
            }
            let code: Vec<usize> = order
                .iter()
                .flat_map(|&d| [label[self.partner[d]], label[rot(d)]])
                .collect();
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        best.unwrap_or_default()
    }

    /// All maps one growth step larger.
    pub fn children(&self) -> Vec<PlaneMap> {
        let mut out = Vec::new();
        for f in self.faces() {
            for (i, &a) in f.iter().enumerate() {
                for &b in &f[i..] {
                    out.push(self.with_chord(a, b));
                }
                out.push(self.with_lollipop(a));
            }
        }
        out
    }

    pub fn to_diagram(&self) -> Diagram {
        let mut b = DiagramBuilder::new();
        let ids: Vec<String> = (0..self.vertex_count()).map(|v| format!("v{v}")).collect();
        for id in &ids {
            b.vertex(id, [0, 120, 240]);
        }
        let end = |d: usize| (ids[d / 3].as_str(), 120 * (d % 3) as i32);
        for d in 0..self.partner.len() {
            let p = self.partner[d];
            if d < p {
                b.join_labeled(end(d), end(p), &format!("e{}", d));
            }
        }
        b.build().expect("plane maps are planar")
    }
}

/// Connected plane trivalent maps with up to `max_vertices` vertices, grouped by vertex count.
///
/// Loops are kept at every stage since loop-free maps can grow out of maps with loops.
pub fn plane_maps(max_vertices: usize) -> Vec<Vec<PlaneMap>> {
    let mut levels: Vec<Vec<PlaneMap>> = Vec::new();
    let mut current = vec![PlaneMap::theta(), PlaneMap::dumbbell()];
    while !current.is_empty() && current[0].vertex_count() <= max_vertices {
        let mut seen = BTreeSet::new();
        current.retain(|m| seen.insert(m.canonical()));
        let next: Vec<PlaneMap> = current.iter().flat_map(|m| m.children()).collect();
        levels.push(std::mem::replace(&mut current, next));
    }
    levels
}

/// Loop-free connected plane trivalent webs with up to `max_vertices` vertices.
pub fn loop_free_plane_webs(max_vertices: usize) -> Vec<PlaneMap> {
    plane_maps(max_vertices)
        .into_iter()
        .flatten()
        .filter(|m| !m.has_loop())
        .collect()
}

/// A connected plane map grown by random steps up to about `vertices` vertices.
pub fn random_plane_map<R: Rng>(vertices: usize, rng: &mut R) -> PlaneMap {
    let mut m = if rng.random_bool(0.8) {
        PlaneMap::theta()
    } else {
        PlaneMap::dumbbell()
    };
    while m.vertex_count() + 2 <= vertices.max(2) {
        let faces = m.faces();
        let f = faces.choose(rng).expect("maps have faces");
        let a = *f.choose(rng).unwrap();
        m = if rng.random_bool(0.1) {
            m.with_lollipop(a)
        } else {
            m.with_chord(a, *f.choose(rng).unwrap())
        };
    }
    m
}

#[derive(Clone, Copy, Debug)]
pub struct SpatialParams {
    pub max_vertices: usize,
    pub max_crossings: usize,
    /// Chance of marking each vertex as twisted.
    pub twist_probability: f64,
}

impl Default for SpatialParams {
    fn default() -> Self {
        SpatialParams {
            max_vertices: 6,
            max_crossings: 10,
            twist_probability: 0.2,
        }
    }
}

/// Random plane map, then crossings inserted at random sites with random over-strands.
pub fn random_spatial<R: Rng>(params: SpatialParams, rng: &mut R) -> Diagram {
    let vertices = 2 * rng.random_range(1..=params.max_vertices.max(2) / 2);
    let mut d = random_plane_map(vertices, rng).to_diagram();
    let ids: Vec<String> = d.nodes().iter().map(|n| n.id.clone()).collect();
    for id in ids {
        if rng.random_bool(params.twist_probability) {
            d = d.with_twist_toggled(&id).expect("vertex of this diagram");
        }
    }
    let target = rng.random_range(0..=params.max_crossings);
    while d.crossing_count() < target {
        let faces = d.faces();
        let Some(f) = faces.choose(rng) else { break };
        let (x, y) = (*f.choose(rng).unwrap(), *f.choose(rng).unwrap());
        let Ok(next) = insert_site_crossing(&d, x, y) else {
            continue;
        };
        d = next;
        if rng.random_bool(0.5) {
            let id = d
                .nodes()
                .iter()
                .rev()
                .find(|n| n.is_crossing())
                .map(|n| n.id.clone())
                .expect("inserted crossing");
            d = d.with_over_flipped(&id).expect("crossing of this diagram");
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn small_counts() {
        let levels = plane_maps(4);
        assert_eq!(levels.len(), 2);
        let loop_free: Vec<usize> = levels
            .iter()
            .map(|l| l.iter().filter(|m| !m.has_loop()).count())
            .collect();
        // theta; K4 and the square with two opposite edges doubled
        assert_eq!(loop_free, vec![1, 2]);
    }

    #[test]
    fn maps_build_as_planar_diagrams() {
        for m in plane_maps(6).into_iter().flatten() {
            let d = m.to_diagram();
            assert_eq!(d.vertex_count(), m.vertex_count());
            assert_eq!(d.faces().len(), m.faces().len());
        }
    }

    #[test]
    fn canonical_is_relabelling_invariant() {
        let m = PlaneMap::theta().with_chord(0, 5);
        // relabel vertices by swapping 0 and 1
        let n = m.partner.len();
        let swap = |d: usize| match d / 3 {
            0 => d + 3,
            1 => d - 3,
            _ => d,
        };
        let mut q = vec![0; n];
        for d in 0..n {
            q[swap(d)] = swap(m.partner[d]);
        }
        assert_eq!(PlaneMap { partner: q }.canonical(), m.canonical());
    }

    #[test]
    fn random_spatial_respects_bounds() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..20 {
            let d = random_spatial(SpatialParams::default(), &mut rng);
            assert!(d.crossing_count() <= 10);
            assert!(d.vertex_count() <= 6);
        }
    }
}
