use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Deserialize;
use serde_json::{json, Value};

use super::web::{Edge, Port, RawId, Web};
use super::WebError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    /// `twisted` reverses `o_v` relative to the plane orientation.
    Vertex { twisted: bool },
    /// `over` is 0 for the pair `[0,2]`, 1 for `[1,3]`.
    Crossing { over: u8 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub id: String,
    pub kind: NodeKind,
    /// Dart indices in counterclockwise order.
    pub darts: Vec<usize>,
}

impl Node {
    pub fn is_crossing(&self) -> bool {
        matches!(self.kind, NodeKind::Crossing { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResolutionKind {
    SmoothA,
    SmoothB,
    EdgeA,
    EdgeB,
}

impl ResolutionKind {
    pub const ALL: [ResolutionKind; 4] = [
        ResolutionKind::SmoothA,
        ResolutionKind::SmoothB,
        ResolutionKind::EdgeA,
        ResolutionKind::EdgeB,
    ];
}

/// A planar diagram: trivalent vertices and crossings with rotation data, joined by strands.
#[derive(Clone, Debug)]
pub struct Diagram {
    nodes: Vec<Node>,
    dart_names: Vec<String>,
    dart_node: Vec<(usize, usize)>,
    partner: Vec<usize>,
    strand_label: Vec<String>,
    circles: Vec<String>,
    faces: Vec<Vec<usize>>,
}

/// Mutable form used while editing a diagram; validated by [`Parts::finish`].
#[derive(Clone, Debug, Default)]
pub(crate) struct Parts {
    pub nodes: Vec<Node>,
    pub dart_names: Vec<String>,
    pub partner: Vec<usize>,
    pub strand_label: Vec<String>,
    pub circles: Vec<String>,
}

impl Parts {
    pub fn add_dart(&mut self, name: String) -> usize {
        self.dart_names.push(name);
        self.partner.push(usize::MAX);
        self.strand_label.push(String::new());
        self.dart_names.len() - 1
    }

    pub fn join(&mut self, a: usize, b: usize, label: String) {
        self.partner[a] = b;
        self.partner[b] = a;
        self.strand_label[a] = label.clone();
        self.strand_label[b] = label;
    }

    pub fn fresh(&self, base: &str, taken: impl Fn(&Parts, &str) -> bool) -> String {
        let mut s = base.to_string();
        while taken(self, &s) {
            s.push('\'');
        }
        s
    }

    pub fn node_taken(&self, id: &str) -> bool {
        self.nodes.iter().any(|n| n.id == id)
    }

    pub fn dart_taken(&self, name: &str) -> bool {
        self.dart_names.iter().any(|d| d == name)
    }

    pub fn label_taken(&self, label: &str) -> bool {
        self.strand_label.iter().any(|l| l == label) || self.circles.iter().any(|l| l == label)
    }

    /// Drop darts not owned by any node and renumber.
    fn compact(mut self) -> Parts {
        let mut used = vec![false; self.dart_names.len()];
        for n in &self.nodes {
            for &d in &n.darts {
                used[d] = true;
            }
        }
        let mut map = vec![usize::MAX; used.len()];
        let mut next = 0;
        for (i, &u) in used.iter().enumerate() {
            if u {
                map[i] = next;
                next += 1;
            }
        }
        let keep = |v: &Vec<String>| -> Vec<String> {
            v.iter()
                .enumerate()
                .filter(|(i, _)| used[*i])
                .map(|(_, s)| s.clone())
                .collect()
        };
        let dart_names = keep(&self.dart_names);
        let strand_label = keep(&self.strand_label);
        let partner = (0..used.len())
            .filter(|&i| used[i])
            .map(|i| {
                let p = self.partner[i];
                if p == usize::MAX || !used[p] {
                    usize::MAX
                } else {
                    map[p]
                }
            })
            .collect();
        for n in &mut self.nodes {
            for d in &mut n.darts {
                *d = map[*d];
            }
        }
        Parts {
            nodes: self.nodes,
            dart_names,
            partner,
            strand_label,
            circles: self.circles,
        }
    }

    pub fn finish(self) -> Result<Diagram, WebError> {
        let p = self.compact();
        let mut ids = HashSet::new();
        for n in &p.nodes {
            if !ids.insert(n.id.as_str()) {
                return Err(WebError::Duplicate(n.id.clone()));
            }
        }
        let mut names = HashSet::new();
        for d in &p.dart_names {
            if !names.insert(d.as_str()) {
                return Err(WebError::Duplicate(d.clone()));
            }
        }
        let mut dart_node = vec![(usize::MAX, 0); p.dart_names.len()];
        for (ni, n) in p.nodes.iter().enumerate() {
            let want = if n.is_crossing() { 4 } else { 3 };
            if n.darts.len() != want {
                return Err(WebError::Degree {
                    vertex: n.id.clone(),
                    degree: n.darts.len(),
                });
            }
            if let NodeKind::Crossing { over } = n.kind {
                if over > 1 {
                    return Err(WebError::OverPair(n.id.clone()));
                }
            }
            for (pos, &d) in n.darts.iter().enumerate() {
                dart_node[d] = (ni, pos);
            }
        }
        for (d, &q) in p.partner.iter().enumerate() {
            if q == usize::MAX || q == d || p.partner[q] != d {
                return Err(WebError::Unmatched(p.dart_names[d].clone()));
            }
        }
        let mut diagram = Diagram {
            nodes: p.nodes,
            dart_names: p.dart_names,
            dart_node,
            partner: p.partner,
            strand_label: p.strand_label,
            circles: p.circles,
            faces: Vec::new(),
        };
        diagram.faces = diagram.trace_faces();
        diagram.check_euler()?;
        Ok(diagram)
    }
}

impl Diagram {
    pub(crate) fn to_parts(&self) -> Parts {
        Parts {
            nodes: self.nodes.clone(),
            dart_names: self.dart_names.clone(),
            partner: self.partner.clone(),
            strand_label: self.strand_label.clone(),
            circles: self.circles.clone(),
        }
    }

    pub fn empty() -> Diagram {
        Parts::default().finish().expect("empty diagram is valid")
    }

    /// `n` disjoint unknotted circles.
    pub fn unlink(n: usize) -> Diagram {
        let parts = Parts {
            circles: (0..n).map(|i| format!("c{i}")).collect(),
            ..Parts::default()
        };
        parts.finish().expect("circles are valid")
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    pub fn dart_count(&self) -> usize {
        self.dart_names.len()
    }

    pub fn dart_name(&self, d: usize) -> &str {
        &self.dart_names[d]
    }

    pub fn dart_index(&self, name: &str) -> Option<usize> {
        self.dart_names.iter().position(|n| n == name)
    }

    /// `(node, position)` of a dart.
    pub fn dart_node(&self, d: usize) -> (usize, usize) {
        self.dart_node[d]
    }

    pub fn partner(&self, d: usize) -> usize {
        self.partner[d]
    }

    pub fn strand_label(&self, d: usize) -> &str {
        &self.strand_label[d]
    }

    /// Next dart counterclockwise at the same node.
    pub fn next_ccw(&self, d: usize) -> usize {
        let (n, pos) = self.dart_node[d];
        let darts = &self.nodes[n].darts;
        darts[(pos + 1) % darts.len()]
    }

    pub fn circles(&self) -> &[String] {
        &self.circles
    }

    pub fn vertex_count(&self) -> usize {
        self.nodes.iter().filter(|n| !n.is_crossing()).count()
    }

    pub fn crossing_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_crossing()).count()
    }

    pub fn strand_count(&self) -> usize {
        self.dart_names.len() / 2
    }

    pub fn crossing_ids(&self) -> Vec<&str> {
        self.nodes
            .iter()
            .filter(|n| n.is_crossing())
            .map(|n| n.id.as_str())
            .collect()
    }

    pub fn twisted_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| n.kind == NodeKind::Vertex { twisted: true })
            .count()
    }

    /// Face boundaries as dart cycles; the face lies to the right of each side `d -> partner(d)`.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Index of the face containing the side leaving `d`.
    pub fn face_of(&self, d: usize) -> usize {
        self.faces
            .iter()
            .position(|f| f.contains(&d))
            .expect("every dart lies on a face")
    }

    fn trace_faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.dart_names.len()];
        let mut faces = Vec::new();
        for start in 0..self.dart_names.len() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                d = self.next_ccw(self.partner[d]);
            }
            faces.push(face);
        }
        faces
    }

    /// Node components of the underlying 4-valent plane graph.
    pub fn node_components(&self) -> Vec<Vec<usize>> {
        let n = self.nodes.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let c = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = c;
            while let Some(x) = stack.pop() {
                members.push(x);
                for &d in &self.nodes[x].darts {
                    let y = self.dart_node[self.partner[d]].0;
                    if comp[y] == usize::MAX {
                        comp[y] = c;
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    fn check_euler(&self) -> Result<(), WebError> {
        let comps = self.node_components();
        let mut comp_of = vec![0; self.nodes.len()];
        for (c, members) in comps.iter().enumerate() {
            for &m in members {
                comp_of[m] = c;
            }
        }
        let mut v = vec![0i64; comps.len()];
        let mut e = vec![0i64; comps.len()];
        let mut f = vec![0i64; comps.len()];
        for (i, members) in comps.iter().enumerate() {
            v[i] = members.len() as i64;
            e[i] = members
                .iter()
                .map(|&m| self.nodes[m].darts.len() as i64)
                .sum::<i64>()
                / 2;
        }
        for face in &self.faces {
            f[comp_of[self.dart_node[face[0]].0]] += 1;
        }
        for c in 0..comps.len() {
            if v[c] - e[c] + f[c] != 2 {
                return Err(WebError::NonPlanar {
                    v: v[c],
                    e: e[c],
                    f: f[c],
                });
            }
        }
        Ok(())
    }

    /// Dart at position `pos + k` of the same crossing.
    fn rotate(&self, d: usize, k: usize) -> usize {
        let (n, pos) = self.dart_node[d];
        let darts = &self.nodes[n].darts;
        darts[(pos + k) % darts.len()]
    }

    /// Erase crossings by concatenating strands straight through them.
    pub fn underlying_web(&self) -> Web {
        let mut vertex_index = vec![usize::MAX; self.nodes.len()];
        let mut vertices = Vec::new();
        for (i, n) in self.nodes.iter().enumerate() {
            if !n.is_crossing() {
                vertex_index[i] = vertices.len();
                vertices.push(n.id.clone());
            }
        }
        let port = |d: usize| {
            let (n, pos) = self.dart_node[d];
            let twisted = self.nodes[n].kind == NodeKind::Vertex { twisted: true };
            let slot = if twisted { [0u8, 2, 1][pos] } else { pos as u8 };
            Port {
                vertex: vertex_index[n],
                slot,
            }
        };
        let mut used_ids: HashSet<String> = HashSet::new();
        let mut fresh_id = |base: &str| {
            let mut s = base.to_string();
            while used_ids.contains(&s) {
                s.push('\'');
            }
            used_ids.insert(s.clone());
            s
        };
        let mut seen = vec![false; self.dart_names.len()];
        let mut edges = Vec::new();
        for n in self.nodes.iter().filter(|n| !n.is_crossing()) {
            for &x in &n.darts {
                if seen[x] {
                    continue;
                }
                seen[x] = true;
                let mut y = self.partner[x];
                while self.nodes[self.dart_node[y].0].is_crossing() {
                    seen[y] = true;
                    let z = self.rotate(y, 2);
                    seen[z] = true;
                    y = self.partner[z];
                }
                seen[y] = true;
                edges.push(Edge {
                    id: fresh_id(&self.strand_label[x]),
                    label: None,
                    ends: Some([port(x), port(y)]),
                });
            }
        }
        for start in 0..self.dart_names.len() {
            if seen[start] {
                continue;
            }
            let mut d = start;
            loop {
                seen[d] = true;
                let z = self.rotate(d, 2);
                seen[z] = true;
                d = self.partner[z];
                if d == start {
                    break;
                }
            }
            edges.push(Edge {
                id: fresh_id(&self.strand_label[start]),
                label: None,
                ends: None,
            });
        }
        for c in &self.circles {
            edges.push(Edge {
                id: fresh_id(c),
                label: None,
                ends: None,
            });
        }
        Web::new(vertices, edges).expect("diagram vertices are trivalent")
    }

    /// Replace crossing `id` by one of its four planar resolutions.
    pub fn resolve_crossing(&self, id: &str, kind: ResolutionKind) -> Result<Diagram, WebError> {
        let ci = self
            .node_index(id)
            .filter(|&i| self.nodes[i].is_crossing())
            .ok_or_else(|| WebError::UnknownCrossing(id.to_string()))?;
        let NodeKind::Crossing { over } = self.nodes[ci].kind else {
            unreachable!()
        };
        let o = over as usize;
        let cd = &self.nodes[ci].darts;
        let p: [usize; 4] = std::array::from_fn(|i| cd[(o + i) % 4]);
        let mut parts = self.to_parts();
        parts.nodes.remove(ci);
        match kind {
            ResolutionKind::SmoothA => smooth(&mut parts, &p, &[(p[0], p[1]), (p[2], p[3])]),
            ResolutionKind::SmoothB => smooth(&mut parts, &p, &[(p[1], p[2]), (p[3], p[0])]),
            ResolutionKind::EdgeA => insert_edge(&mut parts, id, [p[0], p[1]], [p[2], p[3]]),
            ResolutionKind::EdgeB => insert_edge(&mut parts, id, [p[1], p[2]], [p[3], p[0]]),
        }
        parts.finish()
    }

    pub fn with_over_flipped(&self, id: &str) -> Result<Diagram, WebError> {
        let ci = self
            .node_index(id)
            .filter(|&i| self.nodes[i].is_crossing())
            .ok_or_else(|| WebError::UnknownCrossing(id.to_string()))?;
        let mut parts = self.to_parts();
        if let NodeKind::Crossing { over } = &mut parts.nodes[ci].kind {
            *over ^= 1;
        }
        parts.finish()
    }

    pub fn with_twist_toggled(&self, id: &str) -> Option<Diagram> {
        let vi = self
            .node_index(id)
            .filter(|&i| !self.nodes[i].is_crossing())?;
        let mut parts = self.to_parts();
        if let NodeKind::Vertex { twisted } = &mut parts.nodes[vi].kind {
            *twisted = !*twisted;
        }
        parts.finish().ok()
    }

    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let mut parts = self.to_parts();
        let shift = parts.dart_names.len();
        for (d, name) in other.dart_names.iter().enumerate() {
            let name = parts.fresh(name, Parts::dart_taken);
            let i = parts.add_dart(name);
            debug_assert_eq!(i, shift + d);
        }
        for d in 0..other.dart_names.len() {
            let q = other.partner[d];
            if d < q {
                let label = parts.fresh(&other.strand_label[d], Parts::label_taken);
                parts.join(shift + d, shift + q, label);
            }
        }
        for n in &other.nodes {
            let id = parts.fresh(&n.id, Parts::node_taken);
            parts.nodes.push(Node {
                id,
                kind: n.kind,
                darts: n.darts.iter().map(|d| d + shift).collect(),
            });
        }
        for c in &other.circles {
            let c = parts.fresh(c, Parts::label_taken);
            parts.circles.push(c);
        }
        parts.finish().expect("union of valid diagrams")
    }

    pub fn to_json(&self) -> Value {
        let darts =
            |n: &Node| -> Vec<&str> { n.darts.iter().map(|&d| self.dart_name(d)).collect() };
        let vertices: Vec<Value> = self
            .nodes
            .iter()
            .filter_map(|n| match n.kind {
                NodeKind::Vertex { twisted } => {
                    Some(json!({"id": n.id, "darts": darts(n), "twisted": twisted}))
                }
                _ => None,
            })
            .collect();
        let crossings: Vec<Value> = self
            .nodes
            .iter()
            .filter_map(|n| match n.kind {
                NodeKind::Crossing { over } => {
                    let pair = if over == 0 { [0, 2] } else { [1, 3] };
                    Some(json!({"id": n.id, "darts": darts(n), "over": pair}))
                }
                _ => None,
            })
            .collect();
        let strands: Vec<Value> = (0..self.dart_names.len())
            .filter(|&d| d < self.partner[d])
            .map(|d| {
                json!({
                    "darts": [self.dart_name(d), self.dart_name(self.partner[d])],
                    "label": self.strand_label[d],
                })
            })
            .collect();
        json!({
            "vertices": vertices,
            "crossings": crossings,
            "strands": strands,
            "circles": self.circles,
        })
    }

    pub fn serialize(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("json values serialize")
    }
}

/// Remove the darts `p`, reconnecting through the internal `joins`; closed cycles become free circles.
pub(crate) fn smooth(parts: &mut Parts, p: &[usize], joins: &[(usize, usize)]) {
    let inside = |d: usize| p.contains(&d);
    let join_of = |d: usize| {
        joins
            .iter()
            .find_map(|&(a, b)| {
                if a == d {
                    Some(b)
                } else if b == d {
                    Some(a)
                } else {
                    None
                }
            })
            .expect("crossing dart")
    };
    let mut marked: HashSet<usize> = HashSet::new();
    let mut new_pairs = Vec::new();
    for &x in p {
        let e = parts.partner[x];
        if inside(e) || new_pairs.iter().any(|&(a, b, _)| a == e || b == e) {
            continue;
        }
        let label = parts.strand_label[e].clone();
        let mut cur = x;
        loop {
            marked.insert(cur);
            let nxt = join_of(cur);
            marked.insert(nxt);
            let q = parts.partner[nxt];
            if !inside(q) {
                new_pairs.push((e, q, label));
                break;
            }
            cur = q;
        }
    }
    for &x in p {
        if marked.contains(&x) {
            continue;
        }
        let label = parts.strand_label[x].clone();
        let mut cur = x;
        while marked.insert(cur) {
            let nxt = join_of(cur);
            marked.insert(nxt);
            cur = parts.partner[nxt];
        }
        let label = parts.fresh(&label, |pp, l| pp.circles.iter().any(|c| c == l));
        parts.circles.push(label);
    }
    for (a, b, label) in new_pairs {
        parts.join(a, b, label);
    }
    for &x in p {
        parts.partner[x] = usize::MAX;
    }
}

fn insert_edge(parts: &mut Parts, id: &str, left: [usize; 2], right: [usize; 2]) {
    let m = {
        let name = parts.fresh(&format!("{id}.m"), Parts::dart_taken);
        parts.add_dart(name)
    };
    let n = {
        let name = parts.fresh(&format!("{id}.n"), Parts::dart_taken);
        parts.add_dart(name)
    };
    let label = parts.fresh(&format!("{id}.e"), Parts::label_taken);
    parts.join(m, n, label);
    for (suffix, pair, mid) in [("a", left, m), ("b", right, n)] {
        let vid = parts.fresh(&format!("{id}.{suffix}"), Parts::node_taken);
        parts.nodes.push(Node {
            id: vid,
            kind: NodeKind::Vertex { twisted: false },
            darts: vec![pair[0], pair[1], mid],
        });
    }
}

#[derive(Deserialize)]
struct RawVertex {
    id: RawId,
    darts: Vec<RawId>,
    #[serde(default)]
    twisted: bool,
}

#[derive(Deserialize)]
struct RawCrossing {
    id: RawId,
    darts: Vec<RawId>,
    over: [u8; 2],
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawStrand {
    Pair([RawId; 2]),
    Labeled {
        darts: [RawId; 2],
        #[serde(default)]
        label: Option<String>,
    },
}

#[derive(Deserialize)]
struct RawDiagram {
    #[serde(default)]
    vertices: Vec<RawVertex>,
    #[serde(default)]
    crossings: Vec<RawCrossing>,
    #[serde(default)]
    strands: Vec<RawStrand>,
    #[serde(default)]
    circles: Vec<RawId>,
}

/// Parse the JSON diagram format.
pub fn parse_diagram(text: &str) -> Result<Diagram, WebError> {
    let raw: RawDiagram =
        serde_json::from_str(text).map_err(|e| WebError::Syntax(e.to_string()))?;
    let mut parts = Parts::default();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut dart = |parts: &mut Parts, name: String| -> Result<usize, WebError> {
        if index.contains_key(&name) {
            return Err(WebError::Duplicate(name));
        }
        let i = parts.add_dart(name.clone());
        index.insert(name, i);
        Ok(i)
    };
    for v in raw.vertices {
        let darts = v
            .darts
            .into_iter()
            .map(|d| dart(&mut parts, d.into_string()))
            .collect::<Result<Vec<_>, _>>()?;
        parts.nodes.push(Node {
            id: v.id.into_string(),
            kind: NodeKind::Vertex { twisted: v.twisted },
            darts,
        });
    }
    for c in raw.crossings {
        let id = c.id.into_string();
        let over = match c.over {
            [0, 2] | [2, 0] => 0,
            [1, 3] | [3, 1] => 1,
            _ => return Err(WebError::OverPair(id)),
        };
        let darts = c
            .darts
            .into_iter()
            .map(|d| dart(&mut parts, d.into_string()))
            .collect::<Result<Vec<_>, _>>()?;
        parts.nodes.push(Node {
            id,
            kind: NodeKind::Crossing { over },
            darts,
        });
    }
    let names: BTreeMap<String, usize> = parts
        .dart_names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect();
    for (k, s) in raw.strands.into_iter().enumerate() {
        let (pair, label) = match s {
            RawStrand::Pair(p) => (p, None),
            RawStrand::Labeled { darts, label } => (darts, label),
        };
        let [a, b] = pair.map(RawId::into_string);
        let ia = *names
            .get(&a)
            .ok_or_else(|| WebError::Unmatched(a.clone()))?;
        let ib = *names
            .get(&b)
            .ok_or_else(|| WebError::Unmatched(b.clone()))?;
        if ia == ib || parts.partner[ia] != usize::MAX || parts.partner[ib] != usize::MAX {
            return Err(WebError::Unmatched(a));
        }
        parts.join(ia, ib, label.unwrap_or_else(|| format!("s{k}")));
    }
    parts.circles = raw.circles.into_iter().map(RawId::into_string).collect();
    parts.finish()
}

/// Builds diagrams from dart angles (degrees); darts are named `node@angle`.
#[derive(Clone, Debug, Default)]
pub struct DiagramBuilder {
    parts: Parts,
    index: HashMap<String, usize>,
    errors: Vec<WebError>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn node(&mut self, id: &str, angles: &[i32], kind: NodeKind) -> &mut Self {
        let mut sorted = angles.to_vec();
        sorted.sort_by_key(|a| a.rem_euclid(360));
        let darts: Vec<usize> = sorted
            .iter()
            .map(|a| {
                let name = format!("{id}@{}", a.rem_euclid(360));
                if self.index.contains_key(&name) {
                    self.errors.push(WebError::Duplicate(name.clone()));
                }
                let i = self.parts.add_dart(name.clone());
                self.index.insert(name, i);
                i
            })
            .collect();
        self.parts.nodes.push(Node {
            id: id.to_string(),
            kind,
            darts,
        });
        self
    }

    pub fn vertex(&mut self, id: &str, angles: [i32; 3]) -> &mut Self {
        self.node(id, &angles, NodeKind::Vertex { twisted: false })
    }

    pub fn twisted_vertex(&mut self, id: &str, angles: [i32; 3]) -> &mut Self {
        self.node(id, &angles, NodeKind::Vertex { twisted: true })
    }

    /// Angles must be two opposite pairs; `over` names one dart of the over-strand.
    pub fn crossing(&mut self, id: &str, angles: [i32; 4], over: i32) -> &mut Self {
        let mut sorted = angles.map(|a| a.rem_euclid(360));
        sorted.sort_unstable();
        let pos = sorted.iter().position(|&a| a == over.rem_euclid(360));
        let over = match pos {
            Some(p) => (p % 2) as u8,
            None => {
                self.errors.push(WebError::OverPair(id.to_string()));
                0
            }
        };
        self.node(id, &sorted, NodeKind::Crossing { over })
    }

    pub fn join(&mut self, a: (&str, i32), b: (&str, i32)) -> &mut Self {
        let label = format!(
            "{}@{}-{}@{}",
            a.0,
            a.1.rem_euclid(360),
            b.0,
            b.1.rem_euclid(360)
        );
        self.join_labeled(a, b, &label)
    }

    pub fn join_labeled(&mut self, a: (&str, i32), b: (&str, i32), label: &str) -> &mut Self {
        let ends = [a, b].map(|(n, ang)| {
            let name = format!("{n}@{}", ang.rem_euclid(360));
            self.index.get(&name).copied().ok_or(name)
        });
        match ends {
            [Ok(x), Ok(y)] => self.parts.join(x, y, label.to_string()),
            [Err(n), _] | [_, Err(n)] => self.errors.push(WebError::Unmatched(n)),
        }
        self
    }

    pub fn circle(&mut self, label: &str) -> &mut Self {
        self.parts.circles.push(label.to_string());
        self
    }

    pub fn build(&self) -> Result<Diagram, WebError> {
        if let Some(e) = self.errors.first() {
            return Err(e.clone());
        }
        self.parts.clone().finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kink() -> Diagram {
        let mut b = DiagramBuilder::new();
        b.crossing("x", [45, 135, 225, 315], 135)
            .join(("x", 45), ("x", 135))
            .join(("x", 225), ("x", 315));
        b.build().unwrap()
    }

    #[test]
    fn kink_resolutions() {
        let d = kink();
        let sa = d.resolve_crossing("x", ResolutionKind::SmoothA).unwrap();
        let sb = d.resolve_crossing("x", ResolutionKind::SmoothB).unwrap();
        assert_eq!(sa.circles().len(), 1);
        assert_eq!(sb.circles().len(), 2);
        let ea = d.resolve_crossing("x", ResolutionKind::EdgeA).unwrap();
        let w = ea.underlying_web();
        assert_eq!(w.vertex_count(), 2);
        assert!(!w.has_loop());
        let eb = d.resolve_crossing("x", ResolutionKind::EdgeB).unwrap();
        assert!(eb.underlying_web().has_loop());
    }

    #[test]
    fn unknown_crossing() {
        assert!(matches!(
            kink().resolve_crossing("nope", ResolutionKind::SmoothA),
            Err(WebError::UnknownCrossing(_))
        ));
    }

    #[test]
    fn adjacent_over_pair_rejected() {
        let doc = r#"{"crossings":[{"id":"x","darts":["a","b","c","d"],"over":[0,1]}],
                     "strands":[["a","b"],["c","d"]]}"#;
        assert!(matches!(parse_diagram(doc), Err(WebError::OverPair(_))));
    }

    #[test]
    fn unmatched_dart_rejected() {
        let doc = r#"{"crossings":[{"id":"x","darts":["a","b","c","d"],"over":[0,2]}],
                     "strands":[["a","b"]]}"#;
        assert!(matches!(parse_diagram(doc), Err(WebError::Unmatched(_))));
    }

    #[test]
    fn non_planar_rotation_rejected() {
        // K4 with one vertex order reversed has genus 1.
        let doc = r#"{"vertices":[
            {"id":"a","darts":["ab","ad","ac"]},
            {"id":"b","darts":["bc","bd","ba"]},
            {"id":"c","darts":["ca","cd","cb"]},
            {"id":"d","darts":["db","da","dc"]}],
          "strands":[["ab","ba"],["ac","ca"],["ad","da"],["bc","cb"],["bd","db"],["cd","dc"]]}"#;
        assert!(matches!(
            parse_diagram(doc),
            Err(WebError::NonPlanar { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let d = kink();
        let again = parse_diagram(&d.serialize()).unwrap();
        assert_eq!(again.serialize(), d.serialize());
    }
}
