use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::WebError;

/// A vertex slot: the `slot`-th dart of `vertex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Port {
    pub vertex: usize,
    pub slot: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub label: Option<String>,
    /// `None` for a vertexless circle.
    pub ends: Option<[Port; 2]>,
}

impl Edge {
    pub fn is_circle(&self) -> bool {
        self.ends.is_none()
    }

    pub fn is_loop(&self) -> bool {
        matches!(self.ends, Some([a, b]) if a.vertex == b.vertex)
    }
}

/// An abstract trivalent graph. Loops, multi-edges and vertexless circles are all allowed.
///
/// Darts are numbered `2 * edge + end` for non-circle edges.
/// The slot order at a vertex carries its cyclic orientation `o_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Web {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    slots: Vec<[(usize, u8); 3]>,
}

impl Web {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Web, WebError> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(WebError::Duplicate(v.clone()));
            }
        }
        let mut seen = HashMap::new();
        for e in &edges {
            if seen.insert(e.id.as_str(), ()).is_some() {
                return Err(WebError::Duplicate(e.id.clone()));
            }
        }
        let mut degree = vec![0usize; vertices.len()];
        for e in &edges {
            if let Some(ends) = e.ends {
                for p in ends {
                    if p.vertex >= vertices.len() {
                        return Err(WebError::UnknownVertex(p.vertex.to_string()));
                    }
                    degree[p.vertex] += 1;
                }
            }
        }
        if let Some(v) = degree.iter().position(|&d| d != 3) {
            return Err(WebError::Degree {
                vertex: vertices[v].clone(),
                degree: degree[v],
            });
        }
        let mut slots = vec![[(usize::MAX, 0u8); 3]; vertices.len()];
        for (ei, e) in edges.iter().enumerate() {
            if let Some(ends) = e.ends {
                for (end, p) in ends.iter().enumerate() {
                    let s = p.slot as usize;
                    if s >= 3 || slots[p.vertex][s].0 != usize::MAX {
                        return Err(WebError::Slot {
                            vertex: vertices[p.vertex].clone(),
                            slot: p.slot as usize,
                        });
                    }
                    slots[p.vertex][s] = (ei, end as u8);
                }
            }
        }
        Ok(Web {
            vertices,
            edges,
            slots,
        })
    }

    /// `n` vertexless circles.
    pub fn unlink(n: usize) -> Web {
        let edges = (0..n)
            .map(|i| Edge {
                id: format!("c{i}"),
                label: None,
                ends: None,
            })
            .collect();
        Web::new(Vec::new(), edges).expect("circles are always valid")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn circle_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_circle()).count()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    /// `(edge, end)` at each slot of vertex `v`.
    pub fn slots(&self, v: usize) -> [(usize, u8); 3] {
        self.slots[v]
    }

    /// Edge at each slot of `v`, in `o_v` order.
    pub fn vertex_edges(&self, v: usize) -> [usize; 3] {
        self.slots[v].map(|(e, _)| e)
    }

    pub fn darts(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| !self.edges[e].is_circle())
            .flat_map(|e| [2 * e, 2 * e + 1])
            .collect()
    }

    pub fn dart_edge(&self, dart: usize) -> usize {
        dart / 2
    }

    pub fn dart_vertex(&self, dart: usize) -> Option<usize> {
        self.edges[dart / 2].ends.map(|ends| ends[dart % 2].vertex)
    }

    /// Connected components as lists of edge indices; each circle is its own component.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            if let Some([a, b]) = e.ends {
                let (ra, rb) = (find(&mut parent, a.vertex), find(&mut parent, b.vertex));
                parent[ra] = rb;
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            match e.ends {
                None => out.push(vec![i]),
                Some([a, _]) => groups
                    .entry(find(&mut parent, a.vertex))
                    .or_default()
                    .push(i),
            }
        }
        out.extend(groups.into_values());
        out
    }

    pub fn disjoint_union(&self, other: &Web) -> Web {
        let shift = self.vertices.len();
        let clash = |id: &str| {
            self.vertices.iter().any(|v| v == id) || self.edges.iter().any(|e| e.id == id)
        };
        let rename = |id: &String| {
            if clash(id) {
                format!("{id}'")
            } else {
                id.clone()
            }
        };
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().map(rename));
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            id: rename(&e.id),
            label: e.label.clone(),
            ends: e.ends.map(|ends| {
                ends.map(|p| Port {
                    vertex: p.vertex + shift,
                    slot: p.slot,
                })
            }),
        }));
        Web::new(vertices, edges).expect("union of valid webs")
    }

    /// Same graph with the cyclic order at `v` reversed.
    pub fn with_reversed_vertex(&self, v: usize) -> Web {
        let mut edges = self.edges.clone();
        for e in &mut edges {
            if let Some(ends) = e.ends.as_mut() {
                for p in ends.iter_mut() {
                    if p.vertex == v && p.slot > 0 {
                        p.slot = 3 - p.slot;
                    }
                }
            }
        }
        Web::new(self.vertices.clone(), edges).expect("slot swap keeps validity")
    }

    pub fn to_json(&self) -> Value {
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| {
                let mut m = serde_json::Map::new();
                m.insert("id".into(), Value::String(e.id.clone()));
                match e.ends {
                    None => {
                        m.insert("circle".into(), Value::Bool(true));
                    }
                    Some(ends) => {
                        let ends: Vec<Value> = ends
                            .iter()
                            .map(|p| serde_json::json!([self.vertices[p.vertex], p.slot]))
                            .collect();
                        m.insert("ends".into(), Value::Array(ends));
                    }
                }
                if let Some(l) = &e.label {
                    m.insert("label".into(), Value::String(l.clone()));
                }
                Value::Object(m)
            })
            .collect();
        serde_json::json!({ "vertices": self.vertices, "edges": edges })
    }

    pub fn serialize(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("json values serialize")
    }
}

#[derive(Deserialize, Serialize, Clone, Debug)]
#[serde(untagged)]
pub(crate) enum RawId {
    Num(i64),
    Str(String),
}

impl RawId {
    pub(crate) fn into_string(self) -> String {
        match self {
            RawId::Num(n) => n.to_string(),
            RawId::Str(s) => s,
        }
    }
}

#[derive(Deserialize)]
struct RawEdge {
    id: RawId,
    #[serde(default)]
    ends: Option<Vec<(RawId, u8)>>,
    #[serde(default)]
    circle: bool,
    #[serde(default)]
    label: Option<String>,
}

#[derive(Deserialize)]
struct RawWeb {
    vertices: Vec<RawId>,
    edges: Vec<RawEdge>,
}

/// Parse the JSON web format.
pub fn parse_web(text: &str) -> Result<Web, WebError> {
    let raw: RawWeb = serde_json::from_str(text).map_err(|e| WebError::Syntax(e.to_string()))?;
    let vertices: Vec<String> = raw.vertices.into_iter().map(RawId::into_string).collect();
    let index: HashMap<&str, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    let mut edges = Vec::with_capacity(raw.edges.len());
    for e in raw.edges {
        let id = e.id.into_string();
        let ends = match (e.circle, e.ends) {
            (true, None) => None,
            (true, Some(_)) => return Err(WebError::Syntax(format!("circle edge {id} has ends"))),
            (false, None) => return Err(WebError::Dangling(id)),
            (false, Some(ends)) => {
                if ends.len() != 2 {
                    return Err(WebError::Dangling(id));
                }
                let mut ports = [Port { vertex: 0, slot: 0 }; 2];
                for (k, (v, slot)) in ends.into_iter().enumerate() {
                    let v = v.into_string();
                    let vi = *index.get(v.as_str()).ok_or(WebError::UnknownVertex(v))?;
                    ports[k] = Port { vertex: vi, slot };
                }
                Some(ports)
            }
        };
        edges.push(Edge {
            id,
            label: e.label,
            ends,
        });
    }
    Web::new(vertices, edges)
}
