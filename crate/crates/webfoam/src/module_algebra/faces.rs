//! Bigon, triangle and square removal on crossing-free diagrams, with the matching dimension checks.

use serde::Serialize;

use crate::tait::tait_count;
use crate::web_core::{smooth, Diagram, Node, NodeKind, Parts};

use super::ModuleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceMove {
    Bigon,
    Triangle,
    Square,
}

/// Dimensions on the two sides of a face relation, computed by Tait counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceRelation {
    pub kind: FaceMove,
    pub face: usize,
    pub lhs: u64,
    pub rhs: u64,
}

impl FaceRelation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Face darts and the external dart at each face vertex, in walk order.
fn face_walk(
    d: &Diagram,
    face: usize,
    len: usize,
) -> Result<(Vec<usize>, Vec<usize>), ModuleError> {
    if d.crossing_count() > 0 {
        return Err(ModuleError::HasCrossings);
    }
    let darts = d
        .faces()
        .get(face)
        .ok_or(ModuleError::InvalidFace(face))?
        .clone();
    if darts.len() != len {
        return Err(ModuleError::InvalidFace(face));
    }
    let mut nodes: Vec<usize> = darts.iter().map(|&x| d.dart_node(x).0).collect();
    nodes.sort();
    nodes.dedup();
    if nodes.len() != len {
        return Err(ModuleError::InvalidFace(face));
    }
    let external = (0..len)
        .map(|i| {
            let incoming = d.partner(darts[(i + len - 1) % len]);
            let (n, _) = d.dart_node(darts[i]);
            d.nodes()[n]
                .darts
                .iter()
                .copied()
                .find(|&y| y != darts[i] && y != incoming)
                .expect("trivalent vertex")
        })
        .collect();
    Ok((darts, external))
}

fn without_nodes(d: &Diagram, darts: &[usize]) -> Parts {
    let mut parts = d.to_parts();
    let mut drop: Vec<usize> = darts.iter().map(|&x| d.dart_node(x).0).collect();
    drop.sort();
    drop.dedup();
    for n in drop.into_iter().rev() {
        parts.nodes.remove(n);
    }
    parts
}

/// Erase the two vertices of a bigon, joining their outer edges.
pub fn collapse_bigon(d: &Diagram, face: usize) -> Result<Diagram, ModuleError> {
    let (darts, x) = face_walk(d, face, 2)?;
    let mut parts = without_nodes(d, &darts);
    smooth(&mut parts, &x, &[(x[0], x[1])]);
    Ok(parts.finish()?)
}

/// Replace a triangle by a single vertex meeting its three outer edges.
pub fn collapse_triangle(d: &Diagram, face: usize) -> Result<Diagram, ModuleError> {
    let (darts, x) = face_walk(d, face, 3)?;
    let mut parts = without_nodes(d, &darts);
    let id = parts.fresh("tri", Parts::node_taken);
    let fresh: Vec<usize> = (0..3)
        .map(|k| {
            let name = parts.fresh(&format!("{id}.{k}"), Parts::dart_taken);
            parts.add_dart(name)
        })
        .collect();
    for i in 0..3 {
        let label = parts.strand_label[x[i]].clone();
        let p = parts.partner[x[i]];
        match x.iter().position(|&y| y == p) {
            Some(j) if j > i => parts.join(fresh[i], fresh[j], label),
            Some(_) => {}
            None => parts.join(fresh[i], p, label),
        }
    }
    // the walk keeps the face on its right, so the outer darts appear clockwise
    parts.nodes.push(Node {
        id,
        kind: NodeKind::Vertex { twisted: false },
        darts: vec![fresh[0], fresh[2], fresh[1]],
    });
    Ok(parts.finish()?)
}

/// The two ways of erasing a square and reconnecting its outer edges in pairs.
pub fn split_square(d: &Diagram, face: usize) -> Result<(Diagram, Diagram), ModuleError> {
    let (darts, x) = face_walk(d, face, 4)?;
    let mut first = without_nodes(d, &darts);
    smooth(&mut first, &x, &[(x[0], x[1]), (x[2], x[3])]);
    let mut second = without_nodes(d, &darts);
    smooth(&mut second, &x, &[(x[1], x[2]), (x[3], x[0])]);
    Ok((first.finish()?, second.finish()?))
}

fn dim(d: &Diagram) -> u64 {
    tait_count(&d.underlying_web())
}

/// The dimension relation at a face of length 2, 3 or 4.
pub fn face_relation(d: &Diagram, face: usize) -> Result<FaceRelation, ModuleError> {
    let len = d
        .faces()
        .get(face)
        .ok_or(ModuleError::InvalidFace(face))?
        .len();
    let (kind, rhs) = match len {
        2 => (FaceMove::Bigon, 2 * dim(&collapse_bigon(d, face)?)),
        3 => (FaceMove::Triangle, dim(&collapse_triangle(d, face)?)),
        4 => {
            let (a, b) = split_square(d, face)?;
            (FaceMove::Square, dim(&a) + dim(&b))
        }
        _ => return Err(ModuleError::InvalidFace(face)),
    };
    Ok(FaceRelation {
        kind,
        face,
        lhs: dim(d),
        rhs,
    })
}

/// Relations at every face where one applies.
pub fn face_relations(d: &Diagram) -> Vec<FaceRelation> {
    (0..d.faces().len())
        .filter_map(|f| face_relation(d, f).ok())
        .collect()
}
