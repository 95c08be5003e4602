//! Euler characteristics of spatial webs by crossing expansion.
//!
//! Each crossing is expanded as `chi(X) = chi(SmoothA) - chi(EdgeB)`; the dual
//! expansion uses `chi(X) = chi(SmoothB) - chi(EdgeA)`. Crossing-free leaves are
//! evaluated by the Tait count, negated once per twisted vertex.

use serde::Serialize;
use thiserror::Error;

use crate::tait::tait_count;
use crate::web_core::{Diagram, Node, NodeKind, ResolutionKind, WebError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("site darts must border one face on two different strands")]
    InvalidSite,
    #[error("tutte_check needs a crossing-free diagram")]
    HasCrossings,
    #[error(transparent)]
    Web(#[from] WebError),
}

/// Which smoothing and which edge insertion enter the crossing relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub smooth: ResolutionKind,
    pub edge: ResolutionKind,
}

impl Pairing {
    pub const STANDARD: Pairing = Pairing {
        smooth: ResolutionKind::SmoothA,
        edge: ResolutionKind::EdgeB,
    };
    pub const DUAL: Pairing = Pairing {
        smooth: ResolutionKind::SmoothB,
        edge: ResolutionKind::EdgeA,
    };
}

#[derive(Clone, Debug)]
pub struct SkeinState {
    pub pending: Vec<(Diagram, i64)>,
    pub accumulator: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SkeinResult {
    pub chi: i64,
    pub expansion_leaves: u64,
}

/// Euler characteristic of a crossing-free diagram.
pub fn planar_leaf(d: &Diagram) -> i64 {
    let sign = if d.twisted_count().is_multiple_of(2) {
        1
    } else {
        -1
    };
    sign * tait_count(&d.underlying_web()) as i64
}

pub fn euler_char_with(d: &Diagram, pairing: Pairing) -> SkeinResult {
    let mut state = SkeinState {
        pending: vec![(d.clone(), 1)],
        accumulator: 0,
    };
    let mut leaves = 0;
    while let Some((diagram, sign)) = state.pending.pop() {
        let Some(c) = diagram.nodes().iter().find(|n| n.is_crossing()) else {
            state.accumulator += sign * planar_leaf(&diagram);
            leaves += 1;
            continue;
        };
        let id = c.id.clone();
        let smooth = diagram
            .resolve_crossing(&id, pairing.smooth)
            .expect("crossing of this diagram");
        let edge = diagram
            .resolve_crossing(&id, pairing.edge)
            .expect("crossing of this diagram");
        state.pending.push((smooth, sign));
        state.pending.push((edge, -sign));
    }
    SkeinResult {
        chi: state.accumulator,
        expansion_leaves: leaves,
    }
}

pub fn euler_char(d: &Diagram) -> SkeinResult {
    euler_char_with(d, Pairing::STANDARD)
}

pub fn euler_char_dual(d: &Diagram) -> SkeinResult {
    euler_char_with(d, Pairing::DUAL)
}

/// The four local webs at a site, named as in the Tutte relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TutteReport {
    pub h: u64,
    pub i: u64,
    pub res1: u64,
    pub res0: u64,
}

impl TutteReport {
    pub fn holds(&self) -> bool {
        self.h as i64 - self.i as i64 + self.res1 as i64 - self.res0 as i64 == 0
    }
}

/// Insert a crossing between the sides leaving darts `x` and `y`, which must border one face.
pub fn insert_site_crossing(d: &Diagram, x: usize, y: usize) -> Result<Diagram, SkeinError> {
    let n = d.dart_count();
    if x >= n || y >= n || x == y || d.partner(x) == y || d.face_of(x) != d.face_of(y) {
        return Err(SkeinError::InvalidSite);
    }
    let (xp, yp) = (d.partner(x), d.partner(y));
    let mut parts = d.to_parts();
    let id = parts.fresh("site", crate::web_core::Parts::node_taken);
    let q: Vec<usize> = (0..4)
        .map(|k| {
            let name = parts.fresh(&format!("{id}.{k}"), crate::web_core::Parts::dart_taken);
            parts.add_dart(name)
        })
        .collect();
    let lx = parts.strand_label[x].clone();
    let ly = parts.strand_label[y].clone();
    parts.join(q[0], xp, lx.clone());
    parts.join(q[1], x, lx);
    parts.join(q[2], yp, ly.clone());
    parts.join(q[3], y, ly);
    parts.nodes.push(Node {
        id,
        kind: NodeKind::Crossing { over: 0 },
        darts: q,
    });
    Ok(parts.finish()?)
}

/// Check `Tait(H) - Tait(I) + Tait(Res1) - Tait(Res0) = 0` at a two-strand site.
pub fn tutte_check(d: &Diagram, x: usize, y: usize) -> Result<TutteReport, SkeinError> {
    if d.crossing_count() > 0 {
        return Err(SkeinError::HasCrossings);
    }
    let with = insert_site_crossing(d, x, y)?;
    let id = with
        .nodes()
        .iter()
        .find(|n| n.is_crossing())
        .map(|n| n.id.clone())
        .expect("inserted crossing");
    let t = |k| -> Result<u64, SkeinError> {
        Ok(tait_count(&with.resolve_crossing(&id, k)?.underlying_web()))
    };
    Ok(TutteReport {
        h: t(ResolutionKind::EdgeA)?,
        i: t(ResolutionKind::EdgeB)?,
        res1: t(ResolutionKind::SmoothA)?,
        res0: t(ResolutionKind::SmoothB)?,
    })
}
