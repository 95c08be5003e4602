//! Webs, planar diagrams, parsing and crossing resolution.

mod diagram;
mod web;

pub use diagram::{parse_diagram, Diagram, DiagramBuilder, Node, NodeKind, ResolutionKind};
pub use web::{parse_web, Edge, Port, Web};

pub(crate) use diagram::{smooth, Parts};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WebError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    Degree { vertex: String, degree: usize },
    #[error("slot {slot} at vertex {vertex} is invalid or reused")]
    Slot { vertex: String, slot: usize },
    #[error("dangling dart on edge {0}")]
    Dangling(String),
    #[error("duplicate id {0}")]
    Duplicate(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unmatched dart {0}")]
    Unmatched(String),
    #[error("crossing {0}: over-pair must be [0,2] or [1,3]")]
    OverPair(String),
    #[error("non-planar face structure: V - E + F = {v} - {e} + {f}")]
    NonPlanar { v: i64, e: i64, f: i64 },
    #[error("unknown crossing {0}")]
    UnknownCrossing(String),
}
