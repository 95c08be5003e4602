//! GF(2) modules with edge operators: presentations, known modules, edge decompositions.

pub mod decompose;
pub mod f2;
pub mod faces;
pub mod known;
mod module;
pub mod poly;
pub mod quotient;

pub use decompose::{edge_decomposition, summand, EdgeDecomposition};
pub use f2::F2Matrix;
pub use faces::{face_relation, face_relations, FaceMove, FaceRelation};
pub use known::{known_module, KNOWN_MODULES};
pub use module::{minimal_polynomial, poly_string, F2Module};
pub use poly::{parse_poly, Poly};
pub use quotient::{quotient_module, Presentation};

use thiserror::Error;

use crate::web_core::WebError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("no finite normal form found up to degree {0}")]
    DegreeBound(u32),
    #[error("operators {0} and {1} do not commute")]
    NonCommuting(String, String),
    #[error("operator {0} fails u^3 + u = 0")]
    NotCubic(String),
    #[error("unknown operator {0}")]
    UnknownOperator(String),
    #[error("operator {0} defined on both tensor factors")]
    DuplicateOperator(String),
    #[error("direct summands carry different operators")]
    OperatorMismatch,
    #[error("subspace is not invariant under {0}")]
    NotInvariant(String),
    #[error("wrong shape: {0}")]
    Shape(String),
    #[error("unknown module {0}")]
    UnknownModule(String),
    #[error("face {0} does not support this move")]
    InvalidFace(usize),
    #[error("face moves need a crossing-free diagram")]
    HasCrossings,
    #[error(transparent)]
    Web(#[from] WebError),
}
