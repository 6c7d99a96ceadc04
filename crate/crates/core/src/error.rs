use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("euler violation: rotation system is not a plane embedding ({0})")]
    EulerViolation(String),
    #[error("terminal {0} is not on the outer face")]
    TerminalNotOnOuterFace(VertexId),
    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("loop edge at {0}")]
    LoopEdge(VertexId),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("empty vertex set")]
    EmptySet,
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("intervals are not internally disjoint")]
    NotInternallyDisjoint,
    #[error("identical intervals")]
    IdenticalIntervals,
    #[error("one terminal side is empty")]
    EmptyTerminalSide,
    #[error("pairs cross on the boundary")]
    CrossingPairs,
    #[error("invalid demand function: {0}")]
    InvalidDemand(String),
    #[error("isolated vertex {0} is not on the bounding curve; its placement is ambiguous")]
    IsolatedInteriorVertex(VertexId),
    #[error("boundary order is not realizable by any bounding curve: {0}")]
    BoundaryOrderUnrealizable(String),
    #[error("betweenness hypothesis violated at walk position {0}")]
    HypothesisViolated(usize),
    #[error("path enumeration cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
