use alloc::string::String;

use crate::digraph::Distance;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("parallel edge ({0}, {1})")]
    ParallelEdge(usize, usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("not a graph map: edge ({0}, {1}) is sent to a non-edge")]
    NotAGraphMap(usize, usize),
    #[error("maps do not share source and target")]
    MismatchedMaps,
    #[error("not an induced-subgraph inclusion: {0}")]
    NotAnInclusion(String),
    #[error("subgraph is not convex: distance from {0} to {1} is longer inside it")]
    NotConvex(usize, usize),
    #[error("edge ({0}, {1}) enters the subgraph from outside")]
    EdgeIntoSubgraph(usize, usize),
    #[error("invalid trail: {0}")]
    InvalidTrail(String),
    #[error("differentials do not compose to zero")]
    NonzeroComposition,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("span containment failure")]
    ContainmentFailure,
    #[error("map is not well defined on the subquotients")]
    NotWellDefined,
    #[error("chain is not a cycle")]
    NotACycle,
    #[error("chain does not lie in the required filtered cycle space")]
    NotInCycleSpace,
    #[error("homotopy gap {gap} exceeds the claimed bound {claim}")]
    GapExceeded { gap: Distance, claim: u32 },
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("integer reduction met a non-unit pivot")]
    NonUnitPivot,
}
