use alloc::string::String;

use crate::simplex::{Simplex, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("simplex has no vertices")]
    EmptySimplex,
    #[error("vertex {0} appears twice in a simplex")]
    DuplicateVertex(VertexId),
    #[error("simplex {0} is not in the complex")]
    NotPresent(Simplex),
    #[error("complexes share vertex {0}")]
    SharedVertex(VertexId),
    #[error("vertex {0} is already in use")]
    VertexCollision(VertexId),
    #[error("cannot stellarly subdivide at vertex {0}")]
    VertexSubdivision(Simplex),
    #[error("vertex order is not a total order on the complex's vertices: {0}")]
    InvalidVertexOrder(String),
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("not a combinatorial ball: {0}")]
    NotABall(String),
    #[error("illegal move: {0}")]
    IllegalMove(MoveFailure),
    #[error("start fingerprint {found:016x} does not match certificate {expected:016x}")]
    FingerprintMismatch { expected: u64, found: u64 },
    #[error("step {index} of the certificate failed: {source}")]
    IllegalStep {
        index: usize,
        source: alloc::boxed::Box<Error>,
    },
    #[error("move kind not supported on this object: {0}")]
    UnsupportedRecord(&'static str),
    #[error("avoid subcomplex mismatch: {0}")]
    AvoidMismatch(String),
    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),
    #[error("invalid stark neighborhood: {0}")]
    InvalidNeighborhood(String),
}

/// Why a move could not be applied.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MoveFailure {
    #[error("{0} lies on the boundary")]
    BoundarySimplex(Simplex),
    #[error("link of {0} is not the boundary of a simplex")]
    LinkNotSimplexBoundary(Simplex),
    #[error("target simplex {0} is already present")]
    TargetPresent(Simplex),
    #[error("move target {found} does not match the link-derived simplex {expected}")]
    TargetMismatch { expected: Simplex, found: Simplex },
    #[error("{a} and {b} do not have complementary dimensions in a {n}-complex")]
    DimensionMismatch { a: Simplex, b: Simplex, n: usize },
    #[error("no moves exist in stratum {0}")]
    StratumOutOfRange(usize),
    #[error("{0} lies in a lower stratum")]
    LowerStratum(Simplex),
    #[error("suspension data has {found} levels, expected {expected}")]
    SuspensionDepth { expected: usize, found: usize },
    #[error("apex {apex} is not in open stratum {level}")]
    ApexStratum { apex: VertexId, level: usize },
    #[error("iterated suspension does not match the star of the move in stratum {level}")]
    SuspensionMismatch { level: usize },
    #[error("cone-extended cell {0} is not in the complex")]
    ConeMismatch(Simplex),
    #[error("cell {0} around the move lies outside the cone-extended neighborhood")]
    NeighborhoodTooSmall(Simplex),
}
