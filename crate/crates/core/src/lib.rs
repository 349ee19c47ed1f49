//! Combinatorial PL-topology kernel.
//!
//! Abstract simplicial complexes with the classical constructions (star, link,
//! join, suspension, stellar subdivision, product with an interval), Pachner
//! bistellar moves, extended bistellar moves on filtered manifolds, stark
//! neighborhood moves on stratified spaces, exact integral homology, and a
//! flip-graph search engine that emits replayable move certificates.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command
//! line live in the companion `pachner` crate.
#![no_std]

extern crate alloc;

pub mod census;
pub mod complex;
pub mod demo;
mod error;
pub mod filtration;
pub mod invariants;
pub mod manifold;
pub mod moves;
pub mod search;
pub mod simplex;
pub mod stark;
pub mod walk;

pub use complex::Complex;
pub use error::{Error, MoveFailure};
pub use filtration::{ExtendedMove, FilteredComplex, SuspensionData};
pub use manifold::{check_combinatorial_manifold, ManifoldReport, Verdict};
pub use moves::BistellarMove;
pub use search::{MoveRecord, MoveSequence};
pub use simplex::{Simplex, VertexId};
pub use stark::{ConeStep, StarkComplex, StarkNeighborhood};

pub type Result<T, E = Error> = core::result::Result<T, E>;
