//! Move certificates and the flip-graph search engine.
//!
//! Whether two triangulations are bistellar equivalent is undecidable in
//! general, so every search here is a semi-decision procedure: it either
//! returns a certificate that has been replayed move by move, or reports that
//! the budget ran out.

mod align;
mod flip;
mod reduce;

pub use align::{stratified_align, AlignBudget};
pub use flip::{flip_search, SearchBudget};
pub use reduce::{is_simplex_boundary, reduce, ReduceBudget, Reduction};

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;
use core::hash::Hasher;

use crate::complex::Complex;
use crate::filtration::{apply_extended_bistellar, ExtendedMove, FilteredComplex};
use crate::moves::{apply_bistellar, BistellarMove};
use crate::stark::{apply_stark_extended_bistellar, StarkComplex, StarkNeighborhood};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveRecord {
    Bistellar(BistellarMove),
    Extended(ExtendedMove),
    Stark { neighborhood: StarkNeighborhood, inner: BistellarMove },
}

impl MoveRecord {
    pub fn kind(&self) -> &'static str {
        match self {
            MoveRecord::Bistellar(_) => "bistellar",
            MoveRecord::Extended(_) => "extended",
            MoveRecord::Stark { .. } => "stark",
        }
    }

    pub fn inner(&self) -> &BistellarMove {
        match self {
            MoveRecord::Bistellar(m) => m,
            MoveRecord::Extended(m) => &m.inner,
            MoveRecord::Stark { inner, .. } => inner,
        }
    }

    pub fn inverse(&self) -> MoveRecord {
        match self {
            MoveRecord::Bistellar(m) => MoveRecord::Bistellar(m.inverse()),
            MoveRecord::Extended(m) => MoveRecord::Extended(m.inverse()),
            MoveRecord::Stark { neighborhood, inner } => {
                MoveRecord::Stark { neighborhood: neighborhood.clone(), inner: inner.inverse() }
            }
        }
    }
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveRecord::Bistellar(m) => write!(f, "bistellar {m}"),
            MoveRecord::Extended(m) => write!(f, "extended {m}"),
            MoveRecord::Stark { neighborhood, inner } => {
                write!(f, "stark {inner} over {} levels", neighborhood.levels.len())
            }
        }
    }
}

/// A replayable certificate: the fingerprint of the starting object and the
/// moves to apply in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MoveSequence {
    pub start_fingerprint: u64,
    pub moves: Vec<MoveRecord>,
}

impl MoveSequence {
    pub fn empty<T: MoveTarget>(start: &T) -> Self {
        MoveSequence { start_fingerprint: start.fingerprint(), moves: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Certificate for the reverse direction, starting at `end`.
    pub fn reversed<T: MoveTarget>(&self, end: &T) -> MoveSequence {
        MoveSequence {
            start_fingerprint: end.fingerprint(),
            moves: self.moves.iter().rev().map(MoveRecord::inverse).collect(),
        }
    }
}

/// 64-bit FNV-1a hash of a canonical text.
pub fn fingerprint_text(text: &str) -> u64 {
    let mut h = fnv::FnvHasher::default();
    h.write(text.as_bytes());
    h.finish()
}

/// Objects a certificate can be replayed on.
pub trait MoveTarget: Sized {
    /// FNV-1a hash of the canonical text.
    fn fingerprint(&self) -> u64;

    /// Applies one move with full precondition checks.
    fn apply_record(&self, record: &MoveRecord) -> Result<Self>;
}

impl MoveTarget for Complex {
    fn fingerprint(&self) -> u64 {
        fingerprint_text(&alloc::format!("{self}"))
    }

    fn apply_record(&self, record: &MoveRecord) -> Result<Self> {
        match record {
            MoveRecord::Bistellar(m) => apply_bistellar(self, m),
            MoveRecord::Extended(_) => Err(Error::UnsupportedRecord("extended move on an unfiltered complex")),
            MoveRecord::Stark { .. } => Err(Error::UnsupportedRecord("stark move on an unstratified complex")),
        }
    }
}

impl MoveTarget for FilteredComplex {
    fn fingerprint(&self) -> u64 {
        fingerprint_text(&self.canonical_text())
    }

    fn apply_record(&self, record: &MoveRecord) -> Result<Self> {
        match record {
            MoveRecord::Bistellar(_) => Err(Error::UnsupportedRecord("plain bistellar move on a filtered complex")),
            MoveRecord::Extended(m) => apply_extended_bistellar(self, m),
            MoveRecord::Stark { neighborhood, inner } => {
                let x = StarkComplex::from(self.clone());
                let out = apply_stark_extended_bistellar(&x, neighborhood, inner)?;
                Ok(FilteredComplex::new(out.into_strata()))
            }
        }
    }
}

impl MoveTarget for StarkComplex {
    fn fingerprint(&self) -> u64 {
        fingerprint_text(&self.canonical_text())
    }

    fn apply_record(&self, record: &MoveRecord) -> Result<Self> {
        match record {
            MoveRecord::Bistellar(_) => Err(Error::UnsupportedRecord("plain bistellar move on a stratified space")),
            MoveRecord::Extended(m) => {
                let n = StarkNeighborhood::from_suspension(m.inner.before(), &m.susp);
                apply_stark_extended_bistellar(self, &n, &m.inner)
            }
            MoveRecord::Stark { neighborhood, inner } => apply_stark_extended_bistellar(self, neighborhood, inner),
        }
    }
}

/// Applies `seq` to `start`, failing at the first illegal step.
pub fn replay<T: MoveTarget + Clone>(start: &T, seq: &MoveSequence) -> Result<T> {
    let found = start.fingerprint();
    if found != seq.start_fingerprint {
        return Err(Error::FingerprintMismatch { expected: seq.start_fingerprint, found });
    }
    let mut state = start.clone();
    for (index, record) in seq.moves.iter().enumerate() {
        state = state
            .apply_record(record)
            .map_err(|e| Error::IllegalStep { index, source: Box::new(e) })?;
    }
    Ok(state)
}
