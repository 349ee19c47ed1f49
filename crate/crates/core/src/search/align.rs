use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::filtration::{apply_extended_bistellar, enumerate_extended_in, realize, ExtendedMove, FilteredComplex};
use crate::moves::BistellarMove;
use crate::simplex::VertexId;
use crate::{Error, Result};

use super::{flip_search, replay, MoveRecord, MoveSequence, MoveTarget, SearchBudget};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlignBudget {
    /// Budget of each per-stratum flip search.
    pub search: SearchBudget,
    /// Longest run of preparatory moves in higher strata tried before a
    /// stratum move is declared unrealizable.
    pub prep_depth: usize,
    /// Node limit of each preparation search.
    pub prep_nodes: usize,
}

impl Default for AlignBudget {
    fn default() -> Self {
        AlignBudget { search: SearchBudget::default(), prep_depth: 3, prep_nodes: 20_000 }
    }
}

/// Aligns two filtrations stratum by stratum, lowest dimension first.
///
/// For each `k` a flip path between the two copies of `M_k` is found with
/// `M_{k-1}` held fixed, and every move on it is realized as an extended move
/// through a filtered suspension of its star. When no such suspension exists,
/// a short breadth-first search over extended moves in strata above `k`
/// looks for a retriangulation that has one. Returns `Ok(None)` when any
/// search runs out of budget.
pub fn stratified_align(
    fc1: &FilteredComplex,
    fc2: &FilteredComplex,
    budget: &AlignBudget,
) -> Result<Option<MoveSequence>> {
    for (name, fc) in [("start", fc1), ("target", fc2)] {
        let report = fc.validate();
        if let Some(f) = report.findings.first() {
            return Err(Error::InvalidFiltration(format!("{name}: {f}")));
        }
    }
    let n = fc1.ambient_dim();
    if fc2.ambient_dim() != n {
        return Err(Error::InvalidFiltration(format!(
            "ambient dimensions differ: {n} and {}",
            fc2.ambient_dim()
        )));
    }
    if fc1.stratum(0) != fc2.stratum(0) {
        return Err(Error::InvalidFiltration(format!("M_0 differs: {} and {}", fc1.stratum(0), fc2.stratum(0))));
    }

    let mut state = fc1.clone();
    let mut moves = Vec::new();
    for k in 1..=n {
        if state.stratum(k) == fc2.stratum(k) {
            continue;
        }
        // new labels must be free in the whole complex, not just in M_k
        let floor = state.complex().fresh_vertex().max(fc2.complex().fresh_vertex());
        let search = SearchBudget { fresh_floor: Some(budget.search.fresh_floor.map_or(floor, |f| f.max(floor))), ..budget.search };
        let Some(path) = flip_search(state.stratum(k), fc2.stratum(k), state.stratum(k - 1), &search)? else {
            return Ok(None);
        };
        let path_max = path.moves.iter().flat_map(|m| m.inner().b.vertices().iter().copied()).max().unwrap_or(0);
        for record in path.moves {
            let MoveRecord::Bistellar(inner) = record else { unreachable!("flip search emits bistellar moves") };
            let reserve = floor.max(path_max + 1).max(state.complex().fresh_vertex());
            let Some(prep) = prepare(&state, k, &inner, reserve, budget) else { return Ok(None) };
            for m in prep {
                state = apply_extended_bistellar(&state, &m)?;
                moves.push(MoveRecord::Extended(m));
            }
            let em = realize(&state, k, &inner).expect("preparation makes the move realizable");
            state = apply_extended_bistellar(&state, &em)?;
            moves.push(MoveRecord::Extended(em));
        }
    }
    let seq = MoveSequence { start_fingerprint: fc1.fingerprint(), moves };
    let end = replay(fc1, &seq)?;
    assert_eq!(&end, fc2, "alignment certificate ends at the target");
    Ok(Some(seq))
}

/// Shortest run of extended moves in strata `k+1..=n` after which `inner`
/// is realizable in stratum `k`. New vertices are labeled from `reserve` up.
fn prepare(
    fc: &FilteredComplex,
    k: usize,
    inner: &BistellarMove,
    reserve: VertexId,
    budget: &AlignBudget,
) -> Option<Vec<ExtendedMove>> {
    if realize(fc, k, inner).is_some() {
        return Some(Vec::new());
    }
    let mut parents: BTreeMap<FilteredComplex, Option<(FilteredComplex, ExtendedMove)>> = BTreeMap::new();
    parents.insert(fc.clone(), None);
    let mut frontier = alloc::vec![fc.clone()];
    for _ in 0..budget.prep_depth {
        let mut next_frontier = Vec::new();
        for state in &frontier {
            let fresh = [state.complex().fresh_vertex().max(reserve)];
            for j in k + 1..=fc.ambient_dim() {
                for m in enumerate_extended_in(state, j, &fresh) {
                    let Ok(next) = apply_extended_bistellar(state, &m) else { continue };
                    if parents.contains_key(&next) {
                        continue;
                    }
                    parents.insert(next.clone(), Some((state.clone(), m)));
                    if realize(&next, k, inner).is_some() {
                        return Some(path_to(&parents, &next));
                    }
                    if parents.len() > budget.prep_nodes {
                        return None;
                    }
                    next_frontier.push(next);
                }
            }
        }
        frontier = next_frontier;
    }
    None
}

fn path_to(
    parents: &BTreeMap<FilteredComplex, Option<(FilteredComplex, ExtendedMove)>>,
    end: &FilteredComplex,
) -> Vec<ExtendedMove> {
    let mut out = Vec::new();
    let mut cur = end;
    while let Some(Some((parent, m))) = parents.get(cur) {
        out.push(m.clone());
        cur = parent;
    }
    out.reverse();
    out
}
