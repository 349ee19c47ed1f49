use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::complex::Complex;
use crate::moves::{apply_unchecked, enumerate_moves_with, BistellarMove};
use crate::simplex::VertexId;
use crate::{Error, Result};

use super::{replay, MoveRecord, MoveSequence, MoveTarget};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Longest certificate considered.
    pub max_depth: usize,
    /// Largest number of distinct states held by both frontiers together.
    pub max_nodes: usize,
    /// Smallest label a new vertex may take; defaults to one more than every
    /// label in either endpoint.
    pub fresh_floor: Option<VertexId>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_depth: 8, max_nodes: 2_000_000, fresh_floor: None }
    }
}

impl SearchBudget {
    pub fn with_depth(max_depth: usize) -> Self {
        SearchBudget { max_depth, ..SearchBudget::default() }
    }
}

type Parents = BTreeMap<Complex, Option<(Complex, BistellarMove)>>;

struct Side {
    parents: Parents,
    frontier: Vec<Complex>,
    depth: usize,
    /// Vertices of the opposite endpoint, candidates for subdivision labels.
    goal_vertices: BTreeSet<VertexId>,
}

impl Side {
    fn new(start: &Complex, other: &Complex) -> Side {
        let mut parents = Parents::new();
        parents.insert(start.clone(), None);
        Side {
            parents,
            frontier: alloc::vec![start.clone()],
            depth: 0,
            goal_vertices: other.vertices().into_iter().collect(),
        }
    }
}

/// Bidirectional breadth-first search between two labeled triangulations,
/// using only moves whose `A` avoids `avoid`. Returns `Ok(None)` when the
/// budget is exhausted.
pub fn flip_search(k1: &Complex, k2: &Complex, avoid: &Complex, budget: &SearchBudget) -> Result<Option<MoveSequence>> {
    for (name, k) in [("start", k1), ("target", k2)] {
        if !avoid.is_subcomplex_of(k) {
            return Err(Error::AvoidMismatch(format!("{avoid} is not contained in the {name} {k}")));
        }
    }
    if k1 == k2 {
        return Ok(Some(MoveSequence::empty(k1)));
    }
    let floor = budget.fresh_floor.unwrap_or_else(|| k1.fresh_vertex().max(k2.fresh_vertex()));
    let mut fwd = Side::new(k1, k2);
    let mut bwd = Side::new(k2, k1);

    while fwd.depth + bwd.depth < budget.max_depth {
        if fwd.frontier.is_empty() || bwd.frontier.is_empty() {
            return Ok(None);
        }
        let forward = fwd.frontier.len() <= bwd.frontier.len();
        let (this, other) = if forward { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        let met = expand(this, other, avoid, floor, forward, budget.max_nodes)?;
        match met {
            Expansion::Met(meet) => {
                let seq = assemble(k1, &fwd.parents, &bwd.parents, &meet);
                let end = replay(k1, &seq).expect("search certificate replays");
                assert_eq!(&end, k2, "search certificate ends at the target");
                debug_assert_eq!(crate::invariants::homology(k1), crate::invariants::homology(k2));
                return Ok(Some(seq));
            }
            Expansion::Exhausted => return Ok(None),
            Expansion::Continue => {}
        }
    }
    Ok(None)
}

enum Expansion {
    Met(Complex),
    Exhausted,
    Continue,
}

fn expand(
    this: &mut Side,
    other: &Side,
    avoid: &Complex,
    floor: VertexId,
    forward: bool,
    max_nodes: usize,
) -> Result<Expansion> {
    let frontier = core::mem::take(&mut this.frontier);
    for state in frontier {
        let state_floor = floor.max(state.fresh_vertex());
        let mut fresh: Vec<VertexId> = this.goal_vertices.iter().copied().filter(|&v| !state.has_vertex(v)).collect();
        fresh.push(state_floor);
        fresh.sort_unstable();
        fresh.dedup();
        for m in enumerate_moves_with(&state, avoid, &fresh)? {
            let next = apply_unchecked(&state, &m);
            if this.parents.contains_key(&next) {
                continue;
            }
            // the stored move always points from the state nearer the start
            // toward the target
            let edge = if forward { m } else { m.inverse() };
            this.parents.insert(next.clone(), Some((state.clone(), edge)));
            if other.parents.contains_key(&next) {
                return Ok(Expansion::Met(next));
            }
            if this.parents.len() + other.parents.len() > max_nodes {
                return Ok(Expansion::Exhausted);
            }
            this.frontier.push(next);
        }
    }
    this.depth += 1;
    Ok(Expansion::Continue)
}

fn assemble(start: &Complex, fwd: &Parents, bwd: &Parents, meet: &Complex) -> MoveSequence {
    let mut head = Vec::new();
    let mut cur = meet;
    while let Some(Some((parent, m))) = fwd.get(cur) {
        head.push(MoveRecord::Bistellar(m.clone()));
        cur = parent;
    }
    head.reverse();
    let mut cur = meet;
    while let Some(Some((parent, m))) = bwd.get(cur) {
        head.push(MoveRecord::Bistellar(m.clone()));
        cur = parent;
    }
    MoveSequence { start_fingerprint: start.fingerprint(), moves: head }
}
