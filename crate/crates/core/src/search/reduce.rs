use alloc::collections::VecDeque;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::Complex;
use crate::invariants::f_vector;
use crate::moves::{apply_unchecked, enumerate_moves, BistellarMove};

use super::{MoveRecord, MoveSequence, MoveTarget};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReduceBudget {
    pub max_moves: usize,
    /// How far the f-vector sum may rise above its starting value while
    /// escaping a local minimum.
    pub relaxation: usize,
    pub seed: u64,
}

impl Default for ReduceBudget {
    fn default() -> Self {
        ReduceBudget { max_moves: 4000, relaxation: 24, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub complex: Complex,
    pub certificate: MoveSequence,
    /// Largest f-vector sum seen along the way.
    pub high_water: usize,
}

impl Reduction {
    /// True when the result is the boundary of a simplex, which certifies the
    /// input as a PL sphere.
    pub fn certifies_sphere(&self) -> bool {
        is_simplex_boundary(&self.complex)
    }
}

/// Boundary of an `(n+1)`-simplex up to relabeling: a pure `n`-complex with
/// `n + 2` vertices and `n + 2` facets.
pub fn is_simplex_boundary(k: &Complex) -> bool {
    match k.dim() {
        Some(n) => k.is_pure() && k.num_vertices() == n + 2 && k.num_facets() == n + 2,
        None => false,
    }
}

fn f_sum(k: &Complex) -> usize {
    f_vector(k).iter().sum()
}

/// Moves `K` toward the boundary of a simplex. Moves with `2 dim(A) < n`
/// shrink the f-vector and are taken greedily, smallest `dim(A)` first; when
/// none applies, a random move with `2 dim(A) >= n` that creates no vertex is
/// taken instead, provided the f-vector sum stays within `relaxation` of the
/// starting value. Inverses of recent moves are not retaken.
pub fn reduce(k: &Complex, budget: &ReduceBudget) -> Reduction {
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut state = k.clone();
    let mut moves = Vec::new();
    let start = f_sum(k);
    let ceiling = start + budget.relaxation;
    let mut high_water = start;
    let mut tabu: VecDeque<BistellarMove> = VecDeque::new();
    let Some(n) = k.dim() else {
        return Reduction { complex: state, certificate: MoveSequence::empty(k), high_water };
    };

    while moves.len() < budget.max_moves && !is_simplex_boundary(&state) {
        let Ok(all) = enumerate_moves(&state, &Complex::empty()) else { break };
        let shrinking = all.iter().filter(|m| 2 * m.k() < n).min_by_key(|m| m.k());
        let chosen = match shrinking {
            Some(m) => m.clone(),
            None => {
                let current = f_sum(&state);
                let options: Vec<&BistellarMove> = all
                    .iter()
                    .filter(|m| m.k() < n && !tabu.contains(m))
                    .filter(|m| current + growth(m, n) <= ceiling)
                    .collect();
                if options.is_empty() {
                    break;
                }
                options[rng.gen_range(0..options.len())].clone()
            }
        };
        state = apply_unchecked(&state, &chosen);
        high_water = high_water.max(f_sum(&state));
        tabu.push_back(chosen.inverse());
        if tabu.len() > 8 {
            tabu.pop_front();
        }
        moves.push(MoveRecord::Bistellar(chosen));
    }
    let certificate = MoveSequence { start_fingerprint: k.fingerprint(), moves };
    Reduction { complex: state, certificate, high_water }
}

/// Increase of the f-vector sum under `m`: the `2^|B| - 1` simplices of
/// `A * ∂B` containing `A` are replaced by the `2^|A| - 1` simplices of
/// `∂A * B` containing `B`.
fn growth(m: &BistellarMove, n: usize) -> usize {
    debug_assert_eq!(m.n(), n);
    let added = (1usize << m.a.len()) - 1;
    let removed = (1usize << m.b.len()) - 1;
    added.saturating_sub(removed)
}
