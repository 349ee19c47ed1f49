//! Seeded random walks in the flip graph, used to build test pairs with a
//! known certificate.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::Complex;
use crate::filtration::{apply_extended_bistellar, enumerate_extended_moves, ExtendedMove, FilteredComplex};
use crate::moves::{apply_unchecked, enumerate_moves, BistellarMove};
use crate::Result;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly chosen applicable move whose `A` avoids `avoid`, or `None` if
/// there is none.
pub fn random_move<R: Rng>(k: &Complex, avoid: &Complex, rng: &mut R) -> Result<Option<BistellarMove>> {
    let moves = enumerate_moves(k, avoid)?;
    if moves.is_empty() {
        return Ok(None);
    }
    Ok(Some(moves[rng.gen_range(0..moves.len())].clone()))
}

/// Up to `steps` random moves from `k`; stops early if no move applies.
pub fn random_walk<R: Rng>(
    k: &Complex,
    avoid: &Complex,
    steps: usize,
    rng: &mut R,
) -> Result<(Complex, Vec<BistellarMove>)> {
    let mut state = k.clone();
    let mut moves = Vec::with_capacity(steps);
    for _ in 0..steps {
        let Some(m) = random_move(&state, avoid, rng)? else { break };
        state = apply_unchecked(&state, &m);
        moves.push(m);
    }
    Ok((state, moves))
}

/// Up to `steps` random extended moves, chosen uniformly among all strata.
pub fn random_extended_walk<R: Rng>(
    fc: &FilteredComplex,
    steps: usize,
    rng: &mut R,
) -> Result<(FilteredComplex, Vec<ExtendedMove>)> {
    let mut state = fc.clone();
    let mut moves = Vec::with_capacity(steps);
    for _ in 0..steps {
        let options = enumerate_extended_moves(&state, &[]);
        if options.is_empty() {
            break;
        }
        let m = options[rng.gen_range(0..options.len())].clone();
        state = apply_extended_bistellar(&state, &m)?;
        moves.push(m);
    }
    Ok((state, moves))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo;
    use crate::invariants::homology;
    use crate::moves::apply_bistellar;

    #[test]
    fn walks_are_reproducible() {
        let k = demo::sphere_boundary(3);
        let a = random_walk(&k, &Complex::empty(), 10, &mut seeded_rng(7)).unwrap();
        let b = random_walk(&k, &Complex::empty(), 10, &mut seeded_rng(7)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.1.len(), 10);
        let mut state = k.clone();
        for m in &a.1 {
            state = apply_bistellar(&state, m).unwrap();
        }
        assert_eq!(state, a.0);
        assert_eq!(homology(&state), homology(&k));
    }

    #[test]
    fn extended_walk_keeps_the_filtration_valid() {
        let fc = demo::filtered_s2_equator();
        let (end, moves) = random_extended_walk(&fc, 6, &mut seeded_rng(3)).unwrap();
        assert_eq!(moves.len(), 6);
        assert!(end.validate().is_valid());
    }
}
