//! Counting move schemas.
//!
//! An extended-move schema on a filtered `n`-manifold is a stratum dimension
//! `k`, the index `j = dim(A)` of the inner bistellar move in `M_k`, and the
//! suspension depth `n - k`. Inverting a move exchanges `j` and `k - j`, so
//! stratum `k` contributes `floor(k/2) + 1` inverse pairs.
//!
//! For stark neighborhoods a schema also records the neighborhood type: the
//! dimensions of the cone links at each level.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::stark::{StarkComplex, StarkNeighborhood};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoveSchema {
    pub k: usize,
    pub j: usize,
    pub depth: usize,
}

impl MoveSchema {
    pub fn inverse(self) -> MoveSchema {
        MoveSchema { j: self.k - self.j, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaCensus {
    pub n: usize,
    pub schemas: Vec<MoveSchema>,
    /// Each pair lists the schema with the smaller `j` first; a self-inverse
    /// schema is paired with itself.
    pub pairs: Vec<(MoveSchema, MoveSchema)>,
    /// `n^2 - n`, reported for comparison only.
    pub quoted_figure: usize,
    /// `n - 1`, the number of proper nonempty strata of a full flag.
    pub proper_strata: usize,
}

impl SchemaCensus {
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}

/// Census over every stratum `k = 1..=n`.
pub fn count_move_schemas(n: usize) -> SchemaCensus {
    let strata: Vec<usize> = (1..=n).collect();
    count_move_schemas_for(n, &strata)
}

/// Census over the nonempty strata listed in `strata` (dimensions in
/// `1..=n`; dimension 0 carries no moves and is ignored).
pub fn count_move_schemas_for(n: usize, strata: &[usize]) -> SchemaCensus {
    let present: BTreeSet<usize> = strata.iter().copied().filter(|&k| (1..=n).contains(&k)).collect();
    let mut schemas = Vec::new();
    let mut pairs = Vec::new();
    for &k in &present {
        for j in 0..=k {
            let s = MoveSchema { k, j, depth: n - k };
            schemas.push(s);
            if j <= k - j {
                pairs.push((s, s.inverse()));
            }
        }
    }
    SchemaCensus { n, schemas, pairs, quoted_figure: n * n - n, proper_strata: n.saturating_sub(1) }
}

/// Shape of a stark neighborhood: the base dimension and, per level, the
/// sorted dimensions of the links `L(v)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NeighborhoodType {
    pub k: usize,
    pub levels: Vec<Vec<usize>>,
}

impl NeighborhoodType {
    pub fn of(n: &StarkNeighborhood, k: usize) -> NeighborhoodType {
        let dims = n.link_dims(k);
        let levels = n
            .levels
            .iter()
            .map(|level| {
                let mut d: Vec<usize> = level.iter().map(|s| dims[&s.apex]).collect();
                d.sort_unstable();
                d
            })
            .collect();
        NeighborhoodType { k, levels }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarkCensus {
    pub types: BTreeSet<NeighborhoodType>,
    /// `floor(k/2) + 1` inverse pairs per neighborhood type.
    pub pairs: usize,
}

fn census_of(types: BTreeSet<NeighborhoodType>) -> StarkCensus {
    let pairs = types.iter().map(|t| t.k / 2 + 1).sum();
    StarkCensus { types, pairs }
}

/// Neighborhood types needed to move every listed neighborhood of `x`, plus
/// the top stratum, whose moves need no neighborhood.
pub fn stark_census(x: &StarkComplex, neighborhoods: &[StarkNeighborhood]) -> StarkCensus {
    census_of(stark_types(x, neighborhoods))
}

fn stark_types(x: &StarkComplex, neighborhoods: &[StarkNeighborhood]) -> BTreeSet<NeighborhoodType> {
    let n = x.ambient_dim();
    let mut types: BTreeSet<NeighborhoodType> =
        neighborhoods.iter().filter_map(|nb| Some(NeighborhoodType::of(nb, nb.k(n)?))).collect();
    if n >= 1 {
        types.insert(NeighborhoodType { k: n, levels: Vec::new() });
    }
    types
}

/// Census of a family of spaces taken together: the move set that handles
/// every member at once.
pub fn family_census<'a, I>(family: I) -> StarkCensus
where
    I: IntoIterator<Item = (&'a StarkComplex, &'a [StarkNeighborhood])>,
{
    let mut types = BTreeSet::new();
    for (x, nbhds) in family {
        types.extend(stark_types(x, nbhds));
    }
    census_of(types)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo;
    use alloc::vec;

    #[test]
    fn small_dimensions() {
        assert_eq!(count_move_schemas(1).pair_count(), 1);
        assert_eq!(count_move_schemas(2).pair_count(), 3);
        let three = count_move_schemas(3);
        assert_eq!(three.pair_count(), 5);
        assert_eq!(three.quoted_figure, 6);
        assert_eq!(three.schemas.len(), 2 + 3 + 4);
    }

    #[test]
    fn knot_pattern() {
        let c = count_move_schemas_for(3, &[0, 1, 2, 3]);
        assert_eq!(c.pair_count(), 5);
        let c = count_move_schemas_for(3, &[1, 3]);
        assert_eq!(c.pair_count(), 3);
        assert!(c.pairs.iter().all(|(a, b)| a.inverse() == *b));
    }

    #[test]
    fn join_fan_types() {
        let d = demo::join_fan(3);
        let census = stark_census(&d.space, &d.neighborhoods);
        assert!(census.types.contains(&NeighborhoodType { k: 1, levels: vec![vec![1, 1, 1]] }));
        assert!(census.types.contains(&NeighborhoodType { k: 1, levels: vec![vec![1]] }));
        assert_eq!(census.types.len(), 3);
        let knot = demo::knot_model();
        let census = stark_census(&knot.space, &knot.neighborhoods);
        assert!(census.types.contains(&NeighborhoodType { k: 1, levels: vec![vec![1, 1], vec![2, 2]] }));
    }
}
