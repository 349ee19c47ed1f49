//! Small named triangulations used by the tests, the acceptance suite and the
//! `demo` command.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::Complex;
use crate::filtration::FilteredComplex;
use crate::simplex::{Simplex, VertexId};
use crate::stark::{ConeStep, StarkComplex, StarkNeighborhood};

fn from(lists: Vec<Vec<VertexId>>) -> Complex {
    Complex::from_lists(lists).expect("demo facets are well formed")
}

/// Boundary of the `(d+1)`-simplex on vertices `1..=d+2`, a `d`-sphere.
pub fn sphere_boundary(d: usize) -> Complex {
    let top = Simplex::new(1..=(d as VertexId + 2)).expect("nonempty");
    Complex::simplex_boundary(&top)
}

/// Suspension of the triangle boundary `1,2,3` with poles 4 and 5.
pub fn bipyramid() -> Complex {
    equator().suspension(4, 5).expect("fresh poles")
}

fn equator() -> Complex {
    from(vec![vec![1, 2], vec![2, 3], vec![1, 3]])
}

/// Seven-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7,
/// relabeled to `1..=7`.
pub fn torus7() -> Complex {
    let mut lists = Vec::new();
    for i in 0..7u32 {
        lists.push(vec![i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1]);
        lists.push(vec![i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1]);
    }
    from(lists)
}

/// Six-vertex real projective plane (half of the icosahedron).
pub fn rp2_6() -> Complex {
    from(vec![
        vec![1, 2, 3],
        vec![1, 3, 4],
        vec![1, 4, 5],
        vec![1, 5, 6],
        vec![1, 2, 6],
        vec![2, 3, 5],
        vec![2, 4, 5],
        vec![2, 4, 6],
        vec![3, 4, 6],
        vec![3, 5, 6],
    ])
}

/// Cone from vertex 0 over an `m`-cycle `1..=m`: a triangulated disk whose
/// boundary is the cycle.
pub fn wheel(m: u32) -> Complex {
    assert!(m >= 3);
    from((1..=m).map(|i| vec![0, i, i % m + 1]).collect())
}

/// `S^2` (the bipyramid) filtered by its equator: `M_0` empty, `M_1` the
/// triangle boundary `1,2,3`, `M_2` everything.
pub fn filtered_s2_equator() -> FilteredComplex {
    FilteredComplex::new(vec![Complex::empty(), equator(), bipyramid()])
}

/// `S^3` as the suspension of `boundary(1,2,3,4)` with poles 5 and 6, filtered
/// by the equatorial `S^2`.
pub fn filtered_s3_equatorial_s2() -> FilteredComplex {
    let s2 = sphere_boundary(2);
    let s3 = s2.suspension(5, 6).expect("fresh poles");
    FilteredComplex::new(vec![Complex::empty(), Complex::empty(), s2, s3])
}

/// A stratified space together with the stark neighborhoods it ships with.
#[derive(Debug, Clone)]
pub struct StarkDemo {
    pub space: StarkComplex,
    pub neighborhoods: Vec<StarkNeighborhood>,
}

fn step(apex: VertexId, cells: &[VertexId]) -> ConeStep {
    ConeStep { apex, cells: cells.iter().copied().collect::<BTreeSet<_>>() }
}

/// Local model of a knot `K` bounding a Seifert surface `S` inside a 3-ball.
///
/// The knot stratum is the edge `1,2`. Its first suspension has apex 3 on the
/// surface and apex 4 off it; the second suspension has apexes 5 and 6, both
/// off the surface. The surface stratum is the triangle `1,2,3`, which has its
/// own neighborhood with apexes 5 and 6.
pub fn knot_model() -> StarkDemo {
    let edge = from(vec![vec![1, 2]]);
    let knot_nbhd = StarkNeighborhood {
        base: edge.clone(),
        levels: vec![vec![step(3, &[]), step(4, &[])], vec![step(5, &[3, 4]), step(6, &[3, 4])]],
    };
    let ball = crate::stark::cone_extend(&edge, &knot_nbhd).expect("disjoint apexes");
    let surface = from(vec![vec![1, 2, 3]]);
    let surface_nbhd = StarkNeighborhood {
        base: surface.clone(),
        levels: vec![vec![step(5, &[]), step(6, &[])]],
    };
    StarkDemo {
        space: StarkComplex::new(vec![Complex::empty(), edge, surface, ball]),
        neighborhoods: vec![knot_nbhd, surface_nbhd],
    }
}

/// The join of the edge `a = 1, b = 2` with `n` points `p_i = 2 + i`, each
/// triangle starred at an interior vertex `c_i = 2 + n + i` so that the cone
/// points of the stark neighborhoods are vertices. `X_0 = {a, b}` and `X_1`
/// is the union of the triangle boundaries.
pub fn join_fan(n: u32) -> StarkDemo {
    assert!(n >= 1);
    let (a, b) = (1, 2);
    let p = |i: u32| 2 + i;
    let c = |i: u32| 2 + n + i;
    let mut facets = Vec::new();
    let mut skeleton = vec![vec![a, b]];
    for i in 1..=n {
        facets.push(vec![a, b, c(i)]);
        facets.push(vec![a, p(i), c(i)]);
        facets.push(vec![b, p(i), c(i)]);
        skeleton.push(vec![a, p(i)]);
        skeleton.push(vec![b, p(i)]);
    }
    let mut neighborhoods = vec![StarkNeighborhood {
        base: from(vec![vec![a, b]]),
        levels: vec![(1..=n).map(|i| step(c(i), &[])).collect()],
    }];
    for i in 1..=n {
        for end in [a, b] {
            neighborhoods.push(StarkNeighborhood {
                base: from(vec![vec![end, p(i)]]),
                levels: vec![vec![step(c(i), &[])]],
            });
        }
    }
    StarkDemo {
        space: StarkComplex::new(vec![from(vec![vec![a], vec![b]]), from(skeleton), from(facets)]),
        neighborhoods,
    }
}

/// Names accepted by [`by_name`]; the parameterized ones take a size.
pub const NAMES: &[&str] = &[
    "sphere-boundary",
    "bipyramid",
    "torus7",
    "rp2-6",
    "wheel",
    "filtered-s2-equator",
    "filtered-s3-equatorial-s2",
    "knot-model",
    "join-fan",
];

#[derive(Debug, Clone)]
pub enum Demo {
    Plain(Complex),
    Filtered(FilteredComplex),
    Stark(StarkDemo),
}

/// Looks up a demo; `size` is used by `sphere-boundary`, `wheel` and `join-fan`.
pub fn by_name(name: &str, size: Option<u32>) -> Option<Demo> {
    Some(match name {
        "sphere-boundary" => Demo::Plain(sphere_boundary(size.unwrap_or(2) as usize)),
        "bipyramid" => Demo::Plain(bipyramid()),
        "torus7" => Demo::Plain(torus7()),
        "rp2-6" => Demo::Plain(rp2_6()),
        "wheel" => Demo::Plain(wheel(size.unwrap_or(6).max(3))),
        "filtered-s2-equator" => Demo::Filtered(filtered_s2_equator()),
        "filtered-s3-equatorial-s2" => Demo::Filtered(filtered_s3_equatorial_s2()),
        "knot-model" => Demo::Stark(knot_model()),
        "join-fan" => Demo::Stark(join_fan(size.unwrap_or(3).max(1))),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::f_vector;
    use crate::manifold::{check_combinatorial_manifold, Verdict};

    #[test]
    fn plain_demos_are_closed_manifolds() {
        for k in [sphere_boundary(2), sphere_boundary(3), bipyramid(), torus7(), rp2_6()] {
            let r = check_combinatorial_manifold(&k);
            assert_eq!(r.is_combinatorial_manifold, Verdict::Yes, "{k}");
            assert!(r.is_closed());
        }
        assert_eq!(f_vector(&rp2_6()), vec![6, 15, 10]);
    }

    #[test]
    fn filtered_demos_validate() {
        assert!(filtered_s2_equator().validate().is_valid());
        assert!(filtered_s3_equatorial_s2().validate().is_valid());
    }

    #[test]
    fn stark_demos_validate() {
        for demo in [knot_model(), join_fan(1), join_fan(4)] {
            let report = demo.space.validate();
            assert!(report.is_valid(), "{report:?}");
            for n in &demo.neighborhoods {
                let r = crate::stark::validate_stark_neighborhood(&demo.space, n);
                assert!(r.is_valid(), "{r:?}");
            }
        }
    }

    #[test]
    fn unknown_demo() {
        assert!(by_name("klein-bottle", None).is_none());
        assert!(NAMES.iter().all(|n| by_name(n, None).is_some()));
    }
}
