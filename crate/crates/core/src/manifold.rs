//! Pseudomanifold and combinatorial-manifold recognition.
//!
//! The pseudomanifold test is exact in every dimension. A complex is a
//! combinatorial manifold when every vertex link is a PL sphere (interior
//! vertices) or a PL ball (boundary vertices). Spheres and balls of dimension
//! at most 2 are recognized exactly; higher-dimensional links are reduced by
//! bistellar moves toward the boundary of a simplex, and a stalled reduction
//! yields [`Verdict::Unknown`] rather than a guess.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::complex::Complex;
use crate::invariants::{euler_characteristic, homology, HomologyGroup};
use crate::search::{reduce, ReduceBudget};
use crate::simplex::{Simplex, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    /// Yes or Unknown.
    pub fn is_plausible(self) -> bool {
        self != Verdict::No
    }

    fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::No, _) | (_, Verdict::No) => Verdict::No,
            (Verdict::Unknown, _) | (_, Verdict::Unknown) => Verdict::Unknown,
            _ => Verdict::Yes,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldReport {
    pub dim: Option<usize>,
    pub is_pseudomanifold: bool,
    pub is_combinatorial_manifold: Verdict,
    pub boundary_complex: Complex,
    /// Non-pure facets, ridges in three or more facets, and vertices whose
    /// link is not a sphere or ball.
    pub offending_simplices: Vec<Simplex>,
}

impl ManifoldReport {
    pub fn is_closed(&self) -> bool {
        self.boundary_complex.is_empty()
    }
}

pub fn check_combinatorial_manifold(k: &Complex) -> ManifoldReport {
    let boundary = k.boundary_complex().clone();
    let Some(n) = k.dim() else {
        return ManifoldReport {
            dim: None,
            is_pseudomanifold: true,
            is_combinatorial_manifold: Verdict::Yes,
            boundary_complex: boundary,
            offending_simplices: Vec::new(),
        };
    };
    let mut offending: Vec<Simplex> = k.facets().iter().filter(|f| f.dim() != n).cloned().collect();
    offending.extend(k.ridge_degrees().into_iter().filter(|(_, c)| *c > 2).map(|(r, _)| r));
    let is_pseudomanifold = offending.is_empty();
    let mut verdict = if is_pseudomanifold { Verdict::Yes } else { Verdict::No };
    if is_pseudomanifold && n > 0 {
        for v in k.vertices() {
            let vs = Simplex::vertex(v);
            let link = k.link(&vs).expect("vertex of k");
            let kind = if boundary.contains(&vs) { Shape::Ball } else { Shape::Sphere };
            let found = recognize(&link, n - 1, kind);
            if found == Verdict::No {
                offending.push(vs);
            }
            verdict = verdict.and(found);
        }
    }
    ManifoldReport {
        dim: Some(n),
        is_pseudomanifold,
        is_combinatorial_manifold: verdict,
        boundary_complex: boundary,
        offending_simplices: offending,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Sphere,
    Ball,
}

pub fn is_sphere(k: &Complex, d: usize) -> Verdict {
    recognize(k, d, Shape::Sphere)
}

pub fn is_ball(k: &Complex, d: usize) -> Verdict {
    recognize(k, d, Shape::Ball)
}

fn connected(k: &Complex) -> bool {
    k.is_empty() || homology(k).first().is_some_and(|h0| h0.betti == 1)
}

fn vertex_degrees(k: &Complex) -> BTreeMap<VertexId, usize> {
    let mut deg = BTreeMap::new();
    for f in k.facets() {
        for &v in f.vertices() {
            *deg.entry(v).or_insert(0usize) += 1;
        }
    }
    deg
}

fn recognize(k: &Complex, d: usize, shape: Shape) -> Verdict {
    if k.is_empty() || k.dim() != Some(d) || !k.is_pure() {
        return Verdict::No;
    }
    let yes_if = |b: bool| if b { Verdict::Yes } else { Verdict::No };
    match d {
        0 => yes_if(k.num_facets() == if shape == Shape::Sphere { 2 } else { 1 }),
        1 => {
            let deg = vertex_degrees(k);
            if deg.values().any(|&x| x > 2) || !connected(k) {
                return Verdict::No;
            }
            let ends = deg.values().filter(|&&x| x == 1).count();
            yes_if(ends == if shape == Shape::Sphere { 0 } else { 2 })
        }
        _ => {
            if k.ridge_degrees().values().any(|&c| c > 2) || !connected(k) {
                return Verdict::No;
            }
            let boundary = k.boundary_complex();
            if (shape == Shape::Sphere) != boundary.is_empty() {
                return Verdict::No;
            }
            let mut links = Verdict::Yes;
            for v in k.vertices() {
                let vs = Simplex::vertex(v);
                let sub = if boundary.contains(&vs) { Shape::Ball } else { Shape::Sphere };
                links = links.and(recognize(&k.link(&vs).expect("vertex"), d - 1, sub));
                if links == Verdict::No {
                    return Verdict::No;
                }
            }
            if d == 2 {
                // a connected closed surface with chi 2 is a sphere; a connected
                // surface with boundary and chi 1 is a disk
                let chi = euler_characteristic(k);
                return links.and(yes_if(chi == if shape == Shape::Sphere { 2 } else { 1 }));
            }
            match shape {
                Shape::Sphere => links.and(sphere_by_reduction(k, d)),
                Shape::Ball => {
                    // a ball is a sphere minus the open star of a vertex
                    let apex = k.fresh_vertex();
                    let capped = k.union(&boundary.cone(apex).expect("fresh apex"));
                    links.and(sphere_by_reduction(&capped, d))
                }
            }
        }
    }
}

fn sphere_by_reduction(k: &Complex, d: usize) -> Verdict {
    let h = homology(k);
    let expected = |i: usize| HomologyGroup::free(usize::from(i == 0 || i == d));
    if h.len() != d + 1 || h.iter().enumerate().any(|(i, g)| g != &expected(i)) {
        return Verdict::No;
    }
    if reduce(k, &ReduceBudget::default()).certifies_sphere() {
        Verdict::Yes
    } else {
        Verdict::Unknown
    }
}

/// Connected components of the simplices of `k` not in `lower`, where two
/// open simplices are adjacent when one is a face of the other. Returns the
/// closure of each component.
pub fn open_components(k: &Complex, lower: &Complex) -> Vec<Complex> {
    let open: Vec<&Simplex> = k.simplices().iter().filter(|s| !lower.contains(s)).collect();
    let index: BTreeMap<&Simplex, usize> = open.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut parent: Vec<usize> = (0..open.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, s) in open.iter().enumerate() {
        for face in s.boundary_faces() {
            if let Some(&j) = index.get(&face) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Simplex>> = BTreeMap::new();
    for (i, s) in open.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push((*s).clone());
    }
    let mut out: Vec<Complex> = groups.into_values().map(Complex::from_facets).collect();
    out.sort();
    out
}
