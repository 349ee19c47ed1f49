//! Pachner bistellar moves.
//!
//! For a `k`-simplex `A` whose link is the boundary of an `(n-k)`-simplex `B`
//! not already in the complex, the move replaces `A * boundary(B)` by
//! `boundary(A) * B`. When `A` is a facet, `B` is a single new vertex and the
//! move is the stellar subdivision of `A`.

use alloc::vec::Vec;
use core::fmt;

use crate::complex::Complex;
use crate::simplex::{Simplex, VertexId};
use crate::{Error, MoveFailure, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BistellarMove {
    pub a: Simplex,
    pub b: Simplex,
}

impl BistellarMove {
    pub fn new(a: Simplex, b: Simplex) -> Result<Self> {
        if let Some(&v) = a.vertices().iter().find(|&&v| b.contains(v)) {
            return Err(Error::SharedVertex(v));
        }
        Ok(BistellarMove { a, b })
    }

    /// `dim(A)`.
    pub fn k(&self) -> usize {
        self.a.dim()
    }

    /// Dimension of the ambient manifold, `dim(A) + dim(B)`.
    pub fn n(&self) -> usize {
        self.a.dim() + self.b.dim()
    }

    /// The move with the roles of `A` and `B` exchanged.
    pub fn inverse(&self) -> BistellarMove {
        BistellarMove { a: self.b.clone(), b: self.a.clone() }
    }

    /// Number of facets removed minus number of facets added.
    pub fn facet_delta(&self) -> isize {
        self.b.len() as isize - self.a.len() as isize
    }

    /// `A * boundary(B)`, the star being replaced.
    pub fn before(&self) -> Complex {
        Complex::simplex(&self.a).join(&Complex::simplex_boundary(&self.b)).expect("disjoint")
    }

    /// `boundary(A) * B`, the replacement.
    pub fn after(&self) -> Complex {
        Complex::simplex_boundary(&self.a).join(&Complex::simplex(&self.b)).expect("disjoint")
    }
}

impl fmt::Display for BistellarMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.a, self.b)
    }
}

pub fn inverse_move(m: &BistellarMove) -> BistellarMove {
    m.inverse()
}

/// The move at `a` if its link is the boundary of a missing simplex, using
/// the default fresh label for a facet.
pub fn bistellar_applicable(k: &Complex, a: &Simplex) -> Result<Option<BistellarMove>> {
    bistellar_applicable_with(k, a, k.fresh_vertex())
}

/// As [`bistellar_applicable`], with the label for the new vertex when `a` is
/// a facet supplied by the caller.
pub fn bistellar_applicable_with(k: &Complex, a: &Simplex, fresh: VertexId) -> Result<Option<BistellarMove>> {
    if !k.contains(a) {
        return Err(Error::NotPresent(a.clone()));
    }
    if k.boundary_complex().contains(a) {
        return Err(Error::IllegalMove(MoveFailure::BoundarySimplex(a.clone())));
    }
    Ok(link_target(k, a, fresh))
}

fn link_target(k: &Complex, a: &Simplex, fresh: VertexId) -> Option<BistellarMove> {
    let n = k.dim()?;
    let star: Vec<&Simplex> = k.facets_containing(a).collect();
    if star.len() == 1 && star[0] == a {
        if a.dim() != n || k.has_vertex(fresh) {
            return None;
        }
        return Some(BistellarMove { a: a.clone(), b: Simplex::vertex(fresh) });
    }
    // the link must be the boundary of a simplex B with dim(A) + dim(B) = n:
    // exactly |B| facets, each missing a different vertex of B
    let width = n - a.dim() + 1;
    if star.len() != width || star.iter().any(|f| f.len() != n + 1) {
        return None;
    }
    let b = star.iter().fold(Simplex::vertex(star[0].vertices()[0]), |acc, f| acc.union(f));
    let b = b.difference(a)?;
    if b.len() != width || k.contains(&b) {
        return None;
    }
    Some(BistellarMove { a: a.clone(), b })
}

/// Applies `m` after re-deriving it from the link of `m.a`.
pub fn apply_bistellar(k: &Complex, m: &BistellarMove) -> Result<Complex> {
    check_applicable(k, m)?;
    Ok(apply_unchecked(k, m))
}

pub(crate) fn check_applicable(k: &Complex, m: &BistellarMove) -> Result<()> {
    if !m.a.is_disjoint(&m.b) {
        return Err(Error::IllegalMove(MoveFailure::DimensionMismatch {
            a: m.a.clone(),
            b: m.b.clone(),
            n: k.dim().unwrap_or(0),
        }));
    }
    let fresh = if m.b.dim() == 0 { m.b.vertices()[0] } else { k.fresh_vertex() };
    match bistellar_applicable_with(k, &m.a, fresh)? {
        Some(found) if found == *m => Ok(()),
        Some(found) => Err(Error::IllegalMove(MoveFailure::TargetMismatch { expected: found.b, found: m.b.clone() })),
        None => {
            if m.b.dim() == 0 && k.has_vertex(fresh) {
                Err(Error::VertexCollision(fresh))
            } else if k.contains(&m.b) {
                Err(Error::IllegalMove(MoveFailure::TargetPresent(m.b.clone())))
            } else if k.dim() != Some(m.n()) {
                Err(Error::IllegalMove(MoveFailure::DimensionMismatch {
                    a: m.a.clone(),
                    b: m.b.clone(),
                    n: k.dim().unwrap_or(0),
                }))
            } else {
                Err(Error::IllegalMove(MoveFailure::LinkNotSimplexBoundary(m.a.clone())))
            }
        }
    }
}

pub(crate) fn apply_unchecked(k: &Complex, m: &BistellarMove) -> Complex {
    k.remove_containing(&m.a).union(&m.after())
}

/// Every applicable move whose `A` lies outside `avoid` and off the boundary,
/// in lexicographic order of `A`. Since the move only deletes simplices that
/// contain `A`, the avoided subcomplex survives unchanged.
pub fn enumerate_moves(k: &Complex, avoid: &Complex) -> Result<Vec<BistellarMove>> {
    enumerate_moves_with(k, avoid, &[k.fresh_vertex()])
}

/// As [`enumerate_moves`], emitting one subdivision per facet for each of the
/// supplied fresh labels that is not already a vertex.
pub fn enumerate_moves_with(k: &Complex, avoid: &Complex, fresh: &[VertexId]) -> Result<Vec<BistellarMove>> {
    if !avoid.is_subcomplex_of(k) {
        return Err(Error::NotSubcomplex(alloc::format!("{avoid} is not contained in {k}")));
    }
    let boundary = k.boundary_complex();
    let mut out = Vec::new();
    for a in k.simplices() {
        if avoid.contains(a) || boundary.contains(a) {
            continue;
        }
        if k.is_facet(a) && a.dim() == k.dim().unwrap_or(0) {
            for &v in fresh {
                if let Some(m) = link_target(k, a, v) {
                    out.push(m);
                }
            }
        } else if let Some(m) = link_target(k, a, 0) {
            out.push(m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo;
    use crate::invariants::f_vector;
    use alloc::vec;

    fn c(lists: &[&[u32]]) -> Complex {
        Complex::from_lists(lists.iter().map(|l| l.iter().copied())).unwrap()
    }

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    fn square() -> Complex {
        c(&[&[1, 2, 3], &[1, 3, 4]])
    }

    #[test]
    fn flip_in_a_square() {
        let k = square();
        let m = bistellar_applicable(&k, &s(&[1, 3])).unwrap().unwrap();
        assert_eq!(m, BistellarMove::new(s(&[1, 3]), s(&[2, 4])).unwrap());
        let flipped = apply_bistellar(&k, &m).unwrap();
        assert_eq!(flipped, c(&[&[1, 2, 4], &[2, 3, 4]]));
        assert_eq!(f_vector(&flipped), vec![4, 5, 2]);
        assert_eq!(apply_bistellar(&flipped, &m.inverse()).unwrap(), k);
    }

    #[test]
    fn no_flip_when_target_present() {
        let k = demo::sphere_boundary(2);
        assert_eq!(bistellar_applicable(&k, &s(&[1, 2])).unwrap(), None);
        let m = BistellarMove::new(s(&[1, 2]), s(&[3, 4])).unwrap();
        assert_eq!(apply_bistellar(&k, &m), Err(Error::IllegalMove(MoveFailure::TargetPresent(s(&[3, 4])))));
    }

    #[test]
    fn facet_subdivision() {
        let k = demo::sphere_boundary(2);
        let m = bistellar_applicable(&k, &s(&[1, 2, 3])).unwrap().unwrap();
        assert_eq!(m.b, Simplex::vertex(5));
        let out = apply_bistellar(&k, &m).unwrap();
        assert_eq!(f_vector(&out), vec![5, 9, 6]);
        assert!(out.find_isomorphism(&demo::bipyramid()).is_some());
        assert_eq!(apply_bistellar(&out, &m.inverse()).unwrap(), k);
    }

    #[test]
    fn inverse_examples() {
        let m = BistellarMove::new(s(&[1, 3]), s(&[2, 4])).unwrap();
        assert_eq!(inverse_move(&m), BistellarMove::new(s(&[2, 4]), s(&[1, 3])).unwrap());
        let sub = BistellarMove::new(s(&[1, 2, 3]), s(&[9])).unwrap();
        assert_eq!(sub.inverse().a, s(&[9]));
        assert_eq!(sub.inverse().b, s(&[1, 2, 3]));
        assert_eq!(sub.inverse().inverse(), sub);
    }

    #[test]
    fn boundary_and_missing_simplices_are_errors() {
        let k = square();
        assert_eq!(
            bistellar_applicable(&k, &s(&[1, 2])),
            Err(Error::IllegalMove(MoveFailure::BoundarySimplex(s(&[1, 2]))))
        );
        assert_eq!(bistellar_applicable(&k, &s(&[2, 4])), Err(Error::NotPresent(s(&[2, 4]))));
    }

    #[test]
    fn wrong_target_is_named() {
        let k = square();
        let m = BistellarMove::new(s(&[1, 3]), s(&[2, 5])).unwrap();
        assert!(matches!(
            apply_bistellar(&k, &m),
            Err(Error::IllegalMove(MoveFailure::TargetMismatch { .. }))
        ));
        let m = BistellarMove::new(s(&[1, 2, 3]), s(&[4])).unwrap();
        assert_eq!(apply_bistellar(&k, &m), Err(Error::VertexCollision(4)));
    }

    #[test]
    fn enumeration_examples() {
        let k = demo::sphere_boundary(2);
        let moves = enumerate_moves(&k, &Complex::empty()).unwrap();
        assert_eq!(moves.len(), 4);
        assert!(moves.iter().all(|m| m.a.dim() == 2));

        let sq = square();
        let rim = sq.boundary_complex().clone();
        let moves = enumerate_moves(&sq, &rim).unwrap();
        assert_eq!(moves.len(), 3);
        assert_eq!(moves[0].a, s(&[1, 2, 3]));
        assert_eq!(moves[1].a, s(&[1, 3]));
        assert!(enumerate_moves(&sq, &sq).unwrap().is_empty());
        assert!(matches!(enumerate_moves(&sq, &c(&[&[7]])), Err(Error::NotSubcomplex(_))));
    }
}
