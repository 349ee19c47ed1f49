use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Opaque vertex label.
pub type VertexId = u32;

/// A nonempty set of vertices, stored strictly increasing.
///
/// Two simplices are equal exactly when their vertex sets are equal, and the
/// derived ordering is lexicographic on the sorted vertex lists.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Builds a simplex from vertices in any order. Repeated vertices are an error.
    pub fn new<I: IntoIterator<Item = VertexId>>(vertices: I) -> Result<Self> {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        if v.is_empty() {
            return Err(Error::EmptySimplex);
        }
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(Simplex(v))
    }

    pub fn vertex(v: VertexId) -> Self {
        Simplex(alloc::vec![v])
    }

    /// Caller guarantees `v` is nonempty and strictly increasing.
    pub(crate) fn from_sorted(v: Vec<VertexId>) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Never true; simplices have at least one vertex.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// True if every vertex of `self` is a vertex of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let next = match (self.0.get(i), other.0.get(j)) {
                (Some(&a), Some(&b)) if a == b => {
                    i += 1;
                    j += 1;
                    a
                }
                (Some(&a), Some(&b)) if a < b => {
                    i += 1;
                    a
                }
                (Some(_), Some(&b)) => {
                    j += 1;
                    b
                }
                (Some(&a), None) => {
                    i += 1;
                    a
                }
                (None, Some(&b)) => {
                    j += 1;
                    b
                }
                (None, None) => unreachable!(),
            };
            v.push(next);
        }
        Simplex(v)
    }

    pub fn with_vertex(&self, v: VertexId) -> Simplex {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        Simplex(out)
    }

    /// Vertices of `self` not in `other`, or `None` when nothing remains.
    pub fn difference(&self, other: &Simplex) -> Option<Simplex> {
        let v: Vec<VertexId> = self.0.iter().copied().filter(|x| !other.contains(*x)).collect();
        (!v.is_empty()).then_some(Simplex(v))
    }

    pub fn without(&self, v: VertexId) -> Option<Simplex> {
        let out: Vec<VertexId> = self.0.iter().copied().filter(|&x| x != v).collect();
        (!out.is_empty()).then_some(Simplex(out))
    }

    /// Codimension-one faces, in the order obtained by dropping vertex 0, 1, ...
    /// A vertex has none.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Simplex(v)
        })
    }

    /// All nonempty faces, including `self`.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        debug_assert!(n < 32);
        let mut out = Vec::with_capacity((1usize << n) - 1);
        for mask in 1u32..(1u32 << n) {
            let v: Vec<VertexId> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i]).collect();
            out.push(Simplex(v));
        }
        out
    }

    pub fn map<F: Fn(VertexId) -> VertexId>(&self, f: F) -> Result<Simplex> {
        Simplex::new(self.0.iter().map(|&v| f(v)))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_order_and_errors() {
        assert_eq!(s(&[3, 1, 2]).vertices(), &[1, 2, 3]);
        assert_eq!(Simplex::new([1, 2, 1]), Err(Error::DuplicateVertex(1)));
        assert_eq!(Simplex::new([]), Err(Error::EmptySimplex));
    }

    #[test]
    fn set_operations() {
        let a = s(&[1, 3, 5]);
        assert!(s(&[1, 5]).is_face_of(&a));
        assert!(!s(&[1, 4]).is_face_of(&a));
        assert_eq!(a.union(&s(&[2, 3])), s(&[1, 2, 3, 5]));
        assert_eq!(a.difference(&s(&[3])), Some(s(&[1, 5])));
        assert_eq!(a.difference(&a), None);
        assert!(a.is_disjoint(&s(&[2, 4])));
        assert_eq!(a.boundary_faces().count(), 3);
        assert_eq!(a.faces().len(), 7);
        assert_eq!(Simplex::vertex(4).boundary_faces().count(), 0);
    }
}
