//! Abstract simplicial complexes stored by their facets.
//!
//! A [`Complex`] is an immutable value: every construction returns a new
//! complex. The facet list is shared behind an `Arc`; the full face set, the
//! vertex-to-facet index and the boundary complex are computed on first use
//! and memoized.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use once_cell::race::OnceBox;

use crate::simplex::{Simplex, VertexId};
use crate::{Error, Result};

#[derive(Clone)]
pub struct Complex {
    inner: Arc<Inner>,
}

struct Inner {
    facets: Vec<Simplex>,
    simplices: OnceBox<BTreeSet<Simplex>>,
    vertex_facets: OnceBox<BTreeMap<VertexId, Vec<usize>>>,
    boundary: OnceBox<Complex>,
}

impl Complex {
    fn from_canonical(facets: Vec<Simplex>) -> Complex {
        Complex {
            inner: Arc::new(Inner {
                facets,
                simplices: OnceBox::new(),
                vertex_facets: OnceBox::new(),
                boundary: OnceBox::new(),
            }),
        }
    }

    pub fn empty() -> Complex {
        Complex::from_canonical(Vec::new())
    }

    /// Smallest complex containing every given simplex. Inputs that are faces
    /// of other inputs are absorbed.
    pub fn from_facets<I: IntoIterator<Item = Simplex>>(simplices: I) -> Complex {
        let mut cands: Vec<Simplex> = simplices.into_iter().collect();
        cands.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        cands.dedup();
        let uniform = match (cands.first(), cands.last()) {
            (Some(f), Some(l)) => f.len() == l.len(),
            _ => true,
        };
        let mut facets = if uniform {
            cands
        } else {
            let mut kept: Vec<Simplex> = Vec::with_capacity(cands.len());
            let mut by_vertex: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
            for c in cands {
                let dominated = by_vertex
                    .get(&c.vertices()[0])
                    .is_some_and(|ix| ix.iter().any(|&i| c.is_face_of(&kept[i])));
                if !dominated {
                    for &v in c.vertices() {
                        by_vertex.entry(v).or_default().push(kept.len());
                    }
                    kept.push(c);
                }
            }
            kept
        };
        facets.sort_unstable();
        Complex::from_canonical(facets)
    }

    /// Closure of vertex lists; fails on an empty list or a repeated vertex.
    pub fn from_lists<I, J>(lists: I) -> Result<Complex>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = VertexId>,
    {
        let facets = lists.into_iter().map(Simplex::new).collect::<Result<Vec<_>>>()?;
        Ok(Complex::from_facets(facets))
    }

    /// The closed simplex.
    pub fn simplex(s: &Simplex) -> Complex {
        Complex::from_canonical(alloc::vec![s.clone()])
    }

    /// The boundary of a simplex; empty for a vertex.
    pub fn simplex_boundary(s: &Simplex) -> Complex {
        Complex::from_facets(s.boundary_faces())
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.inner.facets
    }

    pub fn num_facets(&self) -> usize {
        self.inner.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.facets.is_empty()
    }

    /// Largest facet dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.inner.facets.iter().map(Simplex::dim).max()
    }

    pub fn is_pure(&self) -> bool {
        match self.inner.facets.first() {
            None => true,
            Some(f) => self.inner.facets.iter().all(|g| g.len() == f.len()),
        }
    }

    /// Every simplex of the complex (the downward closure of the facets).
    pub fn simplices(&self) -> &BTreeSet<Simplex> {
        self.inner.simplices.get_or_init(|| {
            let mut all = BTreeSet::new();
            for f in &self.inner.facets {
                if all.contains(f) {
                    continue;
                }
                all.extend(f.faces());
            }
            Box::new(all)
        })
    }

    pub fn simplices_of_dim(&self, d: usize) -> Vec<Simplex> {
        self.simplices().iter().filter(|s| s.dim() == d).cloned().collect()
    }

    fn vertex_facets(&self) -> &BTreeMap<VertexId, Vec<usize>> {
        self.inner.vertex_facets.get_or_init(|| {
            let mut map: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
            for (i, f) in self.inner.facets.iter().enumerate() {
                for &v in f.vertices() {
                    map.entry(v).or_default().push(i);
                }
            }
            Box::new(map)
        })
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.vertex_facets().keys().copied().collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_facets().len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertex_facets().contains_key(&v)
    }

    pub fn max_vertex(&self) -> Option<VertexId> {
        self.vertex_facets().keys().next_back().copied()
    }

    /// Default label for a new vertex: one more than the largest label.
    pub fn fresh_vertex(&self) -> VertexId {
        self.max_vertex().map_or(0, |m| m + 1)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.facets_containing(s).next().is_some()
    }

    pub fn is_facet(&self, s: &Simplex) -> bool {
        self.inner.facets.binary_search(s).is_ok()
    }

    /// Facets that have `s` as a face, in facet order.
    pub fn facets_containing<'a>(&'a self, s: &'a Simplex) -> impl Iterator<Item = &'a Simplex> + 'a {
        let ix: &[usize] = self.vertex_facets().get(&s.vertices()[0]).map_or(&[], |v| v.as_slice());
        ix.iter().map(move |&i| &self.inner.facets[i]).filter(move |f| s.is_face_of(f))
    }

    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.inner.facets.iter().all(|f| other.contains(f))
    }

    fn require(&self, s: &Simplex) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::NotPresent(s.clone()))
        }
    }

    /// Closure of the simplices disjoint from `a` whose union with `a` is in
    /// the complex. Empty when `a` is a facet.
    pub fn link(&self, a: &Simplex) -> Result<Complex> {
        self.require(a)?;
        Ok(Complex::from_facets(self.facets_containing(a).filter_map(|f| f.difference(a))))
    }

    /// Closure of all simplices having `a` as a face.
    pub fn star(&self, a: &Simplex) -> Result<Complex> {
        self.require(a)?;
        Ok(Complex::from_facets(self.facets_containing(a).cloned()))
    }

    /// Join of vertex-disjoint complexes. The empty complex is the identity.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        if let Some(v) = self.vertices().into_iter().find(|&v| other.has_vertex(v)) {
            return Err(Error::SharedVertex(v));
        }
        let mut facets = Vec::with_capacity(self.num_facets() * other.num_facets());
        for f in self.facets() {
            for g in other.facets() {
                facets.push(f.union(g));
            }
        }
        Ok(Complex::from_facets(facets))
    }

    pub fn cone(&self, apex: VertexId) -> Result<Complex> {
        self.join(&Complex::simplex(&Simplex::vertex(apex)))
    }

    /// `self * {vplus, vminus}` where the two apexes form a 0-sphere.
    pub fn suspension(&self, vplus: VertexId, vminus: VertexId) -> Result<Complex> {
        if vplus == vminus {
            return Err(Error::VertexCollision(vplus));
        }
        for v in [vplus, vminus] {
            if self.has_vertex(v) {
                return Err(Error::VertexCollision(v));
            }
        }
        let poles = Complex::from_facets([Simplex::vertex(vplus), Simplex::vertex(vminus)]);
        self.join(&poles)
    }

    /// Union of the simplex sets.
    pub fn union(&self, other: &Complex) -> Complex {
        if other.is_empty() {
            return self.clone();
        }
        if self.is_empty() {
            return other.clone();
        }
        Complex::from_facets(self.facets().iter().chain(other.facets()).cloned())
    }

    /// Removes every simplex that has `a` as a face; all other simplices stay.
    pub fn remove_containing(&self, a: &Simplex) -> Complex {
        let mut out = Vec::with_capacity(self.num_facets() + a.len());
        for f in self.facets() {
            if a.is_face_of(f) {
                for &x in a.vertices() {
                    if let Some(g) = f.without(x) {
                        out.push(g);
                    }
                }
            } else {
                out.push(f.clone());
            }
        }
        Complex::from_facets(out)
    }

    /// Applies a vertex relabeling. The map must be injective on the vertices.
    pub fn relabel<F: Fn(VertexId) -> VertexId>(&self, f: F) -> Result<Complex> {
        let facets = self.facets().iter().map(|s| s.map(&f)).collect::<Result<Vec<_>>>()?;
        Ok(Complex::from_facets(facets))
    }

    /// Subcomplex of simplices all of whose vertices are in `keep`.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Complex {
        Complex::from_facets(self.facets().iter().filter_map(|f| {
            let v: Vec<VertexId> = f.vertices().iter().copied().filter(|x| keep.contains(x)).collect();
            (!v.is_empty()).then(|| Simplex::from_sorted(v))
        }))
    }

    /// Closure of the codimension-one faces of top-dimensional facets that lie
    /// in exactly one such facet.
    pub fn boundary_complex(&self) -> &Complex {
        self.inner.boundary.get_or_init(|| {
            let counts = self.ridge_degrees();
            Box::new(Complex::from_facets(
                counts.into_iter().filter(|(_, c)| *c == 1).map(|(r, _)| r),
            ))
        })
    }

    /// For each codimension-one face of a top-dimensional facet, the number of
    /// top-dimensional facets containing it.
    pub fn ridge_degrees(&self) -> BTreeMap<Simplex, usize> {
        let mut counts = BTreeMap::new();
        let Some(n) = self.dim() else { return counts };
        for f in self.facets().iter().filter(|f| f.dim() == n) {
            for r in f.boundary_faces() {
                *counts.entry(r).or_insert(0usize) += 1;
            }
        }
        counts
    }

    /// Stellar subdivision at `a` with new vertex `apex`: the star of `a` is
    /// replaced by the cone from `apex` over `boundary(a) * link(a)`.
    pub fn stellar_subdivide(&self, a: &Simplex, apex: VertexId) -> Result<Complex> {
        self.require(a)?;
        if a.dim() == 0 {
            return Err(Error::VertexSubdivision(a.clone()));
        }
        if self.has_vertex(apex) {
            return Err(Error::VertexCollision(apex));
        }
        let mut out = Vec::with_capacity(self.num_facets() + a.len());
        for f in self.facets() {
            if a.is_face_of(f) {
                for &x in a.vertices() {
                    let g = f.without(x).expect("dim(a) >= 1");
                    out.push(g.with_vertex(apex));
                }
            } else {
                out.push(f.clone());
            }
        }
        Ok(Complex::from_facets(out))
    }

    /// Staircase triangulation of `|K| x [0,1]` with bottom copy labeled like
    /// `self` and a top copy on fresh labels `max + 1 + rank(v)`.
    pub fn product_with_interval(&self, order: &[VertexId]) -> Result<Complex> {
        let base = self.fresh_vertex();
        let bottom: BTreeMap<VertexId, VertexId> = order.iter().map(|&v| (v, v)).collect();
        let top: BTreeMap<VertexId, VertexId> =
            order.iter().enumerate().map(|(i, &v)| (v, base + i as VertexId)).collect();
        self.product_with_interval_labeled(order, &bottom, &top)
    }

    /// Staircase triangulation of `|K| x [0,1]` induced by `order`: each facet
    /// `v_0 < ... < v_m` contributes the simplices
    /// `{b(v_0) .. b(v_i), t(v_i) .. t(v_m)}` for `0 <= i <= m`.
    pub fn product_with_interval_labeled(
        &self,
        order: &[VertexId],
        bottom: &BTreeMap<VertexId, VertexId>,
        top: &BTreeMap<VertexId, VertexId>,
    ) -> Result<Complex> {
        let rank: BTreeMap<VertexId, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        if rank.len() != order.len() {
            return Err(Error::InvalidVertexOrder("repeated vertex".to_string()));
        }
        for v in self.vertices() {
            if !rank.contains_key(&v) {
                return Err(Error::InvalidVertexOrder(format!("vertex {v} missing from order")));
            }
            if !bottom.contains_key(&v) || !top.contains_key(&v) {
                return Err(Error::InvalidVertexOrder(format!("vertex {v} has no level label")));
            }
        }
        let mut out = Vec::new();
        for f in self.facets() {
            let mut chain: Vec<VertexId> = f.vertices().to_vec();
            chain.sort_by_key(|v| rank[v]);
            for i in 0..chain.len() {
                let lower = chain[..=i].iter().map(|v| bottom[v]);
                let upper = chain[i..].iter().map(|v| top[v]);
                out.push(Simplex::new(lower.chain(upper))?);
            }
        }
        Ok(Complex::from_facets(out))
    }

    /// A vertex bijection carrying `self` onto `other`, found by backtracking.
    pub fn find_isomorphism(&self, other: &Complex) -> Option<BTreeMap<VertexId, VertexId>> {
        if self.num_facets() != other.num_facets()
            || self.num_vertices() != other.num_vertices()
            || crate::invariants::f_vector(self) != crate::invariants::f_vector(other)
        {
            return None;
        }
        let degree = |k: &Complex, v: VertexId| k.vertex_facets()[&v].len();
        let mut order = self.vertices();
        order.sort_by_key(|&v| core::cmp::Reverse(degree(self, v)));
        let targets = other.vertices();
        let mut map = BTreeMap::new();
        let mut used = BTreeSet::new();
        if iso_extend(self, other, &order, &targets, &mut map, &mut used, &degree) {
            Some(map)
        } else {
            None
        }
    }
}

fn iso_extend(
    a: &Complex,
    b: &Complex,
    order: &[VertexId],
    targets: &[VertexId],
    map: &mut BTreeMap<VertexId, VertexId>,
    used: &mut BTreeSet<VertexId>,
    degree: &dyn Fn(&Complex, VertexId) -> usize,
) -> bool {
    let Some((&v, rest)) = order.split_first() else {
        return a.relabel(|x| map[&x]).is_ok_and(|img| &img == b);
    };
    for &t in targets {
        if used.contains(&t) || degree(a, v) != degree(b, t) {
            continue;
        }
        map.insert(v, t);
        used.insert(t);
        // every facet through v whose vertices are all mapped must land on a facet
        let consistent = a.facets_containing(&Simplex::vertex(v)).all(|f| {
            match f.vertices().iter().map(|x| map.get(x).copied()).collect::<Option<Vec<_>>>() {
                Some(img) => Simplex::new(img).is_ok_and(|s| b.is_facet(&s)),
                None => true,
            }
        });
        if consistent && iso_extend(a, b, rest, targets, map, used, degree) {
            return true;
        }
        map.remove(&v);
        used.remove(&t);
    }
    false
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.facets == other.inner.facets
    }
}

impl Eq for Complex {}

impl PartialOrd for Complex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Complex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.inner.facets.cmp(&other.inner.facets)
    }
}

impl Hash for Complex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.facets.hash(state);
    }
}

/// Canonical facet text, e.g. `[[1,2,3],[1,3,4]]`.
impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.facets().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex{self}")
    }
}
