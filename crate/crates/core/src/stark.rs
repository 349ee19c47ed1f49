//! Starkly stratified spaces and stark extended bistellar moves.
//!
//! A stark neighborhood of a `k`-ball `B` in `X_k \ X_{k-1}` is built level by
//! level: `N_k = B` and `N_{l+1} = N_l ∪ ⋃ L(v) * v` over the level-`l` apexes
//! `v`, each outside `X_l`, with `B ⊂ L(v) ⊂ N_l` a ball. Here `L(v)` is
//! stored as a cell description: the base together with the cones of a set of
//! apexes from earlier levels. [`cone_extend`] reimposes a triangulation on
//! the whole neighborhood from any triangulation of the base.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::Complex;
use crate::filtration::{find_filtered_suspension, FilteredComplex, SuspensionData};
use crate::manifold::{check_combinatorial_manifold, is_ball, open_components, Verdict};
use crate::moves::BistellarMove;
use crate::simplex::{Simplex, VertexId};
use crate::{Error, MoveFailure, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarkComplex {
    strata: Vec<Complex>,
}

impl StarkComplex {
    /// `strata[k]` is `X_k`; the last entry is the whole space.
    pub fn new(strata: Vec<Complex>) -> Self {
        assert!(!strata.is_empty(), "a stratification has at least the top stratum");
        StarkComplex { strata }
    }

    pub fn complex(&self) -> &Complex {
        self.strata.last().expect("nonempty")
    }

    pub fn ambient_dim(&self) -> usize {
        self.strata.len() - 1
    }

    pub fn stratum(&self, k: usize) -> &Complex {
        &self.strata[k]
    }

    pub fn strata(&self) -> &[Complex] {
        &self.strata
    }

    pub fn into_strata(self) -> Vec<Complex> {
        self.strata
    }

    pub fn stratum_of(&self, s: &Simplex) -> Option<usize> {
        self.strata.iter().position(|m| m.contains(s))
    }

    pub fn vertex_stratum(&self, v: VertexId) -> Option<usize> {
        self.strata.iter().position(|m| m.has_vertex(v))
    }

    pub fn validate(&self) -> StarkReport {
        validate_stark(self)
    }

    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        for (i, m) in self.strata.iter().enumerate() {
            if i > 0 {
                out.push('|');
            }
            out.push_str(&format!("{m}"));
        }
        out
    }
}

impl From<FilteredComplex> for StarkComplex {
    fn from(fc: FilteredComplex) -> Self {
        StarkComplex { strata: fc.into_strata() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarkFinding {
    Nesting { lower: usize, simplex: Simplex },
    Dimension { stratum: usize, found: usize },
    /// The closure of an open component of `X_k \ X_{k-1}` is not a
    /// `k`-manifold (possibly with boundary).
    Component { stratum: usize, closure: Complex },
}

impl fmt::Display for StarkFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarkFinding::Nesting { lower, simplex } => {
                write!(f, "nesting violation: {simplex} is in X_{lower} but not in X_{}", lower + 1)
            }
            StarkFinding::Dimension { stratum, found } => write!(f, "X_{stratum} has dimension {found}"),
            StarkFinding::Component { stratum, closure } => {
                write!(f, "component {closure} of X_{stratum} is not a {stratum}-manifold")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarkReport {
    pub findings: Vec<StarkFinding>,
    /// Number of open components checked per stratum.
    pub components: Vec<usize>,
    /// Whether any component verdict was [`Verdict::Unknown`].
    pub inconclusive: bool,
}

impl StarkReport {
    pub fn is_valid(&self) -> bool {
        self.findings.is_empty()
    }
}

fn validate_stark(x: &StarkComplex) -> StarkReport {
    let mut findings = Vec::new();
    let mut components = Vec::new();
    let mut inconclusive = false;
    for k in 0..x.ambient_dim() {
        if let Some(s) = x.strata[k].facets().iter().find(|s| !x.strata[k + 1].contains(s)) {
            findings.push(StarkFinding::Nesting { lower: k, simplex: s.clone() });
        }
    }
    let empty = Complex::empty();
    for (k, xk) in x.strata.iter().enumerate() {
        if let Some(d) = xk.dim().filter(|&d| d > k) {
            findings.push(StarkFinding::Dimension { stratum: k, found: d });
            components.push(0);
            continue;
        }
        let lower = if k == 0 { &empty } else { &x.strata[k - 1] };
        let comps = open_components(xk, lower);
        components.push(comps.len());
        for closure in comps {
            let verdict = if closure.dim() != Some(k) || !closure.is_pure() {
                Verdict::No
            } else {
                check_combinatorial_manifold(&closure).is_combinatorial_manifold
            };
            inconclusive |= verdict == Verdict::Unknown;
            if verdict == Verdict::No {
                findings.push(StarkFinding::Component { stratum: k, closure });
            }
        }
    }
    StarkReport { findings, components, inconclusive }
}

/// One cone of a level: `L(apex) * apex` with `L(apex)` the base together
/// with the cones already built at the apexes in `cells`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConeStep {
    pub apex: VertexId,
    pub cells: BTreeSet<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarkNeighborhood {
    /// The `k`-ball.
    pub base: Complex,
    /// `levels[i]` holds the apexes of level `l = k + i`, for `l < n`.
    pub levels: Vec<Vec<ConeStep>>,
}

impl StarkNeighborhood {
    /// The neighborhood of an `(n-k)`-fold iterated filtered suspension:
    /// both apexes of a level see the base and every earlier apex.
    pub fn from_suspension(base: Complex, susp: &SuspensionData) -> Self {
        let mut earlier = BTreeSet::new();
        let mut levels = Vec::new();
        for &(p, q) in &susp.levels {
            levels.push(alloc::vec![
                ConeStep { apex: p, cells: earlier.clone() },
                ConeStep { apex: q, cells: earlier.clone() },
            ]);
            earlier.insert(p);
            earlier.insert(q);
        }
        StarkNeighborhood { base, levels }
    }

    /// Dimension of the base implied by the depth, `n - levels`.
    pub fn k(&self, n: usize) -> Option<usize> {
        n.checked_sub(self.levels.len())
    }

    pub fn apexes(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.levels.iter().flatten().map(|s| s.apex)
    }

    /// Apex to level index.
    pub fn apex_levels(&self) -> BTreeMap<VertexId, usize> {
        let mut out = BTreeMap::new();
        for (i, level) in self.levels.iter().enumerate() {
            for s in level {
                out.insert(s.apex, i);
            }
        }
        out
    }

    /// Dimension of each `L(v)` given `dim(base) = k`.
    pub fn link_dims(&self, k: usize) -> BTreeMap<VertexId, usize> {
        let mut dims = BTreeMap::new();
        for level in &self.levels {
            for s in level {
                let d = s.cells.iter().filter_map(|u| dims.get(u)).map(|d| d + 1).fold(k, usize::max);
                dims.insert(s.apex, d);
            }
        }
        dims
    }
}

/// `T↑N`: cone `T` level by level, apexes in ascending order within a level.
pub fn cone_extend(t: &Complex, n: &StarkNeighborhood) -> Result<Complex> {
    Ok(cone_pieces(t, n)?.0)
}

/// The extension together with each apex's cone `L(v) * v`.
fn cone_pieces(t: &Complex, n: &StarkNeighborhood) -> Result<(Complex, BTreeMap<VertexId, Complex>)> {
    let mut cones: BTreeMap<VertexId, Complex> = BTreeMap::new();
    let mut out = t.clone();
    for (i, level) in n.levels.iter().enumerate() {
        let mut steps: Vec<&ConeStep> = level.iter().collect();
        steps.sort_by_key(|s| s.apex);
        let mut built = Vec::with_capacity(steps.len());
        for s in steps {
            if t.has_vertex(s.apex) || cones.contains_key(&s.apex) || built.iter().any(|(a, _)| *a == s.apex) {
                return Err(Error::VertexCollision(s.apex));
            }
            let mut link = t.clone();
            for u in &s.cells {
                let cone = cones.get(u).ok_or_else(|| {
                    Error::InvalidNeighborhood(format!(
                        "apex {} at level {i} refers to {u}, which is not an apex of an earlier level",
                        s.apex
                    ))
                })?;
                link = link.union(cone);
            }
            built.push((s.apex, link.cone(s.apex)?));
        }
        for (apex, cone) in built {
            out = out.union(&cone);
            cones.insert(apex, cone);
        }
    }
    Ok((out, cones))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NeighborhoodFinding {
    /// The base is not a ball of dimension `n - levels`.
    Base(String),
    BaseNotInStratum,
    /// An interior simplex of the base lies in `X_{k-1}`.
    BoundaryInterior(Simplex),
    ApexStratum { apex: VertexId, level: usize },
    ApexInBase(VertexId),
    DuplicateApex(VertexId),
    /// `L(apex)` names a cell that is not an earlier apex, so `L ⊄ N_l`.
    Containment { apex: VertexId, cell: VertexId },
    LinkNotBall { apex: VertexId, verdict: Verdict },
    /// A simplex of the cone extension missing from `X`.
    Missing(Simplex),
}

impl fmt::Display for NeighborhoodFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NeighborhoodFinding::Base(why) => write!(f, "base: {why}"),
            NeighborhoodFinding::BaseNotInStratum => f.write_str("base is not contained in its stratum"),
            NeighborhoodFinding::BoundaryInterior(s) => write!(f, "interior simplex {s} lies in a lower stratum"),
            NeighborhoodFinding::ApexStratum { apex, level } => {
                write!(f, "apex {apex} of level {level} must lie outside X_{level}")
            }
            NeighborhoodFinding::ApexInBase(v) => write!(f, "apex {v} is a vertex of the base"),
            NeighborhoodFinding::DuplicateApex(v) => write!(f, "apex {v} is used twice"),
            NeighborhoodFinding::Containment { apex, cell } => {
                write!(f, "containment violation: L({apex}) uses {cell}, which is not in the previous level")
            }
            NeighborhoodFinding::LinkNotBall { apex, verdict } => {
                write!(f, "L({apex}) is not a ball (verdict {verdict:?})")
            }
            NeighborhoodFinding::Missing(s) => write!(f, "cone cell {s} is not in the space"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodReport {
    pub k: Option<usize>,
    pub findings: Vec<NeighborhoodFinding>,
}

impl NeighborhoodReport {
    pub fn is_valid(&self) -> bool {
        self.findings.is_empty()
    }
}

pub fn validate_stark_neighborhood(x: &StarkComplex, n: &StarkNeighborhood) -> NeighborhoodReport {
    let mut findings = Vec::new();
    let Some(k) = n.k(x.ambient_dim()).filter(|&k| k >= 1) else {
        findings.push(NeighborhoodFinding::Base(format!(
            "{} levels leave no stratum of dimension at least 1",
            n.levels.len()
        )));
        return NeighborhoodReport { k: None, findings };
    };
    match is_ball(&n.base, k) {
        Verdict::No => findings.push(NeighborhoodFinding::Base(format!("{} is not a {k}-ball", n.base))),
        _ if !n.base.is_subcomplex_of(x.stratum(k)) => findings.push(NeighborhoodFinding::BaseNotInStratum),
        _ => {
            let rim = n.base.boundary_complex();
            if let Some(s) = n.base.simplices().iter().find(|s| !rim.contains(s) && x.stratum(k - 1).contains(s)) {
                findings.push(NeighborhoodFinding::BoundaryInterior(s.clone()));
            }
        }
    }

    let mut earlier: BTreeSet<VertexId> = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut structural = true;
    for (i, level) in n.levels.iter().enumerate() {
        let l = k + i;
        for s in level {
            if x.stratum(l).has_vertex(s.apex) || !x.complex().has_vertex(s.apex) {
                findings.push(NeighborhoodFinding::ApexStratum { apex: s.apex, level: l });
            }
            if n.base.has_vertex(s.apex) {
                findings.push(NeighborhoodFinding::ApexInBase(s.apex));
                structural = false;
            }
            if !seen.insert(s.apex) {
                findings.push(NeighborhoodFinding::DuplicateApex(s.apex));
                structural = false;
            }
            for &cell in &s.cells {
                if !earlier.contains(&cell) {
                    findings.push(NeighborhoodFinding::Containment { apex: s.apex, cell });
                    structural = false;
                }
            }
        }
        earlier.extend(level.iter().map(|s| s.apex));
    }
    if !structural {
        return NeighborhoodReport { k: Some(k), findings };
    }

    let (extended, cones) = cone_pieces(&n.base, n).expect("structure checked above");
    let dims = n.link_dims(k);
    for s in n.levels.iter().flatten() {
        let mut link = n.base.clone();
        for u in &s.cells {
            link = link.union(&cones[u]);
        }
        let verdict = is_ball(&link, dims[&s.apex]);
        if verdict == Verdict::No {
            findings.push(NeighborhoodFinding::LinkNotBall { apex: s.apex, verdict });
        }
    }
    if let Some(f) = extended.facets().iter().find(|f| !x.complex().contains(f)) {
        findings.push(NeighborhoodFinding::Missing(f.clone()));
    }
    NeighborhoodReport { k: Some(k), findings }
}

/// Replaces `[A * ∂B]↑N` by `[∂A * B]↑N`. Only the levels of `N` are
/// consulted; the ball being retriangulated is the star `A * ∂B` of the inner
/// move in `X_k`, with `k = n - levels`.
///
/// Stratum convention for new simplices: a simplex of the new cone extension
/// lies in `X_l` exactly when `l ≥ k` and every apex it contains lies in
/// `X_l`. A fresh vertex of a 0-move therefore joins `X_k, ..., X_n`.
pub fn apply_stark_extended_bistellar(
    x: &StarkComplex,
    n: &StarkNeighborhood,
    inner: &BistellarMove,
) -> Result<StarkComplex> {
    let dim = x.ambient_dim();
    let illegal = |f: MoveFailure| Err(Error::IllegalMove(f));
    let k = match n.k(dim) {
        Some(k) if k >= 1 => k,
        _ => return illegal(MoveFailure::StratumOutOfRange(0)),
    };
    let (a, b) = (&inner.a, &inner.b);
    if inner.n() != k || !a.is_disjoint(b) {
        return illegal(MoveFailure::DimensionMismatch { a: a.clone(), b: b.clone(), n: k });
    }
    if !x.stratum(k).contains(a) {
        return Err(Error::NotPresent(a.clone()));
    }
    if x.stratum(k - 1).contains(a) {
        return illegal(MoveFailure::LowerStratum(a.clone()));
    }
    if b.dim() == 0 && x.complex().has_vertex(b.vertices()[0]) {
        return Err(Error::VertexCollision(b.vertices()[0]));
    }
    if x.complex().contains(b) {
        return illegal(MoveFailure::TargetPresent(b.clone()));
    }
    let inner_before = inner.before();
    if let Some(f) = inner_before.facets().iter().find(|f| !x.stratum(k).contains(f)) {
        return illegal(MoveFailure::ConeMismatch(f.clone()));
    }
    let before = cone_extend(&inner_before, n)?;
    if let Some(f) = before.facets().iter().find(|f| !x.complex().contains(f)) {
        return illegal(MoveFailure::ConeMismatch(f.clone()));
    }
    if let Some(f) = x.complex().facets_containing(a).find(|f| !before.is_facet(f)) {
        return illegal(MoveFailure::NeighborhoodTooSmall(f.clone()));
    }

    let after = cone_extend(&inner.after(), n)?;
    let apex_stratum: BTreeMap<VertexId, usize> =
        n.apexes().map(|v| (v, x.vertex_stratum(v).expect("apex is a vertex of X"))).collect();
    let mut strata = x.strata.clone();
    for (l, stratum) in strata.iter_mut().enumerate().skip(k) {
        let kept = after.facets().iter().filter_map(|f| {
            let v: Vec<VertexId> =
                f.vertices().iter().copied().filter(|v| apex_stratum.get(v).is_none_or(|&s| s <= l)).collect();
            (!v.is_empty()).then(|| Simplex::from_sorted(v))
        });
        *stratum = stratum.remove_containing(a).union(&Complex::from_facets(kept));
    }
    Ok(StarkComplex { strata })
}

/// Best-effort neighborhood discovery: the iterated filtered suspension of
/// `ball` inside `x` viewed as a filtered manifold, if one exists.
pub fn match_suspension(x: &StarkComplex, ball: &Complex, k: usize) -> Option<StarkNeighborhood> {
    let fc = FilteredComplex::new(x.strata.clone());
    let susp = find_filtered_suspension(&fc, ball, k)?;
    Some(StarkNeighborhood::from_suspension(ball.clone(), &susp))
}

/// Vertex counts of the open strata `X_k \ X_{k-1}`.
pub fn open_vertex_counts(x: &StarkComplex) -> Vec<usize> {
    let mut counts = alloc::vec![0; x.strata.len()];
    for v in x.complex().vertices() {
        if let Some(k) = x.vertex_stratum(v) {
            counts[k] += 1;
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo;
    use crate::filtration::{apply_extended_bistellar, ExtendedMove};
    use crate::invariants::homology;
    use alloc::vec;

    fn c(lists: &[&[u32]]) -> Complex {
        Complex::from_lists(lists.iter().map(|l| l.iter().copied())).unwrap()
    }

    fn s(v: &[u32]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn cone_extension_of_the_knot_neighborhood() {
        let demo = demo::knot_model();
        let n = &demo.neighborhoods[0];
        let edge = c(&[&[1, 2]]);
        let t = cone_extend(&edge, n).unwrap();
        assert_eq!(t, c(&[&[1, 2, 3, 5], &[1, 2, 4, 5], &[1, 2, 3, 6], &[1, 2, 4, 6]]));
        let sub = c(&[&[1, 7], &[2, 7]]);
        let t2 = cone_extend(&sub, n).unwrap();
        assert_eq!(t2.num_facets(), 8);
        assert_eq!(t2.induced(&[1, 2, 7].into_iter().collect()), sub);
        assert_eq!(cone_extend(&sub, n).unwrap(), t2);
        let flat = StarkNeighborhood { base: edge.clone(), levels: Vec::new() };
        assert_eq!(cone_extend(&edge, &flat).unwrap(), edge);
        assert_eq!(cone_extend(&c(&[&[1, 3]]), n), Err(Error::VertexCollision(3)));
    }

    #[test]
    fn knot_neighborhood_validates() {
        let demo = demo::knot_model();
        for n in &demo.neighborhoods {
            assert!(validate_stark_neighborhood(&demo.space, n).is_valid());
        }
    }

    #[test]
    fn containment_violation_is_named() {
        let demo = demo::knot_model();
        let mut n = demo.neighborhoods[0].clone();
        n.levels[0][0].cells.insert(5);
        let r = validate_stark_neighborhood(&demo.space, &n);
        assert!(r.findings.contains(&NeighborhoodFinding::Containment { apex: 3, cell: 5 }));
        assert!(cone_extend(&n.base, &n).is_err());
    }

    #[test]
    fn apex_inside_its_level_stratum_is_rejected() {
        let demo = demo::knot_model();
        let mut n = demo.neighborhoods[0].clone();
        // 3 lies in X_2, so it cannot be a level-2 apex
        n.levels[1][0] = ConeStep { apex: 3, cells: BTreeSet::new() };
        n.levels[0].remove(0);
        let r = validate_stark_neighborhood(&demo.space, &n);
        assert!(r.findings.iter().any(|f| matches!(f, NeighborhoodFinding::ApexStratum { apex: 3, level: 2 })));
    }

    #[test]
    fn knot_edge_subdivision() {
        let demo = demo::knot_model();
        let x = &demo.space;
        let inner = BistellarMove::new(s(&[1, 2]), s(&[7])).unwrap();
        let out = apply_stark_extended_bistellar(x, &demo.neighborhoods[0], &inner).unwrap();
        let before = open_vertex_counts(x);
        let after = open_vertex_counts(&out);
        assert_eq!(after[1], before[1] + 1);
        for k in [0, 2, 3] {
            assert_eq!(after[k], before[k]);
        }
        assert_eq!(out.stratum(1), &c(&[&[1, 7], &[2, 7]]));
        assert_eq!(out.stratum(2), &c(&[&[1, 3, 7], &[2, 3, 7]]));
        assert_eq!(homology(out.complex()), homology(x.complex()));
        assert!(out.validate().is_valid());
        let back = apply_stark_extended_bistellar(&out, &demo.neighborhoods[0], &inner.inverse()).unwrap();
        assert_eq!(&back, x);
    }

    #[test]
    fn subdivided_cell_blocks_the_move() {
        let demo = demo::knot_model();
        let x = &demo.space;
        let tet = s(&[1, 2, 3, 5]);
        let top = x.complex().stellar_subdivide(&tet, 9).unwrap();
        let mut strata = x.strata().to_vec();
        strata[3] = top;
        let y = StarkComplex::new(strata);
        let inner = BistellarMove::new(s(&[1, 2]), s(&[7])).unwrap();
        assert_eq!(
            apply_stark_extended_bistellar(&y, &demo.neighborhoods[0], &inner),
            Err(Error::IllegalMove(MoveFailure::ConeMismatch(tet)))
        );
    }

    #[test]
    fn filtered_case_coincides() {
        let fc = demo::filtered_s2_equator();
        let inner = BistellarMove::new(s(&[1, 2]), s(&[6])).unwrap();
        let susp = SuspensionData { levels: vec![(4, 5)] };
        let em = ExtendedMove { k: 1, inner: inner.clone(), susp: susp.clone() };
        let filtered = apply_extended_bistellar(&fc, &em).unwrap();
        let n = StarkNeighborhood::from_suspension(inner.before(), &susp);
        let x = StarkComplex::from(fc.clone());
        assert!(validate_stark_neighborhood(&x, &n).is_valid());
        let stark = apply_stark_extended_bistellar(&x, &n, &inner).unwrap();
        assert_eq!(stark.strata(), filtered.strata());
        assert_eq!(match_suspension(&x, &inner.before(), 1), Some(n));
    }

    #[test]
    fn join_fan_moves() {
        let demo = demo::join_fan(3);
        let x = &demo.space;
        let inner = BistellarMove::new(s(&[1, 2]), s(&[20])).unwrap();
        let out = apply_stark_extended_bistellar(x, &demo.neighborhoods[0], &inner).unwrap();
        assert!(out.validate().is_valid());
        assert_eq!(out.complex().num_facets(), x.complex().num_facets() + 3);
        assert_eq!(homology(out.complex()), homology(x.complex()));
        // the edge has three cofaces, so a neighborhood with fewer apexes is too small
        let mut short = demo.neighborhoods[0].clone();
        short.levels[0].pop();
        assert!(matches!(
            apply_stark_extended_bistellar(x, &short, &inner),
            Err(Error::IllegalMove(MoveFailure::NeighborhoodTooSmall(_)))
        ));
    }

    #[test]
    fn invalid_stratifications() {
        let bad = StarkComplex::new(vec![c(&[&[1]]), c(&[&[2, 3]]), c(&[&[2, 3, 4]])]);
        assert!(matches!(bad.validate().findings[0], StarkFinding::Nesting { lower: 0, .. }));
        let book = c(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        let r = StarkComplex::new(vec![Complex::empty(), Complex::empty(), book.clone()]).validate();
        assert!(!r.is_valid());
        // with the spine as a 1-stratum the open pages are disks
        let r = StarkComplex::new(vec![Complex::empty(), c(&[&[1, 2]]), book]).validate();
        assert!(r.is_valid(), "{r:?}");
        assert_eq!(r.components, vec![0, 1, 3]);
    }
}
