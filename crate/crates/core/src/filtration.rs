//! Filtered manifolds `M_0 ⊂ M_1 ⊂ ... ⊂ M_n = K` and extended bistellar
//! moves.
//!
//! An extended move performs a bistellar move `A * ∂B -> ∂A * B` inside the
//! stratum `M_k` and carries it through an iterated filtered suspension: the
//! level-`l` apexes lie in the open stratum `M_l \ M_{l-1}`, and the move
//! replaces `Σ^{n-k}(A * ∂B)` by `Σ^{n-k}(∂A * B)` in `K` while replacing
//! `Σ^{l-k}(A * ∂B)` by `Σ^{l-k}(∂A * B)` in each `M_l`.
//!
//! Local flatness of the strata is an input assumption and is never checked.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::Complex;
use crate::manifold::{check_combinatorial_manifold, Verdict};
use crate::moves::{bistellar_applicable_with, enumerate_moves_with, BistellarMove};
use crate::simplex::{Simplex, VertexId};
use crate::{Error, MoveFailure, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FilteredComplex {
    strata: Vec<Complex>,
}

impl FilteredComplex {
    /// `strata[k]` is `M_k`; the last entry is the whole complex. Use
    /// [`FilteredComplex::validate`] to check the filtration.
    pub fn new(strata: Vec<Complex>) -> Self {
        assert!(!strata.is_empty(), "a filtration has at least the top stratum");
        FilteredComplex { strata }
    }

    pub fn complex(&self) -> &Complex {
        self.strata.last().expect("nonempty")
    }

    /// `n`, the index of the top stratum.
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

    /// Least `k` with `s` in `M_k`.
    pub fn stratum_of(&self, s: &Simplex) -> Result<usize> {
        self.strata.iter().position(|m| m.contains(s)).ok_or_else(|| Error::NotPresent(s.clone()))
    }

    pub fn vertex_stratum(&self, v: VertexId) -> Option<usize> {
        self.strata.iter().position(|m| m.has_vertex(v))
    }

    pub fn validate(&self) -> FiltrationReport {
        validate_filtration(self)
    }

    /// Canonical text of every stratum, lowest first.
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

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiltrationFinding {
    /// `M_k` is not contained in `M_{k+1}`; the simplex is a witness.
    Nesting { lower: usize, simplex: Simplex },
    AmbientDimension { expected: usize, found: Option<usize> },
    Dimension { stratum: usize, found: usize },
    NotPure { stratum: usize },
    NotManifold { stratum: usize, offending: Vec<Simplex> },
    ZeroStratumNotPoints,
}

impl fmt::Display for FiltrationFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltrationFinding::Nesting { lower, simplex } => {
                write!(f, "nesting violation: {simplex} is in M_{lower} but not in M_{}", lower + 1)
            }
            FiltrationFinding::AmbientDimension { expected, found } => {
                write!(f, "top stratum should have dimension {expected}, found {found:?}")
            }
            FiltrationFinding::Dimension { stratum, found } => {
                write!(f, "M_{stratum} has dimension {found}")
            }
            FiltrationFinding::NotPure { stratum } => write!(f, "M_{stratum} is not pure"),
            FiltrationFinding::NotManifold { stratum, offending } => {
                write!(f, "M_{stratum} is not a combinatorial manifold (offending: {offending:?})")
            }
            FiltrationFinding::ZeroStratumNotPoints => f.write_str("M_0 must be a set of vertices"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumSummary {
    pub dim: usize,
    pub empty: bool,
    pub verdict: Verdict,
    pub has_boundary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationReport {
    pub findings: Vec<FiltrationFinding>,
    pub strata: Vec<StratumSummary>,
    /// Always false: local flatness is assumed, not verified.
    pub local_flatness_checked: bool,
}

impl FiltrationReport {
    pub fn is_valid(&self) -> bool {
        self.findings.is_empty()
    }
}

pub fn validate_filtration(fc: &FilteredComplex) -> FiltrationReport {
    let n = fc.ambient_dim();
    let mut findings = Vec::new();
    let mut summaries = Vec::new();
    for k in 0..n {
        if let Some(s) = fc.strata[k].facets().iter().find(|s| !fc.strata[k + 1].contains(s)) {
            findings.push(FiltrationFinding::Nesting { lower: k, simplex: s.clone() });
        }
    }
    if fc.complex().dim() != Some(n) {
        findings.push(FiltrationFinding::AmbientDimension { expected: n, found: fc.complex().dim() });
    }
    for (k, m) in fc.strata.iter().enumerate() {
        let mut summary = StratumSummary { dim: k, empty: m.is_empty(), verdict: Verdict::Yes, has_boundary: false };
        if let Some(d) = m.dim() {
            if k == 0 && d != 0 {
                findings.push(FiltrationFinding::ZeroStratumNotPoints);
            } else if d != k {
                findings.push(FiltrationFinding::Dimension { stratum: k, found: d });
            } else if !m.is_pure() {
                findings.push(FiltrationFinding::NotPure { stratum: k });
            } else {
                let report = check_combinatorial_manifold(m);
                summary.verdict = report.is_combinatorial_manifold;
                summary.has_boundary = !report.is_closed();
                if report.is_combinatorial_manifold == Verdict::No {
                    findings.push(FiltrationFinding::NotManifold { stratum: k, offending: report.offending_simplices });
                }
            }
        }
        summaries.push(summary);
    }
    FiltrationReport { findings, strata: summaries, local_flatness_checked: false }
}

/// Apex pairs of an iterated filtered suspension, one pair per level
/// `l = k+1, ..., n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuspensionData {
    pub levels: Vec<(VertexId, VertexId)>,
}

impl SuspensionData {
    /// `Σ^m` of `base` using the first `m` levels.
    pub fn suspend(&self, base: &Complex, m: usize) -> Result<Complex> {
        let mut out = base.clone();
        for &(p, q) in &self.levels[..m] {
            out = out.suspension(p, q)?;
        }
        Ok(out)
    }

    pub fn apexes(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.levels.iter().flat_map(|&(p, q)| [p, q])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedMove {
    /// Dimension of the stratum the inner move lives in.
    pub k: usize,
    pub inner: BistellarMove,
    pub susp: SuspensionData,
}

impl ExtendedMove {
    /// Same apexes, roles of `A` and `B` swapped.
    pub fn inverse(&self) -> ExtendedMove {
        ExtendedMove { k: self.k, inner: self.inner.inverse(), susp: self.susp.clone() }
    }
}

impl fmt::Display for ExtendedMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{}: {}", self.k, self.inner)?;
        for (p, q) in &self.susp.levels {
            write!(f, " ±({p},{q})")?;
        }
        Ok(())
    }
}

/// Searches for an `(n-k)`-fold iterated filtered suspension of `ball`
/// (a subcomplex of `M_k`) inside `K`, returning the lexicographically least
/// sequence of apex pairs.
pub fn find_filtered_suspension(fc: &FilteredComplex, ball: &Complex, k: usize) -> Option<SuspensionData> {
    let n = fc.ambient_dim();
    if k > n || !ball.is_subcomplex_of(fc.stratum(k)) {
        return None;
    }
    let mut levels = Vec::with_capacity(n - k);
    search_levels(fc, ball, k + 1, &mut levels).then_some(SuspensionData { levels })
}

fn search_levels(fc: &FilteredComplex, current: &Complex, level: usize, acc: &mut Vec<(VertexId, VertexId)>) -> bool {
    if level > fc.ambient_dim() {
        return true;
    }
    let m = fc.stratum(level);
    let Some(first) = current.facets().first() else { return false };
    let candidates: Vec<VertexId> = m
        .facets_containing(first)
        .flat_map(|f| f.vertices().iter().copied())
        .filter(|&v| !first.contains(v))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .filter(|&v| fc.vertex_stratum(v) == Some(level))
        .filter(|&v| current.facets().iter().all(|f| m.contains(&f.with_vertex(v))))
        .collect();
    for (i, &p) in candidates.iter().enumerate() {
        for &q in &candidates[i + 1..] {
            let next = current.suspension(p, q).expect("apexes are outside the lower stratum");
            acc.push((p, q));
            if search_levels(fc, &next, level + 1, acc) {
                return true;
            }
            acc.pop();
        }
    }
    false
}

/// Checks every precondition of `m` against `fc`.
pub fn check_extended(fc: &FilteredComplex, m: &ExtendedMove) -> Result<()> {
    let n = fc.ambient_dim();
    let illegal = |f: MoveFailure| Err(Error::IllegalMove(f));
    if m.k == 0 || m.k > n {
        return illegal(MoveFailure::StratumOutOfRange(m.k));
    }
    if m.susp.levels.len() != n - m.k {
        return illegal(MoveFailure::SuspensionDepth { expected: n - m.k, found: m.susp.levels.len() });
    }
    let (a, b) = (&m.inner.a, &m.inner.b);
    let mk = fc.stratum(m.k);
    if !mk.contains(a) {
        return Err(Error::NotPresent(a.clone()));
    }
    if fc.stratum(m.k - 1).contains(a) {
        return illegal(MoveFailure::LowerStratum(a.clone()));
    }
    if b.dim() == 0 && fc.complex().has_vertex(b.vertices()[0]) {
        return Err(Error::VertexCollision(b.vertices()[0]));
    }
    let fresh = if b.dim() == 0 { b.vertices()[0] } else { mk.fresh_vertex() };
    match bistellar_applicable_with(mk, a, fresh)? {
        Some(found) if found == m.inner => {}
        Some(found) => {
            return illegal(MoveFailure::TargetMismatch { expected: found.b, found: b.clone() });
        }
        None if mk.contains(b) => return illegal(MoveFailure::TargetPresent(b.clone())),
        None => return illegal(MoveFailure::LinkNotSimplexBoundary(a.clone())),
    }
    if fc.complex().contains(b) {
        return illegal(MoveFailure::TargetPresent(b.clone()));
    }
    let mut seen = BTreeSet::new();
    for (i, &(p, q)) in m.susp.levels.iter().enumerate() {
        let level = m.k + 1 + i;
        for apex in [p, q] {
            if fc.vertex_stratum(apex) != Some(level) || !seen.insert(apex) {
                return illegal(MoveFailure::ApexStratum { apex, level });
            }
        }
    }
    let before = m.inner.before();
    for level in m.k..=n {
        let body = m.susp.suspend(&before, level - m.k)?;
        let star: Vec<&Simplex> = fc.stratum(level).facets_containing(a).collect();
        if star.len() != body.num_facets() || star.iter().any(|f| !body.is_facet(f)) {
            return illegal(MoveFailure::SuspensionMismatch { level });
        }
    }
    Ok(())
}

pub fn apply_extended_bistellar(fc: &FilteredComplex, m: &ExtendedMove) -> Result<FilteredComplex> {
    check_extended(fc, m)?;
    let after = m.inner.after();
    let mut strata = fc.strata.clone();
    for (level, stratum) in strata.iter_mut().enumerate().skip(m.k) {
        let body = m.susp.suspend(&after, level - m.k)?;
        *stratum = stratum.remove_containing(&m.inner.a).union(&body);
    }
    Ok(FilteredComplex { strata })
}

/// Every applicable extended move, stratum by stratum (lowest first), with
/// inner moves in lexicographic order. Subdivisions use `fresh` labels
/// (or the default `max + 1` of the whole complex when `fresh` is empty).
pub fn enumerate_extended_moves(fc: &FilteredComplex, fresh: &[VertexId]) -> Vec<ExtendedMove> {
    let mut out = Vec::new();
    for k in 1..=fc.ambient_dim() {
        out.extend(enumerate_extended_in(fc, k, fresh));
    }
    out
}

pub fn enumerate_extended_in(fc: &FilteredComplex, k: usize, fresh: &[VertexId]) -> Vec<ExtendedMove> {
    let default = [fc.complex().fresh_vertex()];
    let fresh = if fresh.is_empty() { &default[..] } else { fresh };
    let mk = fc.stratum(k);
    if mk.is_empty() {
        return Vec::new();
    }
    let inner = enumerate_moves_with(mk, fc.stratum(k - 1), fresh).unwrap_or_default();
    let mut out = Vec::new();
    for m in inner {
        if let Some(em) = realize(fc, k, &m) {
            out.push(em);
        }
    }
    out
}

/// Wraps an inner move of `M_k` in the least filtered suspension of its star,
/// if one exists and the resulting extended move is applicable.
pub fn realize(fc: &FilteredComplex, k: usize, inner: &BistellarMove) -> Option<ExtendedMove> {
    let susp = find_filtered_suspension(fc, &inner.before(), k)?;
    let em = ExtendedMove { k, inner: inner.clone(), susp };
    check_extended(fc, &em).is_ok().then_some(em)
}

/// Vertex ids of each open stratum, for reports.
pub fn open_stratum_vertices(fc: &FilteredComplex) -> BTreeMap<usize, Vec<VertexId>> {
    let mut out: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    for v in fc.complex().vertices() {
        if let Some(k) = fc.vertex_stratum(v) {
            out.entry(k).or_default().push(v);
        }
    }
    out
}

/// Triangulation of `B x [-1, 1]` built by starring the two cells left after
/// triangulating the three level copies of `B` and the side walls
/// `∂B x [0, 1]`, `∂B x [-1, 0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallTimesInterval {
    pub complex: Complex,
    /// `B x {1}`, relabeled.
    pub top: Complex,
    /// `B x {0}`, with the original labels.
    pub middle: Complex,
    /// `B x {-1}`, relabeled.
    pub bottom: Complex,
    /// `B * {vplus, vminus}`, a subcomplex of `complex`.
    pub suspension: Complex,
    pub vplus: VertexId,
    pub vminus: VertexId,
}

/// `B x I` containing the suspension `ΣB` with `vplus` on the positive side
/// and `vminus` on the negative side. Level copies take labels
/// `base + rank(v)` (top) and `base + |V| + rank(v)` (bottom), where `base`
/// exceeds every label of `B` and both apexes.
pub fn ball_times_interval(
    ball: &Complex,
    order: &[VertexId],
    apexes: (VertexId, VertexId),
) -> Result<BallTimesInterval> {
    let (vplus, vminus) = apexes;
    if vplus == vminus {
        return Err(Error::VertexCollision(vplus));
    }
    for v in [vplus, vminus] {
        if ball.has_vertex(v) {
            return Err(Error::VertexCollision(v));
        }
    }
    let single_point = ball.num_facets() == 1 && ball.dim() == Some(0);
    if !single_point {
        let r = check_combinatorial_manifold(ball);
        if ball.is_empty() || !r.is_pseudomanifold || r.is_closed() {
            return Err(Error::NotABall(format!("{ball} is not a pseudomanifold with boundary")));
        }
    }
    let verts = ball.vertices();
    let as_set: BTreeSet<VertexId> = order.iter().copied().collect();
    if as_set.len() != order.len() || as_set != verts.iter().copied().collect() {
        return Err(Error::InvalidVertexOrder(format!("{order:?} is not an ordering of {verts:?}")));
    }
    let base = verts.iter().copied().chain([vplus, vminus]).max().expect("nonempty") + 1;
    let width = verts.len() as VertexId;
    let mid: BTreeMap<VertexId, VertexId> = verts.iter().map(|&v| (v, v)).collect();
    let top: BTreeMap<VertexId, VertexId> =
        verts.iter().enumerate().map(|(i, &v)| (v, base + i as VertexId)).collect();
    let bot: BTreeMap<VertexId, VertexId> =
        verts.iter().enumerate().map(|(i, &v)| (v, base + width + i as VertexId)).collect();

    let rim = ball.boundary_complex();
    let upper_wall = rim.product_with_interval_labeled(order, &mid, &top)?;
    let lower_wall = rim.product_with_interval_labeled(order, &mid, &bot)?;
    let top_copy = ball.relabel(|v| top[&v])?;
    let bottom_copy = ball.relabel(|v| bot[&v])?;
    let upper_cell = ball.union(&upper_wall).union(&top_copy);
    let lower_cell = ball.union(&lower_wall).union(&bottom_copy);
    let complex = upper_cell.cone(vplus)?.union(&lower_cell.cone(vminus)?);
    let suspension = ball.suspension(vplus, vminus)?;
    debug_assert!(suspension.is_subcomplex_of(&complex));
    Ok(BallTimesInterval {
        complex,
        top: top_copy,
        middle: ball.clone(),
        bottom: bottom_copy,
        suspension,
        vplus,
        vminus,
    })
}
