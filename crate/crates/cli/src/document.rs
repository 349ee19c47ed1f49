//! The JSON complex document.
//!
//! ```json
//! {"dimension":2,"facets":[[1,2,3],[1,3,4]],
//!  "strata":[{"dim":0,"facets":[]},{"dim":1,"facets":[[1,3]]}],
//!  "stark_neighborhoods":[{"base_facets":[[1,3]],
//!    "levels":[[{"apex":2,"L_facets":[[1,3]]},{"apex":4,"L_facets":[[1,3]]}]]}],
//!  "metadata":{}}
//! ```
//!
//! `strata` lists the proper strata `M_0 ... M_{n-1}`; the facets of the
//! document are the top stratum. Each neighborhood level is a list of cones,
//! and `L_facets` must be the base together with cones of earlier apexes.

use std::collections::BTreeSet;

use pachner_core::{Complex, ConeStep, FilteredComplex, Simplex, StarkComplex, StarkNeighborhood, VertexId};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub dimension: i64,
    pub facets: Vec<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strata: Option<Vec<StratumDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stark_neighborhoods: Option<Vec<NeighborhoodDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumDoc {
    pub dim: usize,
    pub facets: Vec<Vec<VertexId>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NeighborhoodDoc {
    pub base_facets: Vec<Vec<VertexId>>,
    pub levels: Vec<Vec<ConeDoc>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeDoc {
    pub apex: VertexId,
    #[serde(rename = "L_facets")]
    pub l_facets: Vec<Vec<VertexId>>,
}

/// A parsed document, by the structure it carries.
#[derive(Debug, Clone)]
pub enum Parsed {
    Plain(Complex),
    Filtered(FilteredComplex),
    Stark(StarkComplex, Vec<StarkNeighborhood>),
}

impl Parsed {
    pub fn top(&self) -> &Complex {
        match self {
            Parsed::Plain(k) => k,
            Parsed::Filtered(fc) => fc.complex(),
            Parsed::Stark(x, _) => x.complex(),
        }
    }
}

fn complex_from(lists: &[Vec<VertexId>], field: &str) -> Result<Complex, CliError> {
    let mut facets = Vec::with_capacity(lists.len());
    for (i, l) in lists.iter().enumerate() {
        let s = Simplex::new(l.iter().copied()).map_err(|e| CliError::Schema(format!("{field}[{i}]: {e}")))?;
        facets.push(s);
    }
    Ok(Complex::from_facets(facets))
}

fn lists_of(k: &Complex) -> Vec<Vec<VertexId>> {
    k.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

pub fn parse(text: &str) -> Result<ComplexDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Schema(format!("line {} column {}: {e}", e.line(), e.column())))
}

/// Compact JSON followed by a newline. Facets are emitted in canonical order.
pub fn emit(doc: &ComplexDocument) -> String {
    let mut out = serde_json::to_string(doc).expect("documents serialize");
    out.push('\n');
    out
}

impl ComplexDocument {
    pub fn interpret(&self) -> Result<Parsed, CliError> {
        let top = complex_from(&self.facets, "facets")?;
        let Some(strata) = &self.strata else {
            if self.stark_neighborhoods.is_some() {
                return Err(CliError::Schema("stark_neighborhoods requires strata".into()));
            }
            return Ok(Parsed::Plain(top));
        };
        let mut levels = Vec::with_capacity(strata.len() + 1);
        for (i, s) in strata.iter().enumerate() {
            if s.dim != i {
                return Err(CliError::Schema(format!("strata[{i}].dim is {}, expected {i}", s.dim)));
            }
            levels.push(complex_from(&s.facets, &format!("strata[{i}].facets"))?);
        }
        levels.push(top);
        let Some(nbhds) = &self.stark_neighborhoods else {
            return Ok(Parsed::Filtered(FilteredComplex::new(levels)));
        };
        let mut parsed = Vec::with_capacity(nbhds.len());
        for (i, n) in nbhds.iter().enumerate() {
            parsed.push(parse_neighborhood(n, &format!("stark_neighborhoods[{i}]"))?);
        }
        Ok(Parsed::Stark(StarkComplex::new(levels), parsed))
    }

    pub fn from_complex(k: &Complex) -> Self {
        ComplexDocument {
            dimension: k.dim().map_or(-1, |d| d as i64),
            facets: lists_of(k),
            strata: None,
            stark_neighborhoods: None,
            metadata: None,
        }
    }

    pub fn from_strata(strata: &[Complex]) -> Self {
        let (top, lower) = strata.split_last().expect("at least the top stratum");
        let mut doc = ComplexDocument::from_complex(top);
        doc.dimension = lower.len() as i64;
        doc.strata = Some(
            lower.iter().enumerate().map(|(dim, m)| StratumDoc { dim, facets: lists_of(m) }).collect(),
        );
        doc
    }

    pub fn from_parsed(p: &Parsed) -> Self {
        match p {
            Parsed::Plain(k) => ComplexDocument::from_complex(k),
            Parsed::Filtered(fc) => ComplexDocument::from_strata(fc.strata()),
            Parsed::Stark(x, nbhds) => {
                let mut doc = ComplexDocument::from_strata(x.strata());
                doc.stark_neighborhoods = Some(nbhds.iter().map(neighborhood_doc).collect());
                doc
            }
        }
    }

    /// Sorted facets and strata; parse errors if a facet repeats a vertex.
    pub fn canonicalize(&self) -> Result<ComplexDocument, CliError> {
        let mut doc = ComplexDocument::from_parsed(&self.interpret()?);
        doc.dimension = self.dimension;
        doc.metadata = self.metadata.clone();
        Ok(doc)
    }
}

pub fn neighborhood_doc(n: &StarkNeighborhood) -> NeighborhoodDoc {
    let mut cones: std::collections::BTreeMap<VertexId, Complex> = Default::default();
    let mut levels = Vec::with_capacity(n.levels.len());
    for level in &n.levels {
        let mut steps: Vec<&ConeStep> = level.iter().collect();
        steps.sort_by_key(|s| s.apex);
        let mut out = Vec::with_capacity(steps.len());
        let mut built = Vec::new();
        for s in steps {
            let mut link = n.base.clone();
            for u in &s.cells {
                if let Some(c) = cones.get(u) {
                    link = link.union(c);
                }
            }
            out.push(ConeDoc { apex: s.apex, l_facets: lists_of(&link) });
            if let Ok(c) = link.cone(s.apex) {
                built.push((s.apex, c));
            }
        }
        cones.extend(built);
        levels.push(out);
    }
    NeighborhoodDoc { base_facets: lists_of(&n.base), levels }
}

pub fn parse_neighborhood(doc: &NeighborhoodDoc, field: &str) -> Result<StarkNeighborhood, CliError> {
    let base = complex_from(&doc.base_facets, &format!("{field}.base_facets"))?;
    let apexes: BTreeSet<VertexId> = doc.levels.iter().flatten().map(|c| c.apex).collect();
    let mut levels = Vec::with_capacity(doc.levels.len());
    for (i, level) in doc.levels.iter().enumerate() {
        let mut steps = Vec::with_capacity(level.len());
        for (j, cone) in level.iter().enumerate() {
            let l = complex_from(&cone.l_facets, &format!("{field}.levels[{i}][{j}].L_facets"))?;
            let cells = l.vertices().into_iter().filter(|v| apexes.contains(v)).collect();
            steps.push((ConeStep { apex: cone.apex, cells }, l));
        }
        levels.push(steps);
    }
    let n = StarkNeighborhood {
        base,
        levels: levels.iter().map(|l| l.iter().map(|(s, _)| s.clone()).collect()).collect(),
    };
    // when every cell is an earlier apex, L must be the base plus their cones
    let rank = n.apex_levels();
    let rebuilt = neighborhood_doc(&n);
    for (i, level) in levels.iter().enumerate() {
        for (j, (step, l)) in level.iter().enumerate() {
            if step.cells.iter().any(|u| rank.get(u).is_none_or(|&r| r >= i)) {
                continue;
            }
            let expected = rebuilt.levels[i].iter().find(|c| c.apex == step.apex).expect("same apexes");
            if expected.l_facets != lists_of(l) {
                return Err(CliError::Schema(format!(
                    "{field}.levels[{i}][{j}].L_facets: L({}) must be the base together with cones of earlier apexes",
                    step.apex
                )));
            }
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_document() {
        let doc = parse(r#"{"dimension":2,"facets":[[1,2,3],[1,3,4]]}"#).unwrap();
        let Parsed::Plain(k) = doc.interpret().unwrap() else { panic!() };
        assert_eq!(k.num_facets(), 2);
        assert_eq!(emit(&doc.canonicalize().unwrap()), "{\"dimension\":2,\"facets\":[[1,2,3],[1,3,4]]}\n");
    }

    #[test]
    fn canonical_order() {
        let doc = parse(r#"{"dimension":1,"facets":[[3,1],[2,1]],"metadata":{"b":1,"a":2}}"#).unwrap();
        let text = emit(&doc.canonicalize().unwrap());
        assert_eq!(text, "{\"dimension\":1,\"facets\":[[1,2],[1,3]],\"metadata\":{\"a\":2,\"b\":1}}\n");
        let again = emit(&parse(&text).unwrap().canonicalize().unwrap());
        assert_eq!(again, text);
    }

    #[test]
    fn duplicate_vertex_is_a_schema_error() {
        let doc = parse(r#"{"dimension":1,"facets":[[1,1]]}"#).unwrap();
        assert!(matches!(doc.interpret(), Err(CliError::Schema(_))));
        assert!(matches!(parse(r#"{"dimension":1}"#), Err(CliError::Schema(_))));
        assert!(matches!(parse(r#"{"dimension":1,"facets":[],"extra":0}"#), Err(CliError::Schema(_))));
    }

    #[test]
    fn stark_round_trip() {
        let demo = pachner_core::demo::knot_model();
        let parsed = Parsed::Stark(demo.space.clone(), demo.neighborhoods.clone());
        let doc = ComplexDocument::from_parsed(&parsed);
        let text = emit(&doc);
        let back = parse(&text).unwrap().interpret().unwrap();
        let Parsed::Stark(x, nbhds) = back else { panic!() };
        assert_eq!(x, demo.space);
        assert_eq!(nbhds, demo.neighborhoods);
    }
}
