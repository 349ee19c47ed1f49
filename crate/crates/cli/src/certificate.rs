//! Certificate files: the start fingerprint in hex and one tagged move per line.
//!
//! ```json
//! {"start_fingerprint":"9f2c01d4a6b3e870","moves":[
//! {"kind":"bistellar","a":[1,2,3],"b":[5]},
//! {"kind":"extended","k":1,"a":[1,2],"b":[6],"levels":[[4,5]]}
//! ]}
//! ```

use pachner_core::{BistellarMove, ExtendedMove, MoveRecord, MoveSequence, Simplex, SuspensionData, VertexId};
use serde::{Deserialize, Serialize};

use crate::document::{neighborhood_doc, parse_neighborhood, NeighborhoodDoc};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    start_fingerprint: String,
    moves: Vec<MoveDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MoveDoc {
    Bistellar { a: Vec<VertexId>, b: Vec<VertexId> },
    Extended { k: usize, a: Vec<VertexId>, b: Vec<VertexId>, levels: Vec<(VertexId, VertexId)> },
    Stark { a: Vec<VertexId>, b: Vec<VertexId>, neighborhood: NeighborhoodDoc },
}

impl MoveDoc {
    pub fn of(m: &MoveRecord) -> MoveDoc {
        let inner = m.inner();
        let a = inner.a.vertices().to_vec();
        let b = inner.b.vertices().to_vec();
        match m {
            MoveRecord::Bistellar(_) => MoveDoc::Bistellar { a, b },
            MoveRecord::Extended(e) => MoveDoc::Extended { k: e.k, a, b, levels: e.susp.levels.clone() },
            MoveRecord::Stark { neighborhood, .. } => {
                MoveDoc::Stark { a, b, neighborhood: neighborhood_doc(neighborhood) }
            }
        }
    }

    pub fn to_record(&self, index: usize) -> Result<MoveRecord, CliError> {
        let field = format!("moves[{index}]");
        let inner = |a: &[VertexId], b: &[VertexId]| -> Result<BistellarMove, CliError> {
            let a = Simplex::new(a.iter().copied()).map_err(|e| CliError::Schema(format!("{field}.a: {e}")))?;
            let b = Simplex::new(b.iter().copied()).map_err(|e| CliError::Schema(format!("{field}.b: {e}")))?;
            BistellarMove::new(a, b).map_err(|e| CliError::Schema(format!("{field}: {e}")))
        };
        Ok(match self {
            MoveDoc::Bistellar { a, b } => MoveRecord::Bistellar(inner(a, b)?),
            MoveDoc::Extended { k, a, b, levels } => MoveRecord::Extended(ExtendedMove {
                k: *k,
                inner: inner(a, b)?,
                susp: SuspensionData { levels: levels.clone() },
            }),
            MoveDoc::Stark { a, b, neighborhood } => MoveRecord::Stark {
                neighborhood: parse_neighborhood(neighborhood, &format!("{field}.neighborhood"))?,
                inner: inner(a, b)?,
            },
        })
    }
}

pub fn emit(seq: &MoveSequence) -> String {
    let mut out = format!("{{\"start_fingerprint\":\"{:016x}\",\"moves\":[", seq.start_fingerprint);
    let lines: Vec<String> =
        seq.moves.iter().map(|m| serde_json::to_string(&MoveDoc::of(m)).expect("moves serialize")).collect();
    if !lines.is_empty() {
        out.push('\n');
        out.push_str(&lines.join(",\n"));
        out.push('\n');
    }
    out.push_str("]}\n");
    out
}

pub fn parse(text: &str) -> Result<MoveSequence, CliError> {
    let doc: CertificateDoc = serde_json::from_str(text)
        .map_err(|e| CliError::Schema(format!("line {} column {}: {e}", e.line(), e.column())))?;
    let start_fingerprint = u64::from_str_radix(&doc.start_fingerprint, 16)
        .map_err(|e| CliError::Schema(format!("start_fingerprint: {e}")))?;
    let moves = doc.moves.iter().enumerate().map(|(i, m)| m.to_record(i)).collect::<Result<_, _>>()?;
    Ok(MoveSequence { start_fingerprint, moves })
}
