use std::io::Write;
use std::path::Path;

use pachner_core::census::{count_move_schemas, count_move_schemas_for, stark_census, SchemaCensus};
use pachner_core::demo::{self, Demo};
use pachner_core::filtration::{ball_times_interval, enumerate_extended_moves};
use pachner_core::invariants::{euler_characteristic, f_vector, homology, HomologyGroup};
use pachner_core::moves::enumerate_moves;
use pachner_core::search::{
    flip_search, reduce, replay, stratified_align, AlignBudget, MoveTarget, ReduceBudget, SearchBudget,
};
use pachner_core::stark::{apply_stark_extended_bistellar, validate_stark_neighborhood};
use pachner_core::walk::{random_extended_walk, random_walk, seeded_rng};
use pachner_core::{check_combinatorial_manifold, Complex, MoveRecord, MoveSequence, Verdict};
use serde_json::{json, Value};

use crate::certificate::{self, MoveDoc};
use crate::document::{self, ComplexDocument, Parsed};
use crate::{read_text, write_to, Budget, Cli, CliError, Command, Format, MovesCommand};

/// A report rendered either as text lines or as one JSON value.
struct Report {
    lines: Vec<String>,
    json: Value,
}

impl Report {
    fn write(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        let text = match format {
            Format::Text => {
                let mut t = self.lines.join("\n");
                t.push('\n');
                t
            }
            Format::Structured => format!("{}\n", self.json),
        };
        write_to(None, &text, out)
    }
}

pub(crate) fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match &cli.command {
        Command::Validate(input) => {
            let (doc, parsed) = load(input.input.as_deref())?;
            let (valid, report) = validate(&doc, &parsed);
            report.write(cli.format, out)?;
            Ok(if valid { 0 } else { 1 })
        }
        Command::Invariants(input) => {
            let (_, parsed) = load(input.input.as_deref())?;
            invariants(&parsed).write(cli.format, out)?;
            Ok(0)
        }
        Command::Moves(MovesCommand::List { input, extended, avoid }) => {
            let (_, parsed) = load(input.input.as_deref())?;
            let avoid = load_avoid(avoid.as_deref())?;
            let moves = list_moves(&parsed, *extended, avoid)?;
            let report = Report {
                lines: moves.iter().map(|m| m.to_string()).collect(),
                json: Value::Array(moves.iter().map(|m| serde_json::to_value(MoveDoc::of(m)).expect("moves serialize")).collect()),
            };
            report.write(cli.format, out)?;
            Ok(0)
        }
        Command::Moves(MovesCommand::Apply { input, sequence }) => {
            let (doc, parsed) = load(input.input.as_deref())?;
            let seq = certificate::parse(&read_text(Some(sequence))?)?;
            let result = match parsed {
                Parsed::Plain(k) => Parsed::Plain(replay(&k, &seq)?),
                Parsed::Filtered(fc) => Parsed::Filtered(replay(&fc, &seq)?),
                Parsed::Stark(x, nbhds) => Parsed::Stark(replay(&x, &seq)?, nbhds),
            };
            let mut next = ComplexDocument::from_parsed(&result);
            next.metadata = doc.metadata;
            write_to(None, &document::emit(&next), out)?;
            Ok(0)
        }
        Command::Moves(MovesCommand::Walk { input, steps, seed, avoid }) => {
            let (_, parsed) = load(input.input.as_deref())?;
            let mut rng = seeded_rng(*seed);
            let seq = match &parsed {
                Parsed::Plain(k) => {
                    let avoid = load_avoid(avoid.as_deref())?.unwrap_or_else(Complex::empty);
                    let (_, moves) = random_walk(k, &avoid, *steps, &mut rng)?;
                    MoveSequence { start_fingerprint: k.fingerprint(), moves: moves.into_iter().map(MoveRecord::Bistellar).collect() }
                }
                Parsed::Filtered(fc) => {
                    let (_, moves) = random_extended_walk(fc, *steps, &mut rng)?;
                    MoveSequence { start_fingerprint: fc.fingerprint(), moves: moves.into_iter().map(MoveRecord::Extended).collect() }
                }
                Parsed::Stark(..) => return Err(CliError::Usage("random walks take a plain or filtered document".into())),
            };
            write_to(None, &certificate::emit(&seq), out)?;
            Ok(0)
        }
        Command::Search { input, target, avoid, budget, output } => {
            let (_, start) = load(input.input.as_deref())?;
            let (_, goal) = load(Some(target))?;
            let (Parsed::Plain(k1), Parsed::Plain(k2)) = (&start, &goal) else {
                return Err(CliError::Usage("search takes plain complexes; use align for filtrations".into()));
            };
            let avoid = load_avoid(avoid.as_deref())?.unwrap_or_else(Complex::empty);
            let found = flip_search(k1, k2, &avoid, &search_budget(budget))?;
            emit_certificate(found, output.as_deref(), out)
        }
        Command::Align { input, target, budget, output } => {
            let (_, start) = load(input.input.as_deref())?;
            let (_, goal) = load(Some(target))?;
            let (Parsed::Filtered(fc1), Parsed::Filtered(fc2)) = (&start, &goal) else {
                return Err(CliError::Usage("align takes two filtered documents".into()));
            };
            let budget = AlignBudget { search: search_budget(budget), ..AlignBudget::default() };
            let found = stratified_align(fc1, fc2, &budget)?;
            emit_certificate(found, output.as_deref(), out)
        }
        Command::Reduce { input, seed, max_moves, output, certificate: cert_path } => {
            let (doc, parsed) = load(input.input.as_deref())?;
            let Parsed::Plain(k) = &parsed else {
                return Err(CliError::Usage("reduce takes a plain complex".into()));
            };
            let mut budget = ReduceBudget { seed: *seed, ..ReduceBudget::default() };
            if let Some(m) = max_moves {
                budget.max_moves = *m;
            }
            let r = reduce(k, &budget);
            let certified = r.certifies_sphere();
            let report = Report {
                lines: vec![
                    format!("moves = {}", r.certificate.len()),
                    format!("f = {}", tuple(&f_vector(&r.complex))),
                    format!("high water = {}", r.high_water),
                    if certified { "certified sphere".into() } else { "budget exhausted".into() },
                ],
                json: json!({
                    "moves": r.certificate.len(),
                    "f_vector": f_vector(&r.complex),
                    "high_water": r.high_water,
                    "certified_sphere": certified,
                }),
            };
            report.write(cli.format, out)?;
            if let Some(p) = output {
                let mut reduced = ComplexDocument::from_complex(&r.complex);
                reduced.metadata = doc.metadata;
                write_to(Some(p), &document::emit(&reduced), out)?;
            }
            if let Some(p) = cert_path {
                write_to(Some(p), &certificate::emit(&r.certificate), out)?;
            }
            Ok(if certified { 0 } else { 1 })
        }
        Command::Demo { name, size } => {
            let Some(d) = demo::by_name(name, *size) else {
                return Err(CliError::Usage(format!("unknown demo {name:?}; known: {}", demo::NAMES.join(", "))));
            };
            let parsed = match d {
                Demo::Plain(k) => Parsed::Plain(k),
                Demo::Filtered(fc) => Parsed::Filtered(fc),
                Demo::Stark(s) => Parsed::Stark(s.space, s.neighborhoods),
            };
            let mut doc = ComplexDocument::from_parsed(&parsed);
            let mut meta = json!({ "demo": name });
            if let Some(n) = size {
                meta["size"] = json!(n);
            }
            doc.metadata = Some(meta);
            write_to(None, &document::emit(&doc), out)?;
            Ok(0)
        }
        Command::Extend { input, order, apexes } => {
            let (_, parsed) = load(input.input.as_deref())?;
            let Parsed::Plain(ball) = &parsed else {
                return Err(CliError::Usage("extend takes a plain ball".into()));
            };
            let order = order.clone().unwrap_or_else(|| ball.vertices());
            let (vplus, vminus) = match apexes.as_deref() {
                None => (ball.fresh_vertex(), ball.fresh_vertex() + 1),
                Some([p, q]) => (*p, *q),
                Some(_) => return Err(CliError::Usage("--apexes takes exactly two labels".into())),
            };
            let b = ball_times_interval(ball, &order, (vplus, vminus))?;
            let mut doc = ComplexDocument::from_complex(&b.complex);
            doc.metadata = Some(json!({
                "vplus": b.vplus,
                "vminus": b.vminus,
                "suspension_facets": facet_lists(&b.suspension),
                "top_facets": facet_lists(&b.top),
                "bottom_facets": facet_lists(&b.bottom),
            }));
            write_to(None, &document::emit(&doc), out)?;
            Ok(0)
        }
        Command::Census { dimension, strata, input } => {
            census(*dimension, strata.as_deref(), input.as_deref())?.write(cli.format, out)?;
            Ok(0)
        }
    }
}

fn load(path: Option<&Path>) -> Result<(ComplexDocument, Parsed), CliError> {
    let doc = document::parse(&read_text(path)?)?;
    let parsed = doc.interpret()?;
    Ok((doc, parsed))
}

fn load_avoid(path: Option<&Path>) -> Result<Option<Complex>, CliError> {
    path.map(|p| load(Some(p)).map(|(_, parsed)| parsed.top().clone())).transpose()
}

fn search_budget(b: &Budget) -> SearchBudget {
    let mut out = SearchBudget::default();
    if let Some(d) = b.depth {
        out.max_depth = d;
    }
    if let Some(n) = b.nodes {
        out.max_nodes = n;
    }
    out
}

fn emit_certificate(found: Option<MoveSequence>, path: Option<&Path>, out: &mut dyn Write) -> Result<u8, CliError> {
    let seq = found.ok_or_else(|| CliError::Failed("not found within budget".into()))?;
    write_to(path, &certificate::emit(&seq), out)?;
    Ok(0)
}

fn facet_lists(k: &Complex) -> Vec<Vec<u32>> {
    k.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

fn tuple<T: ToString>(items: &[T]) -> String {
    format!("({})", items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::Unknown => "unknown",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn validate(doc: &ComplexDocument, parsed: &Parsed) -> (bool, Report) {
    let mut lines = Vec::new();
    let mut findings: Vec<String> = Vec::new();
    let mut json = serde_json::Map::new();
    match parsed {
        Parsed::Plain(k) => {
            let declared = k.dim().map_or(-1, |d| d as i64);
            if doc.dimension != declared {
                findings.push(format!("declared dimension {} but the facets have dimension {declared}", doc.dimension));
            }
            let r = check_combinatorial_manifold(k);
            if !r.is_pseudomanifold {
                findings.push("not a pseudomanifold".into());
            }
            if r.is_combinatorial_manifold == Verdict::No {
                findings.push("not a combinatorial manifold".into());
            }
            let offending: Vec<String> = r.offending_simplices.iter().map(ToString::to_string).collect();
            lines.push(format!("dimension: {declared}"));
            lines.push(format!("pseudomanifold: {}", yes_no(r.is_pseudomanifold)));
            lines.push(format!("combinatorial manifold: {}", verdict(r.is_combinatorial_manifold)));
            lines.push(format!("boundary: {}", if r.is_closed() { "empty".to_string() } else { r.boundary_complex.to_string() }));
            if !offending.is_empty() {
                lines.push(format!("offending: {}", offending.join(" ")));
            }
            json.insert("kind".into(), json!("complex"));
            json.insert("pseudomanifold".into(), json!(r.is_pseudomanifold));
            json.insert("combinatorial_manifold".into(), json!(verdict(r.is_combinatorial_manifold)));
            json.insert("boundary_facets".into(), json!(facet_lists(&r.boundary_complex)));
            json.insert("offending".into(), json!(offending));
        }
        Parsed::Filtered(fc) => {
            if doc.dimension != fc.ambient_dim() as i64 {
                findings.push(format!("declared dimension {} but {} strata are listed", doc.dimension, fc.ambient_dim() + 1));
            }
            let r = fc.validate();
            findings.extend(r.findings.iter().map(ToString::to_string));
            let mut strata = Vec::new();
            for (i, s) in r.strata.iter().enumerate() {
                if s.empty {
                    lines.push(format!("M_{i}: empty"));
                } else {
                    lines.push(format!("M_{i}: manifold {}, boundary {}", verdict(s.verdict), yes_no(s.has_boundary)));
                }
                strata.push(json!({"dim": i, "empty": s.empty, "manifold": verdict(s.verdict), "boundary": s.has_boundary}));
            }
            lines.push("local flatness: assumed, not checked".into());
            json.insert("kind".into(), json!("filtration"));
            json.insert("strata".into(), json!(strata));
            json.insert("local_flatness_checked".into(), json!(r.local_flatness_checked));
        }
        Parsed::Stark(x, nbhds) => {
            if doc.dimension != x.ambient_dim() as i64 {
                findings.push(format!("declared dimension {} but {} strata are listed", doc.dimension, x.ambient_dim() + 1));
            }
            let r = x.validate();
            findings.extend(r.findings.iter().map(ToString::to_string));
            lines.push(format!("open components per stratum: {}", tuple(&r.components)));
            if r.inconclusive {
                lines.push("some component checks were inconclusive".into());
            }
            let mut reports = Vec::new();
            for (i, n) in nbhds.iter().enumerate() {
                let nr = validate_stark_neighborhood(x, n);
                let k = nr.k.map_or("?".to_string(), |k| k.to_string());
                lines.push(format!("neighborhood {i}: stratum {k}, {}", if nr.is_valid() { "valid" } else { "invalid" }));
                findings.extend(nr.findings.iter().map(|f| format!("neighborhood {i}: {f}")));
                reports.push(json!({"k": nr.k, "valid": nr.is_valid()}));
            }
            json.insert("kind".into(), json!("stark"));
            json.insert("components".into(), json!(r.components));
            json.insert("inconclusive".into(), json!(r.inconclusive));
            json.insert("neighborhoods".into(), json!(reports));
        }
    }
    let valid = findings.is_empty();
    lines.extend(findings.iter().cloned());
    lines.push(if valid { "valid".into() } else { "invalid".into() });
    json.insert("findings".into(), json!(findings));
    json.insert("valid".into(), json!(valid));
    (valid, Report { lines, json: Value::Object(json) })
}

fn homology_json(h: &[HomologyGroup]) -> Value {
    h.iter()
        .map(|g| json!({"betti": g.betti, "torsion": g.torsion.iter().map(ToString::to_string).collect::<Vec<_>>()}))
        .collect()
}

fn invariants(parsed: &Parsed) -> Report {
    let describe = |k: &Complex| {
        let f = f_vector(k);
        let chi = euler_characteristic(k);
        let h = homology(k);
        let text = format!("f = {}\nchi = {chi}\nH = {}", tuple(&f), tuple(&h));
        (text, json!({"f_vector": f, "euler_characteristic": chi, "homology": homology_json(&h)}))
    };
    let (text, mut json) = describe(parsed.top());
    let mut lines = vec![text];
    let strata = match parsed {
        Parsed::Plain(_) => None,
        Parsed::Filtered(fc) => Some(fc.strata()),
        Parsed::Stark(x, _) => Some(x.strata()),
    };
    if let Some(strata) = strata {
        let (_, lower) = strata.split_last().expect("top stratum");
        let mut per = Vec::new();
        for (i, m) in lower.iter().enumerate() {
            let (t, j) = describe(m);
            lines.push(format!("M_{i}: {}", t.replace('\n', ", ")));
            per.push(j);
        }
        json["strata"] = Value::Array(per);
    }
    Report { lines, json }
}

fn list_moves(parsed: &Parsed, extended: bool, avoid: Option<Complex>) -> Result<Vec<MoveRecord>, CliError> {
    if !extended {
        let avoid = match (avoid, parsed) {
            (Some(a), _) => a,
            (None, Parsed::Plain(_)) => Complex::empty(),
            (None, Parsed::Filtered(fc)) => fc.stratum(fc.ambient_dim().saturating_sub(1)).clone(),
            (None, Parsed::Stark(x, _)) => x.stratum(x.ambient_dim().saturating_sub(1)).clone(),
        };
        return Ok(enumerate_moves(parsed.top(), &avoid)?.into_iter().map(MoveRecord::Bistellar).collect());
    }
    match parsed {
        Parsed::Plain(_) => Err(CliError::Usage("--extended needs a filtered or stratified document".into())),
        Parsed::Filtered(fc) => Ok(enumerate_extended_moves(fc, &[]).into_iter().map(MoveRecord::Extended).collect()),
        Parsed::Stark(x, nbhds) => {
            let n = x.ambient_dim();
            let mut out = Vec::new();
            for nb in nbhds {
                let Some(k) = nb.k(n).filter(|&k| k >= 1) else { continue };
                let fresh = x.complex().fresh_vertex();
                for inner in pachner_core::moves::enumerate_moves_with(x.stratum(k), x.stratum(k - 1), &[fresh])? {
                    if apply_stark_extended_bistellar(x, nb, &inner).is_ok() {
                        out.push(MoveRecord::Stark { neighborhood: nb.clone(), inner });
                    }
                }
            }
            Ok(out)
        }
    }
}

fn census_report(c: &SchemaCensus) -> Report {
    let mut lines: Vec<String> = c
        .pairs
        .iter()
        .map(|(s, t)| format!("M_{}: {}-move <-> {}-move, suspension depth {}", s.k, s.j, t.j, s.depth))
        .collect();
    lines.push(format!("inverse pairs = {}", c.pair_count()));
    lines.push(format!("n^2 - n = {}", c.quoted_figure));
    let pairs: Vec<Value> =
        c.pairs.iter().map(|(s, t)| json!({"k": s.k, "j": s.j, "inverse_j": t.j, "depth": s.depth})).collect();
    Report { lines, json: json!({"n": c.n, "pairs": pairs, "pair_count": c.pair_count(), "quoted_figure": c.quoted_figure}) }
}

fn census(dimension: Option<usize>, strata: Option<&[usize]>, input: Option<&Path>) -> Result<Report, CliError> {
    if input.is_some() || dimension.is_none() {
        let (_, parsed) = load(input)?;
        return Ok(match parsed {
            Parsed::Plain(k) => census_report(&count_move_schemas(k.dim().unwrap_or(0))),
            Parsed::Filtered(fc) => {
                let dims: Vec<usize> = (0..=fc.ambient_dim()).filter(|&i| !fc.stratum(i).is_empty()).collect();
                census_report(&count_move_schemas_for(fc.ambient_dim(), &dims))
            }
            Parsed::Stark(x, nbhds) => {
                let c = stark_census(&x, &nbhds);
                let mut lines: Vec<String> =
                    c.types.iter().map(|t| format!("neighborhood type: k = {}, link dimensions {:?}", t.k, t.levels)).collect();
                lines.push(format!("inverse pairs = {}", c.pairs));
                let types: Vec<Value> = c.types.iter().map(|t| json!({"k": t.k, "levels": t.levels})).collect();
                Report { lines, json: json!({"types": types, "pairs": c.pairs}) }
            }
        });
    }
    let n = dimension.expect("checked above");
    Ok(census_report(&match strata {
        Some(s) => count_move_schemas_for(n, s),
        None => count_move_schemas(n),
    }))
}
