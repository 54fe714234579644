use std::collections::BTreeMap;

use plcomb::chambers::{chamber_sets, render_wiring, RenderFormat};
use plcomb::lusztig::{lusztig_cone, spanning_rays};
use plcomb::quivers::{enumerate_partial_quivers, quiver_pairs, PartialQuiver};
use plcomb::rectangles::{place_configuration, render_configuration_ascii, render_configuration_svg, v_p};
use plcomb::regions::graph::isomorphism_report;
use plcomb::regions::matching::match_classes_in;
use plcomb::regions::orthant::{decomposition_sizes, orthant_histogram, orthant_parts};
use plcomb::regions::transition_atlas;
use plcomb::verify::{run_suite, Suite};
use plcomb::weyl::{format_letters, parse_letters};
use plcomb::{
    class_graph, commutation_classes, detour_move_path, enumerate_reduced_words, find_move_path, is_reduced,
    positive_root_order, shortest_move_path, standard_words, Error, ReducedWord, Result,
};
use serde_json::{json, Value};

use crate::{
    ChambersArgs, Command, ConeCommand, Format, PathMethod, QuiversArgs, RectanglesArgs, RegionsArgs, RenderArgs,
    SuiteName, VerifyArgs, WordsCommand,
};

/// Candidate families examined per region when decomposing orthant parts.
const DECOMPOSITION_BUDGET: usize = 1_000_000;

pub enum Output {
    Json(Value),
    Text(String),
}

pub struct Outcome {
    pub output: Output,
    /// A verification suite reported a failing check.
    pub failed: bool,
}

impl From<Output> for Outcome {
    fn from(output: Output) -> Self {
        Self { output, failed: false }
    }
}

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Words(c) => words(c).map(Into::into),
        Command::Chambers(a) => chambers(a).map(Into::into),
        Command::Quivers(a) => quivers(a).map(Into::into),
        Command::Cone(c) => cone(c).map(Into::into),
        Command::Rectangles(a) => rectangles(a).map(Into::into),
        Command::Regions(a) => regions(a).map(Into::into),
        Command::Verify(a) => verify(a),
        Command::Render(a) => render(a).map(Into::into),
    }
}

fn histogram_json(h: &BTreeMap<usize, usize>) -> Value {
    Value::Object(h.iter().map(|(k, v)| (k.to_string(), json!(v))).collect())
}

fn roots_json(word: &ReducedWord) -> Vec<String> {
    positive_root_order(word).iter().map(ToString::to_string).collect()
}

fn words(c: WordsCommand) -> Result<Output> {
    Ok(Output::Json(match c {
        WordsCommand::Enumerate { rank, count } => {
            let words = enumerate_reduced_words(rank)?;
            if count {
                json!(words.len())
            } else {
                json!({ "rank": rank, "count": words.len(), "words": words })
            }
        }
        WordsCommand::Classes { rank, count } => {
            let classes = commutation_classes(rank)?;
            if count {
                json!(classes.len())
            } else {
                let list: Vec<Value> =
                    classes.iter().map(|c| json!({ "representative": c.representative, "size": c.size })).collect();
                json!({ "rank": rank, "count": classes.len(), "classes": list })
            }
        }
        WordsCommand::Graph { rank } => {
            let g = class_graph(rank)?;
            let reps: Vec<&ReducedWord> = g.classes.iter().map(|c| &c.representative).collect();
            json!({ "rank": rank, "classes": reps, "edges": g.edges, "connected": g.is_connected() })
        }
        WordsCommand::Standard { rank } => {
            let (j, jp) = standard_words(rank)?;
            json!({ "rank": rank, "j": j, "j_prime": jp })
        }
        WordsCommand::Check { word, rank } => {
            let letters = parse_letters(&word)?;
            let rank = match rank {
                Some(r) => r,
                None => letters.iter().copied().max().map(usize::from).ok_or_else(|| Error::MalformedWord {
                    input: word.clone(),
                    reason: "empty word needs an explicit rank".into(),
                })?,
            };
            let check = is_reduced(&letters, rank)?;
            let roots = if check.reduced && check.is_longest {
                json!(roots_json(&ReducedWord::new(rank, letters.clone())?))
            } else {
                Value::Null
            };
            json!({
                "word": format_letters(&letters, rank),
                "rank": rank,
                "length": letters.len(),
                "reduced": check.reduced,
                "longest": check.reduced && check.is_longest,
                "roots": roots,
            })
        }
        WordsCommand::Path { from, to, method } => {
            let src = ReducedWord::parse(&from, None)?;
            let dst = ReducedWord::parse(&to, Some(src.rank()))?;
            let moves = match method {
                PathMethod::Recursive => find_move_path(&src, &dst)?,
                PathMethod::Shortest => shortest_move_path(&src, &dst)?,
                PathMethod::Detour => detour_move_path(&src, &dst)?,
            };
            let name = match method {
                PathMethod::Recursive => "recursive",
                PathMethod::Shortest => "shortest",
                PathMethod::Detour => "detour",
            };
            json!({ "from": src, "to": dst, "method": name, "length": moves.len(), "moves": moves })
        }
    }))
}

fn render_format(f: Format) -> RenderFormat {
    match f {
        Format::Ascii => RenderFormat::Ascii,
        Format::Svg => RenderFormat::Svg,
    }
}

fn chambers(a: ChambersArgs) -> Result<Output> {
    let word = ReducedWord::parse(&a.word, a.rank)?;
    if let Some(f) = a.render {
        return Ok(Output::Text(render_wiring(&word, render_format(f))));
    }
    Ok(Output::Json(json!({ "word": word, "rank": word.rank(), "chambers": chamber_sets(&word) })))
}

fn set_text(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn quivers(a: QuiversArgs) -> Result<Output> {
    let (word, pairs): (Option<ReducedWord>, Vec<(Vec<usize>, PartialQuiver)>) = match &a.word {
        Some(w) => {
            let word = ReducedWord::parse(w, a.rank)?;
            let pairs = quiver_pairs(&word)?;
            (Some(word), pairs)
        }
        None => {
            let rank = a.rank.expect("clap requires --word or --rank");
            let pairs = enumerate_partial_quivers(rank)?
                .into_iter()
                .map(|q| (plcomb::quivers::chamber_set_from_quiver(&q), q))
                .collect();
            (None, pairs)
        }
    };
    if a.text {
        let mut out = String::new();
        for (set, q) in &pairs {
            if a.with_chamber_sets {
                out.push_str(&format!("{}\t{}\n", set_text(set), q));
            } else {
                out.push_str(&format!("{q}\n"));
            }
        }
        return Ok(Output::Text(out));
    }
    let rank = word.as_ref().map_or_else(|| a.rank.unwrap_or(0), ReducedWord::rank);
    let list: Vec<Value> = pairs
        .iter()
        .map(|(set, q)| if a.with_chamber_sets { json!({ "chamber_set": set, "quiver": q }) } else { json!(q) })
        .collect();
    Ok(Output::Json(json!({ "word": word, "rank": rank, "count": list.len(), "quivers": list })))
}

fn cone(c: ConeCommand) -> Result<Output> {
    let ConeCommand::Lusztig { word, rank, rays } = c;
    let word = ReducedWord::parse(&word, rank)?;
    let lc = lusztig_cone(&word);
    let mut out = json!({
        "word": word,
        "dim": lc.dim(),
        "cone": lc.cone,
        "inequalities": lc.describe(),
    });
    if rays {
        out["rays"] = serde_json::to_value(spanning_rays(&word)?).expect("rays serialize");
    }
    Ok(Output::Json(out))
}

fn rectangles(a: RectanglesArgs) -> Result<Output> {
    let q = PartialQuiver::parse(&a.quiver, a.rank)?;
    let cfg = place_configuration(&q)?;
    match a.render {
        Some(Format::Svg) => return Ok(Output::Text(render_configuration_svg(&cfg))),
        Some(Format::Ascii) => return Ok(Output::Text(render_configuration_ascii(&cfg))),
        None => {}
    }
    let phi: Vec<String> = cfg.phi_plus().iter().map(ToString::to_string).collect();
    Ok(Output::Json(json!({
        "quiver": q,
        "rank": q.rank(),
        "phi_plus": phi,
        "v_p": v_p(&q)?,
        "configuration": cfg,
    })))
}

fn regions(a: RegionsArgs) -> Result<Output> {
    let (j, jp) = standard_words(a.rank)?;
    let (src, dst) = match (&a.from, &a.to) {
        (Some(f), Some(t)) => (ReducedWord::parse(f, Some(a.rank))?, ReducedWord::parse(t, Some(a.rank))?),
        _ => (j.clone(), jp),
    };
    if (a.match_classes || a.orthant || a.graph) && src != j {
        return Err(Error::Invalid(
            "class matching, orthant parts and graphs use coordinates of the standard word j".into(),
        ));
    }
    let atlas = transition_atlas(&src, &dst)?;
    let mut out = json!({
        "rank": a.rank,
        "src": atlas.src,
        "dst": atlas.dst,
        "moves": atlas.path.len(),
        "regions": atlas.regions.len(),
        "min_facets": atlas.min_facets(),
    });
    if a.histogram {
        out["histogram"] = histogram_json(&atlas.facet_histogram());
    }
    let matching = if a.match_classes || a.graph { Some(match_classes_in(&atlas)?) } else { None };
    if let (true, Some(m)) = (a.match_classes, &matching) {
        out["matching"] = json!({
            "bijection": m.is_bijection(),
            "min_facet_regions": m.min_facet_regions,
            "matched": m.classes.len() - m.failures().len(),
            "classes": m.classes,
        });
    }
    if a.orthant {
        let parts = orthant_parts(&atlas, DECOMPOSITION_BUDGET)?;
        let sizes: BTreeMap<String, Vec<usize>> =
            decomposition_sizes(&parts).into_iter().map(|(k, v)| (k.to_string(), v.into_iter().collect())).collect();
        out["orthant"] = json!({
            "histogram": histogram_json(&orthant_histogram(&parts)),
            "decomposition_sizes": sizes,
            "parts": parts,
        });
    }
    if a.graph {
        let classes = class_graph(a.rank)?;
        out["graph"] = serde_json::to_value(isomorphism_report(&classes, &atlas, matching.as_ref())?)
            .expect("report serializes");
    }
    if a.atlas {
        out["atlas"] = serde_json::to_value(&atlas).expect("atlas serializes");
    }
    Ok(Output::Json(out))
}

fn verify(a: VerifyArgs) -> Result<Outcome> {
    let (suite, name) = match a.suite {
        SuiteName::A2 => (Suite::A2, "a2"),
        SuiteName::A3 => (Suite::A3, "a3"),
        SuiteName::A4 => (Suite::A4, "a4"),
        SuiteName::Properties => (Suite::Properties, "properties"),
        SuiteName::All => (Suite::All, "all"),
    };
    let checks = run_suite(suite, a.points)?;
    for c in &checks {
        eprintln!("{}", c.line());
    }
    let passed = checks.iter().all(|c| c.passed);
    let output = Output::Json(json!({ "suite": name, "passed": passed, "checks": checks }));
    Ok(Outcome { output, failed: !passed })
}

fn render(a: RenderArgs) -> Result<Output> {
    if let Some(w) = &a.word {
        let word = ReducedWord::parse(w, a.rank)?;
        return Ok(Output::Text(render_wiring(&word, render_format(a.format))));
    }
    rectangles(RectanglesArgs {
        quiver: a.quiver.expect("clap requires --word or --quiver"),
        rank: a.rank,
        render: Some(a.format),
    })
}
