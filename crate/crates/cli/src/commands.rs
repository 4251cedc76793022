use std::path::Path;

use geodex::atlas::{atlas_build, atlas_get as catalog_get, CATALOG};
use geodex::claims::run_all;
use geodex::graph::EdgeList;
use geodex::perm::{GroupSpec, PermGroup};
use geodex::quotient::{girth_bound_check, normal_quotient, verdict_json, verify_reduction};
use geodex::symmetry::{
    bi_analysis, is_s_arc_transitive, is_s_geodesic_transitive, transitivity_degrees, weiss_divisibility_check,
    GroupSummary, TransitivityOptions,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{load_graph, load_group, load_group_file};
use crate::{Failure, Format, Input};

type Outcome = Result<u8, Failure>;

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or("-".to_string(), |v| v.to_string())
}

pub fn atlas_list(format: Format) -> Outcome {
    let mut entries = Vec::new();
    for name in CATALOG {
        let record = atlas_build(name).map_err(Failure::input)?;
        entries.push(json!({
            "name": name,
            "aliases": record.aliases,
            "vertices": record.graph.n(),
            "source": record.source,
        }));
    }
    let families = ["K{n},{n} for 1 <= n <= 16", "C{n} for 3 <= n <= 512"];
    if format == Format::Json {
        print_json(&json!({ "graphs": entries, "families": families }));
    } else {
        for e in &entries {
            let aliases: Vec<&str> = e["aliases"].as_array().unwrap().iter().filter_map(Value::as_str).collect();
            let aka = if aliases.is_empty() { String::new() } else { format!(" (also {})", aliases.join(", ")) };
            println!("{:<14} {:>4} vertices  {}{aka}", e["name"].as_str().unwrap(), e["vertices"], e["source"].as_str().unwrap());
        }
        for f in families {
            println!("{f}");
        }
    }
    Ok(0)
}

pub fn atlas_get(name: &str, format: Format) -> Outcome {
    let record = catalog_get(name).map_err(Failure::input)?;
    match format {
        Format::Graph6 => println!("{}", record.graph.to_graph6()),
        Format::Sparse6 => println!("{}", record.graph.to_sparse6()),
        Format::Json => print_json(&json!({
            "name": record.name,
            "aliases": record.aliases,
            "source": record.source,
            "graph": EdgeList::from_graph(&record.graph),
            "expected": record.expected,
        })),
        Format::Text => {
            let e = &record.expected;
            println!("name: {}", record.name);
            println!("source: {}", record.source);
            println!("vertices: {}", record.graph.n());
            println!("edges: {}", record.graph.edge_count());
            println!("valency: {}", opt(e.valency));
            println!("girth: {}", opt(e.girth));
            println!("diameter: {}", opt(e.diameter));
            println!("intersection array: {}", opt(e.intersection_array.as_ref()));
            println!("|Aut|: {}", opt(e.aut_order));
            println!("arc degree: {}", opt(e.arc_degree));
            println!("geodesic degree: {}", opt(e.geodesic_degree));
            println!("graph6: {}", record.graph.to_graph6());
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct Analysis {
    graph: String,
    vertices: usize,
    edges: usize,
    connected: bool,
    valency: Option<usize>,
    degree_sequence: Vec<usize>,
    girth: Option<usize>,
    diameter: Option<usize>,
    bipartite: bool,
    complete_multipartite: bool,
    part_sizes: Option<Vec<usize>>,
    intersection_array: Option<String>,
    generalized_polygon: Option<usize>,
}

pub fn analyze(input: &Input, format: Format) -> Outcome {
    let (g, name) = load_graph(input)?;
    let shape = g.classify_shape();
    let diameter = g.diameter().ok();
    let intersection_array = if g.is_connected() {
        g.intersection_array().map_err(Failure::input)?.map(|a| a.to_string())
    } else {
        None
    };
    let mut degree_sequence = g.degree_sequence();
    degree_sequence.dedup();
    let report = Analysis {
        graph: name,
        vertices: g.n(),
        edges: g.edge_count(),
        connected: g.is_connected(),
        valency: g.valency(),
        degree_sequence,
        girth: g.girth().ok(),
        diameter,
        bipartite: g.is_bipartite(),
        complete_multipartite: shape.is_complete_multipartite(),
        part_sizes: shape.part_sizes(),
        intersection_array,
        generalized_polygon: diameter.filter(|&d| d >= 2 && g.is_generalized_polygon(d)),
    };
    if format == Format::Json {
        print_json(&report);
    } else {
        println!("graph: {}", report.graph);
        println!("vertices: {}", report.vertices);
        println!("edges: {}", report.edges);
        println!("connected: {}", report.connected);
        println!("valency: {}", opt(report.valency));
        println!("girth: {}", opt(report.girth));
        println!("diameter: {}", opt(report.diameter));
        println!("bipartite: {}", report.bipartite);
        println!("complete multipartite: {}", report.complete_multipartite);
        println!("intersection array: {}", opt(report.intersection_array.as_ref()));
        println!("generalized polygon: {}", report.generalized_polygon.map_or("no".into(), |d| format!("{d}-gon")));
    }
    Ok(0)
}

pub fn aut(input: &Input, format: Format) -> Outcome {
    let (g, name) = load_graph(input)?;
    let group = load_group(&g, None)?;
    let summary = GroupSummary::of(&group);
    let vertex_transitive = group.is_transitive();
    if format == Format::Json {
        print_json(&json!({
            "graph": name,
            "order": summary.order,
            "orbit_count": summary.orbit_count,
            "vertex_transitive": vertex_transitive,
            "generators": summary.generators,
            "group": GroupSpec::from_group(&group),
        }));
    } else {
        println!("graph: {name}");
        println!("|Aut|: {}", summary.order);
        println!("orbits: {}", summary.orbit_count);
        println!("vertex-transitive: {vertex_transitive}");
        for gen in &summary.generators {
            println!("generator: {gen}");
        }
    }
    Ok(0)
}

pub fn transitivity(
    input: &Input,
    group_path: Option<&Path>,
    s: Option<usize>,
    no_shortcut: bool,
    format: Format,
) -> Outcome {
    let (g, name) = load_graph(input)?;
    if !g.is_connected() {
        return Err(Failure::input("the graph is disconnected"));
    }
    let group = load_group(&g, group_path)?;
    let options = TransitivityOptions { use_shortcut: !no_shortcut };
    let report = transitivity_degrees(&g, &group, options).map_err(Failure::input)?;
    let action = bi_analysis(&g, &group).ok().map(|a| a.summary());
    let level = match s {
        Some(s) => {
            let arc = is_s_arc_transitive(&g, &group, s).map_err(Failure::input)?;
            let geodesic = if s <= report.diameter {
                Some(is_s_geodesic_transitive(&g, &group, s).map_err(Failure::input)?)
            } else {
                None
            };
            let stabilizer = if s >= 4 {
                match weiss_divisibility_check(&g, &group, s) {
                    Ok(r) => serde_json::to_value(r).unwrap(),
                    Err(e) => json!({ "error": e.to_string() }),
                }
            } else {
                Value::Null
            };
            Some(json!({ "s": s, "arc_transitive": arc, "geodesic_transitive": geodesic, "stabilizer_check": stabilizer }))
        }
        None => None,
    };
    if format == Format::Json {
        print_json(&json!({
            "graph": name,
            "group_order": group.order(),
            "transitivity": report,
            "action": action,
            "level": level,
        }));
    } else {
        println!("graph: {name}");
        println!("group order: {}", group.order());
        println!("arc degree: {}", report.arc_transitive_up_to.map_or("unbounded".into(), |x| x.to_string()));
        println!("geodesic degree: {}", report.geodesic_transitive_up_to);
        println!("diameter: {}", report.diameter);
        println!("geodesic transitive: {}", report.geodesic_transitive);
        if let Some(l) = report.shortcut_level {
            println!("b_s <= 1 shortcut at s = {l}");
        }
        if let Some(a) = &action {
            println!(
                "primitive: {}  quasiprimitive: {}  biprimitive: {}  biquasiprimitive: {}",
                a.primitive, a.quasiprimitive, a.biprimitive, a.biquasiprimitive
            );
        }
        if let Some(l) = &level {
            println!("s = {}: arc transitive {}, geodesic transitive {}", l["s"], l["arc_transitive"], l["geodesic_transitive"]);
            if !l["stabilizer_check"].is_null() {
                println!("stabilizer check: {}", l["stabilizer_check"]);
            }
        }
    }
    Ok(0)
}

fn minimal_normal(group: &PermGroup) -> Result<Vec<PermGroup>, Failure> {
    let mut minimal = group.normal_structure().map_err(Failure::input)?.minimal;
    minimal.sort_by_key(|m| (m.order(), m.all_orbits().len()));
    Ok(minimal)
}

pub fn quotient(
    input: &Input,
    group_path: Option<&Path>,
    normal: Option<&str>,
    s: Option<usize>,
    reduce: bool,
    format: Format,
) -> Outcome {
    let (g, name) = load_graph(input)?;
    let group = load_group(&g, group_path)?;
    let Some(normal) = normal else {
        let minimal = minimal_normal(&group)?;
        let listed: Vec<Value> = minimal
            .iter()
            .enumerate()
            .map(|(i, m)| json!({ "index": i, "order": m.order(), "orbit_count": m.all_orbits().len() }))
            .collect();
        if format == Format::Json {
            print_json(&json!({ "graph": name, "minimal_normal_subgroups": listed }));
        } else {
            println!("minimal normal subgroups of G (pass --normal minimal:<index>):");
            for m in &listed {
                println!("  {}: order {}, {} orbits", m["index"], m["order"], m["orbit_count"]);
            }
        }
        return Ok(0);
    };
    let n = match normal.strip_prefix("minimal:") {
        Some(index) => {
            let i: usize = index.parse().map_err(|_| Failure::usage(format!("bad index {index:?}")))?;
            minimal_normal(&group)?
                .into_iter()
                .nth(i)
                .ok_or_else(|| Failure::input(format!("no minimal normal subgroup with index {i}")))?
        }
        None => load_group_file(Path::new(normal))?,
    };
    let result = normal_quotient(&g, &group, &n).map_err(Failure::input)?;
    let s = s.or(result.girth_pair.0.map(|k| k / 2 + 1)).unwrap_or(1);
    let bound = match girth_bound_check(&g, &group, &result, s) {
        Ok(r) => serde_json::to_value(r).unwrap(),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let reduction = if reduce {
        Some(verdict_json(&verify_reduction(&g, &group, &n, s)).map_err(Failure::input)?)
    } else {
        None
    };
    let summary = result.summary();
    if format == Format::Json {
        print_json(&json!({
            "graph": name,
            "quotient": summary,
            "quotient_graph6": result.quotient.to_graph6(),
            "girth_bound": bound,
            "reduction": reduction,
        }));
    } else {
        println!("graph: {name}");
        println!("|N|: {}  orbits: {}  sizes: {:?}", summary.n_order, summary.orbit_count, summary.orbit_sizes);
        println!("induced group order: {}  kernel order: {}", summary.induced_order, summary.kernel_order);
        println!("cover: {}", summary.is_cover);
        println!("girth pair: ({}, {})", opt(summary.girth), opt(summary.quotient_girth));
        println!("quotient valency: {}", opt(summary.quotient_valency));
        println!("quotient graph6: {}", result.quotient.to_graph6());
        if summary.multi_edges > 0 || summary.internal_edges > 0 {
            println!("multi-edges: {}  edges inside orbits: {}", summary.multi_edges, summary.internal_edges);
        }
        if let Some(err) = bound.get("error") {
            println!("girth bound (s = {s}): {}", err.as_str().unwrap_or_default());
        } else {
            println!(
                "girth bound (s = {s}): {} <= {} <= {}, quotient {}-arc transitive: {}, verdict {}",
                bound["lower_bound"], bound["quotient_girth"], bound["girth"], s.saturating_sub(1),
                bound["quotient_arc_transitive"], bound["verdict"]
            );
        }
        if let Some(r) = &reduction {
            println!("reduction: {}", r["case"].as_str().unwrap_or_default());
            println!("evidence: {}", r["evidence"]);
        }
    }
    Ok(0)
}

pub fn verify(format: Format) -> Outcome {
    let checks = run_all();
    let passed = checks.iter().all(|c| c.passed);
    if format == Format::Json {
        print_json(&json!({ "passed": passed, "checks": checks }));
    } else {
        for c in &checks {
            println!("{} {:>2} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.name, c.detail);
        }
        println!("{} of {} checks passed", checks.iter().filter(|c| c.passed).count(), checks.len());
    }
    Ok(if passed { 0 } else { 1 })
}
