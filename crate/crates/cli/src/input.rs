use std::path::Path;

use geodex::atlas::atlas_build;
use geodex::graph::{Graph, LcfSpec};
use geodex::perm::{GroupSpec, PermGroup};
use geodex::symmetry::{automorphism_group, validate_group};

use crate::{Failure, Input};

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Parses a graph file by its first character: `{` edge-list JSON, `[`
/// LCF, otherwise graph6 or sparse6 (first non-empty line).
pub fn parse_graph_text(text: &str) -> Result<Graph, Failure> {
    let trimmed = text.trim();
    let parsed = if trimmed.starts_with('{') {
        Graph::from_edge_list_json(trimmed)
    } else if trimmed.starts_with('[') {
        trimmed.parse::<LcfSpec>().and_then(|spec| spec.decode())
    } else {
        let line = trimmed.lines().next().unwrap_or("").trim();
        Graph::from_graph6_or_sparse6(line)
    };
    parsed.map_err(Failure::input)
}

/// The graph and a display name.
pub fn load_graph(input: &Input) -> Result<(Graph, String), Failure> {
    match (&input.atlas, &input.graph) {
        (Some(name), _) => {
            let record = atlas_build(name).map_err(Failure::input)?;
            Ok((record.graph, record.name))
        }
        (None, Some(path)) => Ok((parse_graph_text(&read(path)?)?, path.display().to_string())),
        (None, None) => Err(Failure::usage("one of --atlas or --graph is required")),
    }
}

pub fn load_group_file(path: &Path) -> Result<PermGroup, Failure> {
    let spec = GroupSpec::parse_json(&read(path)?).map_err(Failure::input)?;
    spec.build().map_err(Failure::input)
}

/// The group from `path`, checked against the graph, or the full
/// automorphism group.
pub fn load_group(g: &Graph, path: Option<&Path>) -> Result<PermGroup, Failure> {
    match path {
        Some(path) => {
            let group = load_group_file(path)?;
            validate_group(g, &group).map_err(Failure::input)?;
            Ok(group)
        }
        None => automorphism_group(g).map_err(Failure::input),
    }
}
