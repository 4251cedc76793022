use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use super::AtlasError;
use crate::graph::{Graph, IntersectionArray, LcfSpec};
use crate::symmetry::{automorphism_group, transitivity_degrees, TransitivityOptions};

const BIGGS_SMITH: &str = include_str!("../../data/biggs-smith.json");
const HEXAGON_Q2: &str = include_str!("../../data/hexagon-q2.json");

/// Environment variable naming a directory whose `<name>.json` files
/// replace the embedded data.
pub const DATA_DIR_VAR: &str = "GEODEX_DATA_DIR";

/// Invariants a catalog entry must reproduce. Unset fields are not
/// checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub valency: Option<usize>,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub aut_order: Option<u128>,
    pub intersection_array: Option<IntersectionArray>,
    pub arc_degree: Option<usize>,
    pub geodesic_degree: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct NamedGraphRecord {
    pub name: String,
    pub aliases: Vec<String>,
    /// How the graph is built: LCF string, geometry, or data file.
    pub source: String,
    pub graph: Graph,
    pub expected: Expected,
}

/// Fixed entries; `K{n,n}` and `C{n}` are parameterised on top of these.
pub const CATALOG: [&str; 7] =
    ["foster", "biggs-smith", "tutte-coxeter", "heawood", "petersen", "desargues", "hexagon-q2"];

/// Alternative names accepted by [`atlas_build`].
pub const ALIASES: [(&str, &str); 6] = [
    ("tutte-8-cage", "tutte-coxeter"),
    ("delta-4-2", "tutte-coxeter"),
    ("delta-3-2", "heawood"),
    ("delta-5-2", "hexagon-q2"),
    ("delta-6-2", "hexagon-q2"),
    ("tutte-12-cage", "hexagon-q2"),
];

fn array(text: &str) -> Option<IntersectionArray> {
    Some(text.parse().expect("catalog arrays are well formed"))
}

fn lcf(text: &str) -> Result<Graph, AtlasError> {
    Ok(text.parse::<LcfSpec>()?.decode()?)
}

fn data_file(name: &str, embedded: &str) -> Result<(Graph, String), AtlasError> {
    if let Some(dir) = std::env::var_os(DATA_DIR_VAR) {
        let path = PathBuf::from(dir).join(format!("{name}.json"));
        if path.exists() {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| AtlasError::Data(format!("{}: {e}", path.display())))?;
            return Ok((Graph::from_edge_list_json(&text)?, format!("edge list {}", path.display())));
        }
    }
    Ok((Graph::from_edge_list_json(embedded)?, format!("embedded edge list {name}.json")))
}

fn petersen() -> Result<Graph, AtlasError> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Ok(Graph::new(10, &edges)?)
}

fn parse_knn(name: &str) -> Option<usize> {
    let inner = name.strip_prefix('K')?;
    let (a, b) = inner.split_once(',')?;
    let (a, b) = (a.parse::<usize>().ok()?, b.parse::<usize>().ok()?);
    (a == b).then_some(a)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Builds a catalog entry without validating it. Aliases resolve to the
/// canonical name.
pub fn atlas_build(name: &str) -> Result<NamedGraphRecord, AtlasError> {
    let name = ALIASES.iter().find(|(alias, _)| *alias == name).map_or(name, |(_, canonical)| canonical);
    let record = |graph: Graph, source: String, aliases: &[&str], expected: Expected| NamedGraphRecord {
        name: name.to_string(),
        aliases: aliases.iter().map(ToString::to_string).collect(),
        source,
        graph,
        expected,
    };
    let cubic = |girth, diameter, aut, arr: &str, arc, geo| Expected {
        valency: Some(3),
        girth: Some(girth),
        diameter: Some(diameter),
        aut_order: Some(aut),
        intersection_array: array(arr),
        arc_degree: arc,
        geodesic_degree: geo,
    };
    Ok(match name {
        "foster" => {
            let spec = "[17,-9,37,-37,9,-17]^15";
            let e = cubic(10, 8, 4320, "{3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3}", Some(5), Some(8));
            record(lcf(spec)?, format!("LCF {spec}"), &[], e)
        }
        "biggs-smith" => {
            let (g, source) = data_file(name, BIGGS_SMITH)?;
            let e = cubic(9, 7, 2448, "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}", Some(4), Some(7));
            record(g, source, &[], e)
        }
        "tutte-coxeter" => {
            let spec = "[-13,-9,7,-7,9,13]^5";
            let e = cubic(8, 4, 1440, "{3,2,2,2;1,1,1,3}", Some(5), Some(4));
            record(lcf(spec)?, format!("LCF {spec}"), &["tutte-8-cage", "delta-4-2"], e)
        }
        "heawood" => {
            let spec = "[5,-5]^7";
            let e = cubic(6, 3, 336, "{3,2,2;1,1,3}", Some(4), Some(3));
            record(lcf(spec)?, format!("LCF {spec}"), &["delta-3-2"], e)
        }
        "petersen" => {
            let e = cubic(5, 2, 120, "{3,2;1,1}", Some(3), Some(2));
            record(petersen()?, "outer 5-cycle, spokes, inner pentagram".into(), &[], e)
        }
        "desargues" => {
            let spec = "[5,-5,9,-9]^5";
            let e = cubic(6, 5, 240, "{3,2,2,1,1;1,1,2,2,3}", Some(3), None);
            record(lcf(spec)?, format!("LCF {spec}"), &[], e)
        }
        "hexagon-q2" => {
            let (g, source) = data_file(name, HEXAGON_Q2)?;
            let e = cubic(12, 6, 12096, "{3,2,2,2,2,2;1,1,1,1,1,3}", None, None);
            record(g, source, &["delta-5-2", "delta-6-2", "tutte-12-cage"], e)
        }
        _ => {
            if let Some(n) = parse_knn(name).filter(|&n| (1..=16).contains(&n)) {
                let edges: Vec<_> = (0..n).flat_map(|u| (n..2 * n).map(move |v| (u, v))).collect();
                let g = Graph::new(2 * n, &edges)?;
                let expected = Expected {
                    valency: Some(n),
                    girth: (n >= 2).then_some(4),
                    diameter: Some(if n == 1 { 1 } else { 2 }),
                    aut_order: Some(2 * factorial(n) * factorial(n)),
                    intersection_array: if n == 1 { array("{1;1}") } else { array(&format!("{{{n},{};1,{n}}}", n - 1)) },
                    arc_degree: (n >= 3).then_some(3),
                    geodesic_degree: Some(if n == 1 { 1 } else { 2 }),
                };
                record(g, "complete bipartite".into(), &[], expected)
            } else if let Some(n) =
                name.strip_prefix('C').and_then(|r| r.parse::<usize>().ok()).filter(|&n| (3..=512).contains(&n))
            {
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                let d = n / 2;
                let mut b = vec![2];
                b.extend(std::iter::repeat(1).take(d - 1));
                let mut c = vec![1; d];
                if n % 2 == 0 {
                    c[d - 1] = 2;
                }
                let expected = Expected {
                    valency: Some(2),
                    girth: Some(n),
                    diameter: Some(d),
                    aut_order: Some(2 * n as u128),
                    intersection_array: Some(IntersectionArray::new(b, c)),
                    arc_degree: None,
                    geodesic_degree: Some(d),
                };
                record(Graph::new(n, &edges)?, "cycle".into(), &[], expected)
            } else {
                return Err(AtlasError::UnknownName(name.to_string()));
            }
        }
    })
}

fn mismatch(name: &str, field: &str, expected: String, actual: String) -> AtlasError {
    AtlasError::Validation { name: name.to_string(), field: field.to_string(), expected, actual }
}

/// Recomputes every populated expected field.
pub fn validate(record: &NamedGraphRecord) -> Result<(), AtlasError> {
    let g = &record.graph;
    let e = &record.expected;
    let name = &record.name;
    let check = |field: &str, want: Option<String>, got: String| -> Result<(), AtlasError> {
        match want {
            Some(w) if w != got => Err(mismatch(name, field, w, got)),
            _ => Ok(()),
        }
    };
    if !g.is_connected() {
        return Err(mismatch(name, "connected", "true".into(), "false".into()));
    }
    check("valency", e.valency.map(|v| v.to_string()), g.valency().map_or("irregular".into(), |v| v.to_string()))?;
    if let Some(want) = e.girth {
        check("girth", Some(want.to_string()), g.girth().map(|x| x.to_string()).unwrap_or("acyclic".into()))?;
    }
    check("diameter", e.diameter.map(|v| v.to_string()), g.diameter()?.to_string())?;
    if let Some(want) = &e.intersection_array {
        let got = match g.intersection_array() {
            Ok(Some(a)) => a.to_string(),
            Ok(None) => "not distance-regular".to_string(),
            Err(err) => err.to_string(),
        };
        check("intersection_array", Some(want.to_string()), got)?;
    }
    if e.aut_order.is_some() || e.arc_degree.is_some() || e.geodesic_degree.is_some() {
        let aut = automorphism_group(g)?;
        check("aut_order", e.aut_order.map(|v| v.to_string()), aut.order().to_string())?;
        if e.arc_degree.is_some() || e.geodesic_degree.is_some() {
            let report = transitivity_degrees(g, &aut, TransitivityOptions::default())?;
            let arc = report.arc_transitive_up_to.map_or("unbounded".to_string(), |s| s.to_string());
            check("arc_degree", e.arc_degree.map(|v| v.to_string()), arc)?;
            check("geodesic_degree", e.geodesic_degree.map(|v| v.to_string()), report.geodesic_transitive_up_to.to_string())?;
        }
    }
    Ok(())
}

/// A validated catalog entry. Besides [`CATALOG`], accepts `K{n,n}` for
/// `n <= 16` (e.g. `K3,3`) and `C{n}` for `3 <= n <= 512`.
pub fn atlas_get(name: &str) -> Result<NamedGraphRecord, AtlasError> {
    let record = atlas_build(name)?;
    validate(&record)?;
    Ok(record)
}
