use serde::{Deserialize, Serialize};

use super::{validate_group, SymmetryError};
use crate::graph::{Graph, GraphError};
use crate::perm::PermGroup;

/// Arc and geodesic transitivity levels of a vertex-transitive action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitivityReport {
    /// Largest s with the group transitive on s-arcs; `None` when every
    /// level holds (cycles).
    #[serde(rename = "arc_degree")]
    pub arc_transitive_up_to: Option<usize>,
    /// Largest s <= diameter with transitivity on i-geodesics for all
    /// i <= s.
    #[serde(rename = "geodesic_degree")]
    pub geodesic_transitive_up_to: usize,
    pub geodesic_transitive: bool,
    pub b_s_shortcut_used: bool,
    /// Level at which `b_s <= 1` ended the geodesic scan.
    pub shortcut_level: Option<usize>,
    pub diameter: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransitivityOptions {
    /// Stop the geodesic scan once s-geodesic transitivity holds with
    /// `b_s <= 1`.
    pub use_shortcut: bool,
}

impl Default for TransitivityOptions {
    fn default() -> Self {
        TransitivityOptions { use_shortcut: true }
    }
}

/// Orbit-size test: the orbit of `rep` has length `|G| / |G_rep|`.
fn orbit_equals(group: &PermGroup, rep: &[usize], count: u128) -> Result<bool, SymmetryError> {
    let stab = group.stabilizer_order(rep)?;
    Ok(group.order() / stab == count)
}

/// `true` iff s-arcs exist and `group` is transitive on them.
pub fn is_s_arc_transitive(g: &Graph, group: &PermGroup, s: usize) -> Result<bool, SymmetryError> {
    validate_group(g, group)?;
    arc_level(g, group, s)
}

fn arc_level(g: &Graph, group: &PermGroup, s: usize) -> Result<bool, SymmetryError> {
    let count = g.count_arcs(s)?;
    match g.first_arc(s) {
        Some(rep) if count > 0 => orbit_equals(group, &rep, count),
        _ => Ok(false),
    }
}

fn geodesic_level(g: &Graph, group: &PermGroup, i: usize) -> Result<bool, SymmetryError> {
    let count = g.count_geodesics(i)?;
    for u in 0..g.n() {
        if let Some(rep) = g.geodesic_from(u, i)? {
            return orbit_equals(group, &rep, count);
        }
    }
    Ok(false)
}

/// `true` iff `group` is transitive on i-geodesics for every `1 <= i <= s`.
pub fn is_s_geodesic_transitive(
    g: &Graph,
    group: &PermGroup,
    s: usize,
) -> Result<bool, SymmetryError> {
    validate_group(g, group)?;
    if s == 0 {
        return Err(GraphError::ZeroS.into());
    }
    let diameter = g.diameter()?;
    if s > diameter {
        return Err(GraphError::SExceedsDiameter { s, diameter }.into());
    }
    for i in 1..=s {
        if !geodesic_level(g, group, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both transitivity levels by ascending checks.
pub fn transitivity_degrees(
    g: &Graph,
    group: &PermGroup,
    options: TransitivityOptions,
) -> Result<TransitivityReport, SymmetryError> {
    validate_group(g, group)?;
    let diameter = g.diameter()?;
    if !group.is_transitive() {
        return Err(SymmetryError::NotVertexTransitive);
    }
    let arc_transitive_up_to = if g.valency() == Some(2) {
        // a cycle: an arc determines the s-arc extending it
        if arc_level(g, group, 1)? {
            None
        } else {
            Some(0)
        }
    } else {
        let mut s = 0;
        while arc_level(g, group, s + 1)? {
            s += 1;
        }
        Some(s)
    };

    let mut up_to = 0;
    let mut shortcut_level = None;
    for s in 1..=diameter {
        if !geodesic_level(g, group, s)? {
            break;
        }
        up_to = s;
        if options.use_shortcut {
            let b_s = g.intersection_data(0)?.b(s);
            if b_s.is_some_and(|b| b <= 1) {
                shortcut_level = Some(s);
                up_to = diameter;
                break;
            }
        }
    }
    Ok(TransitivityReport {
        arc_transitive_up_to,
        geodesic_transitive_up_to: up_to,
        geodesic_transitive: up_to == diameter,
        b_s_shortcut_used: shortcut_level.is_some(),
        shortcut_level,
        diameter,
    })
}
