//! Normal quotients `Γ_N`, cover detection, and executable forms of the
//! girth bounds, the lifted-cycle distance profile and the reduction
//! dichotomy for s-geodesic transitive covers.

mod bounds;
mod reduction;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::atlas::AtlasError;
use crate::graph::{Graph, GraphError};
use crate::perm::{PermError, PermGroup};
use crate::symmetry::{validate_group, SymmetryError};

pub use bounds::{
    girth_bound_check, lift_cycle_profile, BoundVerdict, CycleProfile, GirthBoundReport,
    GirthPremises, ProfileVerdict,
};
pub use reduction::{verdict_json, verify_reduction, ReductionCase, ReductionEvidence, ReductionVerdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error("N is not a subgroup of G")]
    NotASubgroup,
    #[error("N is not normal in G")]
    NormalityFails,
    #[error("N is transitive on the vertices; the quotient is a single point")]
    NTransitive,
    #[error("not a cycle of the quotient: {0}")]
    NotACycle(String),
    #[error("cycle length {k} is not below the girth {girth}; the profile is vacuous")]
    CycleTooLong { k: usize, girth: usize },
    #[error("precondition {premise} not established: {detail}")]
    PreconditionUnverified { premise: String, detail: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Atlas(#[from] AtlasError),
}

impl QuotientError {
    pub(crate) fn premise(premise: &str, detail: impl Into<String>) -> Self {
        QuotientError::PreconditionUnverified { premise: premise.to_string(), detail: detail.into() }
    }
}

/// The quotient of a graph by the orbits of a normal subgroup.
#[derive(Clone, Debug)]
pub struct QuotientResult {
    /// Orbits of `N`, each sorted, ordered by least element.
    pub orbit_partition: Vec<Vec<usize>>,
    /// Orbit index of each vertex.
    pub block_of: Vec<usize>,
    pub quotient: Graph,
    /// `G/N` acting on orbit indices.
    pub induced: PermGroup,
    /// Order of the kernel of `G` on the orbits; a multiple of `|N|`.
    pub kernel_order: u128,
    pub n_order: u128,
    pub is_cover: bool,
    /// Girths of `Γ` and `Γ_N`; `None` for a forest.
    pub girth_pair: (Option<usize>, Option<usize>),
    pub orbit_count: usize,
    /// Edges of `Γ` beyond the first one between each adjacent orbit pair.
    pub multi_edges: usize,
    /// Edges of `Γ` inside a single orbit; these leave no trace in `Γ_N`.
    pub internal_edges: usize,
}

/// Serializable view of a [`QuotientResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientSummary {
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
    pub n_order: u128,
    pub induced_order: u128,
    pub kernel_order: u128,
    pub is_cover: bool,
    pub girth: Option<usize>,
    pub quotient_girth: Option<usize>,
    pub quotient_valency: Option<usize>,
    pub quotient_edges: Vec<[usize; 2]>,
    pub multi_edges: usize,
    pub internal_edges: usize,
    pub orbit_partition: Vec<Vec<usize>>,
}

impl QuotientResult {
    pub fn summary(&self) -> QuotientSummary {
        let sizes: BTreeSet<usize> = self.orbit_partition.iter().map(Vec::len).collect();
        QuotientSummary {
            orbit_count: self.orbit_count,
            orbit_sizes: sizes.into_iter().collect(),
            n_order: self.n_order,
            induced_order: self.induced.order(),
            kernel_order: self.kernel_order,
            is_cover: self.is_cover,
            girth: self.girth_pair.0,
            quotient_girth: self.girth_pair.1,
            quotient_valency: self.quotient.valency(),
            quotient_edges: self.quotient.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            multi_edges: self.multi_edges,
            internal_edges: self.internal_edges,
            orbit_partition: self.orbit_partition.clone(),
        }
    }

    /// Vertices of `Γ` in block `b` adjacent to `v`, in increasing order.
    pub fn neighbors_in_block<'a>(&'a self, g: &'a Graph, v: usize, b: usize) -> impl Iterator<Item = usize> + 'a {
        g.neighbors(v).iter().copied().filter(move |&w| self.block_of[w] == b)
    }
}

fn girth_opt(g: &Graph) -> Result<Option<usize>, GraphError> {
    match g.girth() {
        Ok(x) => Ok(Some(x)),
        Err(GraphError::Acyclic) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `Γ_N` for `N ⊴ G ≤ Aut(Γ)`: the orbits of `N`, two orbits adjacent
/// when some edge of `Γ` joins them. `Γ` covers `Γ_N` when every vertex
/// has the valency of its orbit.
pub fn normal_quotient(g: &Graph, group: &PermGroup, n: &PermGroup) -> Result<QuotientResult, QuotientError> {
    validate_group(g, group)?;
    if n.degree() != group.degree() || !group.contains_group(n) {
        return Err(QuotientError::NotASubgroup);
    }
    if !group.normalizes(n) {
        return Err(QuotientError::NormalityFails);
    }
    let mut orbit_partition = n.all_orbits();
    for orbit in &mut orbit_partition {
        orbit.sort_unstable();
    }
    orbit_partition.sort_unstable();
    if orbit_partition.len() == 1 {
        return Err(QuotientError::NTransitive);
    }
    let mut block_of = vec![0; g.n()];
    for (b, orbit) in orbit_partition.iter().enumerate() {
        for &v in orbit {
            block_of[v] = b;
        }
    }

    let mut pairs = BTreeSet::new();
    let mut crossing = 0;
    let mut internal_edges = 0;
    for (u, v) in g.edges() {
        let (a, b) = (block_of[u], block_of[v]);
        if a == b {
            internal_edges += 1;
        } else {
            crossing += 1;
            pairs.insert((a.min(b), a.max(b)));
        }
    }
    let edges: Vec<(usize, usize)> = pairs.into_iter().collect();
    let multi_edges = crossing - edges.len();
    let quotient = Graph::new(orbit_partition.len(), &edges)?;
    let is_cover = (0..g.n()).all(|v| g.degree(v) == quotient.degree(block_of[v]));

    let action = group.induced_action(&orbit_partition)?;
    let girth_pair = (girth_opt(g)?, girth_opt(&quotient)?);
    Ok(QuotientResult {
        orbit_count: orbit_partition.len(),
        orbit_partition,
        block_of,
        quotient,
        induced: action.quotient,
        kernel_order: action.kernel.order(),
        n_order: n.order(),
        is_cover,
        girth_pair,
        multi_edges,
        internal_edges,
    })
}
