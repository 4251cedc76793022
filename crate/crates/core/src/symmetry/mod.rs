//! Automorphism groups and the transitivity and primitivity deciders
//! built on them.

mod action;
mod search;
mod transitivity;
mod weiss;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::perm::{PermError, PermGroup};

pub use action::{
    bi_analysis, block_systems, is_primitive, quasiprimitivity, socle_tag, ActionClass,
    ActionSummary, BipartiteSetting, BipartiteSummary, GroupSummary, Quasiprimitivity, SocleTag,
    XOmega, XOmegaCase,
};
pub use search::{
    are_isomorphic, automorphism_group, find_isomorphism, is_isomorphism,
    AUTOMORPHISM_SEARCH_CAP,
};
pub use transitivity::{
    is_s_arc_transitive, is_s_geodesic_transitive, transitivity_degrees, TransitivityOptions,
    TransitivityReport,
};
pub use weiss::{weiss_divisibility_check, CandidateForm, WeissReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("graph on {n} vertices exceeds the automorphism search cap {cap}")]
    GraphTooLarge { n: usize, cap: usize },
    #[error("generator {index} is not an automorphism of the graph")]
    NotAutomorphisms { index: usize },
    #[error("group acts on {group} points but the graph has {graph} vertices")]
    DegreeMismatch { group: usize, graph: usize },
    #[error("group is not transitive on the vertices")]
    NotVertexTransitive,
    #[error("group is not transitive on the domain")]
    NotTransitive,
    #[error("valency {0} is not a prime power plus one")]
    ValencyNotPrimePowerPlusOne(usize),
    #[error("precondition not established: {0}")]
    PreconditionUnverified(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Checks that `group` acts on the vertices of `g` by automorphisms.
pub fn validate_group(g: &Graph, group: &PermGroup) -> Result<(), SymmetryError> {
    if group.degree() != g.n() {
        return Err(SymmetryError::DegreeMismatch { group: group.degree(), graph: g.n() });
    }
    for (index, gen) in group.generators().iter().enumerate() {
        if !g.is_automorphism(&gen.to_images()) {
            return Err(SymmetryError::NotAutomorphisms { index });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
