//! Named graphs, finite geometries, and Cayley and coset graph builders.

mod catalog;
mod field;
mod geometry;
mod groups;

use thiserror::Error;

use crate::graph::GraphError;
use crate::perm::PermError;
use crate::symmetry::SymmetryError;

pub use catalog::{
    atlas_build, atlas_get, validate, Expected, NamedGraphRecord, ALIASES, CATALOG, DATA_DIR_VAR,
};
pub use field::FiniteField;
pub use geometry::{pg2_incidence, symplectic_quadrangle, PG2_ORDERS, SYMPLECTIC_ORDERS};
pub use groups::{
    cayley_graph, coset_graph, heisenberg_element, heisenberg_example, heisenberg_table,
    CosetGraph, GroupTable, HeisenbergExample,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AtlasError {
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("unsupported field order q = {0}")]
    UnsupportedQ(usize),
    #[error("unsupported prime p = {0}")]
    UnsupportedP(usize),
    #[error("GF({q}) table fails {axiom}")]
    FieldAxiom { q: usize, axiom: String },
    #[error("{name}: {field} should be {expected}, found {actual}")]
    Validation { name: String, field: String, expected: String, actual: String },
    #[error("data file: {0}")]
    Data(String),
    #[error("bad group table: {0}")]
    BadGroupTable(String),
    #[error("connection set is not closed under inverses")]
    NotInverseClosed,
    #[error("connection set contains the identity")]
    ContainsIdentity,
    #[error("connection set does not generate the group")]
    NotGenerating,
    #[error("subgroup or element does not lie in the group")]
    NotInGroup,
    #[error("the element lies in the subgroup")]
    GInH,
    #[error("HgH differs from Hg^-1H")]
    NotSelfPaired,
    #[error("the subgroup and the element do not generate the group")]
    NotGenerated,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
}
