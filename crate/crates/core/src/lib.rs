//! Arc and geodesic transitivity, primitivity and normal-quotient analysis
//! for finite graphs with explicit permutation groups.

pub mod atlas;
pub mod claims;
pub mod graph;
pub mod perm;
pub mod quotient;
pub mod symmetry;
