//! Exact permutation-group engine.
//!
//! Points are `0..degree`. Groups are stored as generator lists plus a
//! stabilizer chain; order, membership, orbits, stabilizers, normal
//! closures and induced actions are all answered from the chain.

mod group;
mod io;
mod normal;
mod permutation;

use thiserror::Error;

pub use group::{InducedAction, PermGroup, ENUMERATION_CAP};
pub use io::GroupSpec;
pub use normal::{ConjugacyClass, NormalClosure, NormalStructure};
pub use permutation::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("generators have mixed degrees ({0} and {1})")]
    MixedDegree(usize, usize),
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("bad cycle notation: {0}")]
    CycleSyntax(String),
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("element does not lie in the ambient group")]
    NotASubgroup,
    #[error("group of order {order} exceeds the enumeration cap of {cap} elements")]
    GroupTooLarge { order: u128, cap: u128 },
    #[error("partition or domain is not invariant under the group")]
    NotInvariant,
    #[error("blocks do not partition the point set")]
    InvalidPartition,
    #[error("group order does not fit in 128 bits")]
    OrderOverflow,
}

#[cfg(test)]
mod tests;
