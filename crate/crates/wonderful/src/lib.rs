//! Exact combinatorics of minimal rational curves on wonderful
//! compactifications of adjoint simple groups.
//!
//! The crate builds root data for every simple type in Bourbaki numbering,
//! computes the longest-element action by a dominance algorithm (with a
//! capped brute-force enumeration oracle for cross-checks), evaluates
//! line-bundle degrees on closures of one-parameter subgroups, and derives
//! the boundary-orbit, dimension and contraction tables for the wonderful
//! compactification. All arithmetic is exact: 64-bit integers with overflow
//! checks, and rationals only inside basis changes.

pub mod cli;
pub mod curves;
pub mod error;
pub mod reference;
pub mod report;
pub mod root_system;
pub mod verify;
pub mod weyl;
pub mod wonderful;

pub use error::{Error, Result};
pub use root_system::{Cocharacter, Coroot, Family, Root, RootDatum, SimpleType, Weight};
