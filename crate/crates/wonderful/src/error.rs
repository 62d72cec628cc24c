use thiserror::Error;

use crate::root_system::Family;

/// Errors surfaced by the combinatorics engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is not admissible for family {family} (A: >=1, B/C: >=2, D: >=4, E: 6..8, F: 4, G: 2)")]
    InadmissibleRank { family: Family, rank: usize },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("Weyl group has more than {cap} elements; raise the enumeration cap")]
    GroupTooLarge { cap: usize },

    #[error("{what} {coords:?} is not dominant (a coordinate is negative)")]
    NotDominant {
        what: &'static str,
        coords: Vec<i64>,
    },

    #[error("cocharacter {coords:?} has coordinate gcd {gcd}, not 1; divide out the gcd to get an indivisible one-parameter subgroup")]
    NotIndivisible { coords: Vec<i64>, gcd: i64 },

    #[error("type {simple_type} is simply laced and has no highest short root")]
    NoShortRoot { simple_type: String },

    #[error("product of simple factors must be non-empty")]
    EmptyProduct,

    #[error("weight {coords:?} is not ample (a coordinate is < 1)")]
    NotAmple { coords: Vec<i64> },

    #[error(
        "unknown table {name:?}; known tables: remark-lines, remark-short, lemma-roots, lemma-dim"
    )]
    UnknownTable { name: String },

    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
