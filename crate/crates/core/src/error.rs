use alloc::string::String;
use alloc::vec::Vec;

use crate::groundset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ground size {0} is outside 1..=64")]
    GroundSize(usize),
    #[error("element {element} is outside [1..{n}]")]
    ElementOutOfRange { element: usize, n: u8 },
    #[error("{0:?} is not a permutation of 1..n")]
    NotAPermutation(Vec<u8>),
    #[error("ground sizes differ: {0} vs {1}")]
    MismatchedGroundSize(u8, u8),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("{0} and {1} are not weakly separated")]
    NotWeaklySeparated(Subset, Subset),
    #[error("collection has {size} members, a largest one has {expected}")]
    NotLargest { size: usize, expected: usize },
    #[error("not a left-right pair: {0}")]
    InvalidLrPair(String),
    #[error("flip precondition violated: {0}")]
    FlipPrecondition(String),
    #[error("permutations must differ")]
    EqualPermutations,
    #[error("flip result is not a largest ws-collection")]
    FlipResultInvalid,
    #[error("contraction/expansion side must be 1 or n, got {0}")]
    InvalidSide(usize),
    #[error("tiling fails axiom verification: {0}")]
    Unverified(String),
    #[error("path is not legal: {0}")]
    IllegalPath(String),
    #[error("path is not embedded in the tiling graph: {0}")]
    PathNotEmbedded(String),
    #[error("no legal path reproduces the requested spectrum")]
    NoPathFound,
    #[error("permutations are not in weak Bruhat order")]
    NotBruhat,
    #[error("graph contains a directed cycle")]
    CyclicGraph,
    #[error("elements {a} and {b} have {count} extremal bounds, expected exactly one")]
    NotLatticePair { a: usize, b: usize, count: usize },
    #[error("n = {n} exceeds the cost guard {limit}")]
    CostGuard { n: usize, limit: usize },
    #[error("invalid level {h}, expected 1..={n}")]
    InvalidLevel { h: usize, n: u8 },
}
