//! Weakly separated set-systems, generalized tilings of zonogons and weak
//! Bruhat pairs of permutations.
//!
//! Everything here is pure and allocation-only: subsets of `[n]` are single
//! machine words, collections and tilings are ordered containers, and every
//! operation is deterministic. IO, file formats and the command line live in
//! the `zonoweave-cli` crate.
//!
//! Module map:
//!
//! * [`groundset`]: subsets, permutations, the relations `⋖` and `▷`, weak
//!   separation, ideals, checkers, chamber and right sets.
//! * [`wscoll`]: weakly separated collections, maximal-clique enumeration,
//!   greedy completion, left-right pairs and flips.
//! * [`tiling`]: generalized tilings, axiom verification, strips,
//!   contractions, expansions, enumeration and reconstruction.
//! * [`auxgraph`]: the auxiliary graph of a tiling and finite lattices.
//! * [`bruhat`]: ideal paths, region tilings and the stripping constructions.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod auxgraph;
pub mod bitset;
pub mod bruhat;
mod error;
pub mod groundset;
pub mod tiling;
pub mod wscoll;

pub use error::Error;
pub use groundset::{GroundSize, InversionSet, Permutation, Subset};
pub use tiling::{Color, GTiling, Tile};
pub use wscoll::WsCollection;

pub type Result<T, E = Error> = core::result::Result<T, E>;
