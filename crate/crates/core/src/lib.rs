//! Exact b-coloring toolkit.
//!
//! A b-coloring of a graph with `b` colors is a proper coloring in which every
//! color class owns a vertex (a *representative*) adjacent to all `b - 1`
//! other colors. The largest such `b` is the b-chromatic number `phi(G)`.
//!
//! This crate is `no_std` (it needs `alloc`) and contains only pure
//! algorithms:
//!
//! - [`graph`]: dense-id simple graphs with bitset adjacency and the structural
//!   queries the bounds depend on (complement, bipartiteness, star-freeness).
//! - [`invariants`]: exact chromatic, clique, independence, clique-partition and
//!   biclique-cover numbers, plus the degree bound `m(G)`.
//! - [`bcolor`]: colorings, representatives, b-coloring certificates and the
//!   exact `phi(G)` search.
//! - [`bounds`]: the upper bounds on `phi` for star-free, clique-partitioned,
//!   co-bipartite and bipartite graphs, collected into a [`bounds::BoundsReport`].
//! - [`ab_family`]: decompositions certifying that a co-bipartite graph admits
//!   a b-coloring with a given number of colors.
//! - [`generators`]: the three extremal families with coloring certificates.
//!
//! Every exhaustive search takes a [`Budget`] and fails with
//! [`Error::BudgetExceeded`] instead of returning an approximation.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod ab_family;
pub mod bcolor;
pub mod bounds;
mod budget;
mod error;
pub mod generators;
pub mod graph;
pub mod invariants;
mod matching;
mod set;

pub use budget::Budget;
pub use error::Error;
pub use graph::{Bipartition, Graph};
pub use set::VertexSet;

pub type Result<T, E = Error> = core::result::Result<T, E>;
