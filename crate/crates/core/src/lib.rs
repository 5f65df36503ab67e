//! Exact computation toolkit for `{k}`-Roman domination on small graphs.
//!
//! The crate provides:
//!
//! * [`graph`]: simple undirected graphs, split partitions, complements,
//!   desk-scale isomorphism testing;
//! * [`domination`]: exact solvers for the domination number γ(G) and the
//!   `{k}`-Roman domination number γ_{Rk}(G), plus the function
//!   normalizations used on split graphs;
//! * [`hypergraph`]: hypergraphs with exact perfect-matching (exact cover)
//!   and edge-cover solvers, and the compatible / strongly compatible graph
//!   constructions;
//! * [`constructions`]: middle graphs, split joins and their decomposition,
//!   suns, co-suns, and the exact-cover reduction to split graphs;
//! * [`verifier`]: an exhaustive small-instance verification harness with
//!   counterexample reporting;
//! * [`codec`]: text codecs (graph6, edge lists, hypergraph and weight
//!   function formats).
//!
//! Everything is deterministic: solvers break ties towards the
//! lexicographically least witness, and verification reports do not depend
//! on evaluation order. The crate is `no_std` (with `alloc`); all IO lives
//! in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod codec;
pub mod constructions;
pub mod domination;
pub mod graph;
pub mod hypergraph;
pub mod verifier;

pub use constructions::SplitLabeledGraph;
pub use domination::{DominationCertificate, RomanCertificate, WeightFunction};
pub use graph::{Graph, SplitPartition};
pub use hypergraph::Hypergraph;
pub use verifier::{Budget, SuiteId, VerificationReport};
