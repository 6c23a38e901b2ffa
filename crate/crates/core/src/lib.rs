//! Exact combinatorics for 5-critical graphs.
//!
//! Everything here is pure computation over small graphs (at most 64
//! vertices, bitset rows) and builds without `std`:
//!
//! - [`graph`]: the graph type, vertex sets, degree-four structure, clusters.
//! - [`canon`]: canonical labeling and isomorphism.
//! - [`coloring`]: 4-colorability, criticality, identifiable pairs,
//!   collapsible sets and critical complements.
//! - [`ore`]: Ore compositions, enumeration and recognition of 5-Ore graphs,
//!   gems, almost 5-Ore graphs and frames.
//! - [`packing`]: the weighted triangle/K4 packing number `T(G)` and the
//!   maximum independent cover number.
//! - [`potential`]: exact potentials in units of 1/21, φ-identification,
//!   critical extensions and the inequality audits built on them.
//! - [`discharge`]: charges, the transfer rule and the closing counts.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canon;
pub mod coloring;
pub mod discharge;
mod error;
pub mod families;
pub mod frac;
pub mod graph;
pub mod ore;
pub mod packing;
pub mod potential;

pub use canon::{canonical_form, canonical_key, CanonKey};
pub use error::{Error, Result};
pub use frac::{Rat21, Rat84};
pub use graph::{compare_smaller, Cluster, D4Components, Graph, Smaller, VertexSet};
