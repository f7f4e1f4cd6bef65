//! Reflexive graphs with distributive lattice polymorphisms.
//!
//! A reflexive graph `G` is a *DL-graph* when some distributive lattice on its
//! vertex set has meet and join operations that preserve adjacency. This crate
//! provides the machinery for working with such graphs:
//!
//! - [`graph`]: reflexive graphs, neighbourhood classes, BFS layers and the
//!   min-max (proper interval) check.
//! - [`order`]: posets, downsets, lattices, Birkhoff's representation and
//!   chain covers.
//! - [`gpa`]: the downset graph `G(P, A)` of a poset and an arc set, arc
//!   normalisation and recovery of `A` from a compatible pair.
//! - [`compat`]: compatibility of a lattice with a graph, the min-max and vee
//!   identities, and the lattice majority operation.
//! - [`embed`]: embeddings into products of proper interval graphs driven by
//!   chain covers.
//! - [`recognize`]: polynomial-time recognition of R-thin DL-graphs.
//! - [`oracle`]: brute-force enumeration used as ground truth on small inputs.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod compat;
pub mod embed;
pub mod error;
pub mod gpa;
pub mod graph;
pub mod oracle;
pub mod order;
pub mod recognize;

pub use error::{CompatError, GraphError, LatticeError, OracleError, OrderError, RecognizeError};
pub use gpa::ArcSet;
pub use graph::{ReflexiveGraph, VertexLabeling};
pub use order::{ChainCover, Downset, Lattice, Poset};
pub use recognize::RecognitionResult;
