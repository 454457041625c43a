//! Algorithms for Berge paths and cycles in covering hypergraphs, with a
//! brute-force oracle for ground truth and a Lagrangian optimizer for the
//! associated extremal bounds.
//!
//! A hypergraph is *covering* when every vertex pair lies in some
//! hyperedge. For covering hypergraphs with edges of size at most 3 this
//! crate constructs Hamiltonian Berge paths (n >= 4) and Berge cycles of
//! every length 3..=n (n >= 6), as verifiable certificates. The `oracle`
//! module cross-checks the constructions exhaustively at small n; the
//! `lagrangian` module evaluates and maximizes edge-monomial polynomials
//! over the simplex and checks the tight bounds that cycle-free and
//! path-free hypergraphs must satisfy.

pub mod berge;
pub mod cyclefinder;
pub mod error;
pub mod generate;
pub mod hypergraph;
pub mod io;
pub mod lagrangian;
pub mod oracle;
pub mod pathfinder;
pub mod rainbow;

pub use berge::{lift_cycle, lift_path, verify_cycle, verify_path, BergeCycle, BergePath};
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, PairIndex, Shadow, TraceResult};
