//! Distance spectral radius toolkit for small graphs and digraphs.
//!
//! The crate builds the extremal families that minimize the distance
//! spectral radius among connected graphs with given essential connectivity
//! (optionally with given minimum degree) and among strongly connected
//! digraphs with given essential connectivity, and verifies those minimality
//! claims at desk scale by exhaustive enumeration, seeded random sampling and
//! numerical spectral computation with rigorous Collatz–Wielandt enclosures.
//!
//! Organization:
//!
//! * [`graph`] — bitset-backed graphs and digraphs, constructors, traversals
//! * [`spectral`] — distance matrices, power iteration, dense Jacobi oracle
//! * [`connectivity`] — vertex connectivity and essential connectivity with
//!   certificates
//! * [`extremal`] — the extremal family constructors and their closed forms
//! * [`canon`] — exact canonical forms for isomorphism checks
//! * [`enumerate`] — exhaustive labeled enumeration of small graphs
//! * [`verify`] — the verification campaigns and machine-readable reports
//! * [`sample`] — seeded random graph and digraph generators
//! * [`formats`] — edge-list, graph6 and digraph6 encodings
//!
//! With the `parallel` feature (on by default) the enumeration and sampling
//! campaigns fan out over a rayon thread pool; without it they run on a
//! single thread with identical results.

pub mod bitset;
pub mod canon;
pub mod connectivity;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod formats;
pub mod graph;
mod jsonnum;
pub mod sample;
pub mod spectral;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{ComponentPartition, Digraph, Graph};

/// Default relative enclosure width for spectral radius computations.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Enclosure-separation threshold for minimizer comparisons in reports.
pub const COMPARISON_THRESHOLD: f64 = 1e-9;

/// Power iteration cap.
pub const MAX_POWER_ITERATIONS: usize = 100_000;

/// Largest `n` accepted by the exhaustive labeled enumeration without an
/// explicit override.
pub const ENUMERATION_GUARD: usize = 8;

/// Largest `n` accepted by canonical-form computation.
pub const CANONICAL_MAX_N: usize = 10;

/// Default seed for randomized campaigns.
pub const DEFAULT_SEED: u64 = 42;
