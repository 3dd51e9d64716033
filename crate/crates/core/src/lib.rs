//! Shared-memory-parallel network analysis.
//!
//! The crate bundles a lean adjacency-array graph type with the analytics
//! kernels a profiling workflow needs: exact and sampled centralities,
//! core decomposition, community detection, diameter bounds, a generator
//! suite, GML / edge-list I/O, and the report assembly behind the `granite`
//! command-line tool.
//!
//! Determinism contract: every sampled kernel and every generator is fixed
//! by its seed, independent of the worker count. Exact parallel kernels
//! agree with their single-worker execution within 1e-9 per entry
//! (floating-point summation order).

pub mod centrality;
pub mod community;
pub mod decomposition;
pub mod distance;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod partition;
pub mod profile;
mod rng;
pub mod scores;
pub mod traversal;

pub use error::{Error, Result};
pub use graph::{DuplicatePolicy, EdgeId, Graph, GraphBuilder, NodeId, UNREACHED};
pub use partition::Partition;
pub use scores::ScoreVector;
