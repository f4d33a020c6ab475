//! Exact sub-multigraph matching.
//!
//! Finds every occurrence of a small labeled multigraph (the query) inside a
//! large labeled multigraph (the target): an injective node mapping under
//! which every query node's label set is contained in its image's and every
//! labeled query edge exists between the images. The pipeline computes
//! per-node compatibility domains, refines them with arc consistency, fixes
//! a static processing order for the query nodes, derives symmetry breaking
//! conditions from the query's automorphism orbits, and then runs a
//! backtracking search that enumerates each occurrence exactly once (or the
//! full redundant match set when symmetry breaking is disabled).
//!
//! The crate also ships a brute-force oracle for differential testing, a
//! preferential-attachment benchmark generator with a random-walk query
//! extractor, and a benchmark harness; the `smm` binary exposes everything
//! as subcommands. See the `examples/` directory for one runnable program
//! per capability.

pub mod bench;
pub mod demo;
pub mod domains;
pub mod engine;
pub mod error;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod ordering;
pub mod symmetry;
pub mod synth;
mod util;

pub use domains::{arc_consistency, compute_domains, DomainMap};
pub use engine::{
    check_feasibility, count_matches, find_matches, find_matches_streaming, subgraph_matching,
    EmitMode, Match, PartialMap, SearchConfig, SearchOutput, SearchReport,
};
pub use error::{Error, Result};
pub use graph::{align_dictionaries, LabelDictionary, LabelId, LabeledMultigraph, NodeId};
pub use ordering::{order_query_nodes, order_query_nodes_with, NodeOrdering, TieBreak};
pub use symmetry::{
    compute_automorphism_matrix, compute_orbits, compute_symm_break_cond, AutomorphismMatrix,
    BreakingConditionSet, OrbitPartition,
};
