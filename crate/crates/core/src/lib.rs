//! Parallel minors of simple graphs.
//!
//! A parallel minor is what remains after contracting edges and simplifying.
//! This crate provides containment tests that return checkable certificates,
//! generators for the unavoidable families, constructive extraction drivers
//! and a small harness for exhaustive verification over graph6 corpora.

pub mod connectivity;
pub mod containment;
pub mod error;
pub mod extraction;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod iso;
pub mod partition;
pub mod search;

pub use connectivity::{is_internally_4_connected, is_k_connected, vertex_connectivity};
pub use containment::{is_minor, is_parallel_minor, phi_enumerate, MinorEmbedding};
pub use error::{Error, Result};
pub use extraction::{extract, Certificate, ExtractionOutcome, ExtractionResult};
pub use families::{generate, identify, theorem_list, FamilyId, FamilyTag};
pub use graph::SimpleGraph;
pub use iso::is_isomorphic;
pub use partition::{quotient, BranchPartition, Contracted, EdgeProvenance};
pub use search::{Budget, SearchOutcome};
