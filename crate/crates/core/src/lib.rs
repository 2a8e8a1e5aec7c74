//! Construction of cycle structures and dominating sets on small graphs.
//!
//! The pipeline implemented here starts from the collection of cycles whose
//! length is divisible by three, grows "structures" by repeatedly attaching
//! cycles that share exactly one path with a cycle already present, reduces
//! each structure to the cycles that still own a private vertex, and then
//! labels every third vertex along those cycles.  When everything goes well
//! the label set dominates the graph.  Nothing here assumes it does: the
//! [`verify`] module re-checks every produced set against the graph and an
//! exact brute-force search.
//!
//! The crate is `no_std` (with `alloc`); parsing, serialization and the
//! command line live in the companion `domstruct-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cycle;
pub mod domination;
pub mod graph;
pub mod labeling;
pub mod structure;
pub mod verify;

pub use cycle::{enumerate_cycles, zero_mod3_cycles, Cycle, CycleBudget, CycleSet};
pub use domination::{
    brute_force_gamma, greedy_gamma, is_dominating, structure_gamma, DominationResult,
    FamilyRejection, Method, OracleError, RejectReason, StructureOutcome,
};
pub use graph::{
    closed_neighborhood, random_3connected, GenError, Graph, GraphError, NamedGraph, VertexSet,
};
pub use labeling::{
    classify_attachment, enumerate_assignments, has_closed_spaced_path, is_spaced_path,
    labels_for, min_assignment, minimal_assignments, phases_feasible, Assignment, AssignmentSet,
    AttachmentType, PatternRule,
};
pub use structure::{
    build_families, enumerate_structures, grow_structure, intersection_shape, is_seamless,
    reduce_pattern, structures_from_pool, Family, FamilySet, IntersectionShape, SeamRule,
    SharedPiece, Structure, StructureSet,
};
pub use verify::{verify_graph, Tri, Verification, VerifyParams};
