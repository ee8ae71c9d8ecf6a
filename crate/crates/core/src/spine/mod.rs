//! One-vertex triangulations and their dual standard spines.
//!
//! A closed gluing table with a single vertex dualizes to a standard spine: tetrahedra
//! become spine vertices, triangles become spine edges and triangulation edges become spine
//! faces. On top of that cellularization this module extracts the Stiefel-Whitney surface,
//! measures its topology, and runs the non-minimality checks used to prune enumerations.

mod complex;
mod enumerate;
mod gluing;
mod homology;
mod orientation;
mod prune;
mod signature;
mod surface;
mod triangulation;

use thiserror::Error;

pub use complex::{dual_spine, is_standard, BoundaryStep, SpineEdge, SpineFace, StandardSpine};
pub use enumerate::{enumerate_one_vertex, EnumerateOptions, EnumeratedTable, PruneFlags};
pub use gluing::{Gluing, GluingTable};
pub use homology::{first_homology, z2_homology_ranks};
pub use orientation::{w1_cocycle, W1Cocycle};
pub use prune::{criterion_one, prune_nonminimal, PruneReason, Verdict};
pub use signature::{canonical_form, canonical_signature, table_from_signature, Signature};
pub use surface::{
    sigma_stats, stiefel_whitney_surface, surface_topology, ComponentStats, SigmaStats, SurfaceComponent,
    SurfaceInSpine, SurfaceTopology,
};
pub use triangulation::{check_one_vertex_manifold, edge_classes, vertex_count, EdgeClass, EdgeEmbedding};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpineError {
    #[error("line {line}: {why}")]
    Malformed { line: usize, why: String },
    #[error("self-glued face ({tet}, {face})")]
    SelfGluedFace { tet: usize, face: u8 },
    #[error("pairing is not an involution at face ({tet}, {face})")]
    NotInvolution { tet: usize, face: u8 },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("empty triangulation")]
    Empty,
    #[error("face ({tet}, {face}) is unglued")]
    Unglued { tet: usize, face: u8 },
    #[error("not one-vertex: triangulation has {0} vertices")]
    NotOneVertex(usize),
    #[error("not a closed manifold: {0}")]
    NotManifold(String),
    #[error("gluing table is disconnected")]
    Disconnected,
    #[error("surface has odd incidence at spine edge {0}")]
    OddIncidence(usize),
    #[error("Stiefel-Whitney system is inconsistent")]
    Inconsistent,
    #[error("Stiefel-Whitney system has a {0}-dimensional solution space")]
    NotUnique(usize),
    #[error("germ tracing failed: {0}")]
    Tracing(String),
    #[error("counting identity violated: {0}")]
    CountingIdentity(String),
    #[error("bad signature: {0}")]
    BadSignature(String),
}
