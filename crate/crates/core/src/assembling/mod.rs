//! Manifolds with marked boundary: bricks, assembling and self-assembling with complexity
//! ledgers, Seifert geometry, and the closed non-orientable manifolds of complexity 6 and 7
//! they produce.

mod bundle;
mod census;
mod marked;
mod seifert;

pub use bundle::{classify_torus_bundle, BundleClass};
pub use census::{
    c7_constructions, classify_seifert_twisted, classify_two_twisted, nonorientable_c6_census, nonorientable_flat_manifolds,
    seifert_piece_22, seifert_piece_32, CensusClass, FlatManifold,
};
pub use marked::{assemble, attach_brick, self_assemble, Brick, Fibration, Kind, Ledger, MarkedManifold, Trace};
pub use seifert::{classify_geometry, geometry_from_invariants, Geometry, SeifertData};

use crate::theta::{Slope, ThetaError, ThetaGraph};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AssemblyError {
    #[error("ψ sends the marking to {0}, not {1}")]
    MarkingMismatch(ThetaGraph, ThetaGraph),
    #[error("markings are {0} flips apart")]
    TooFar(usize),
    #[error("torus {0} out of range for {1} boundary tori")]
    NoSuchTorus(usize, usize),
    #[error("cannot glue torus {0} to itself")]
    SameTorus(usize),
    #[error("slope {0} cannot be filled or flipped by a brick on {1}")]
    NotABrickFilling(Slope, ThetaGraph),
    #[error("bad base orbifold: {0}")]
    BadOrbifold(String),
    #[error("no Seifert fibration survives the gluing")]
    NoFibration,
    #[error("manifold still has boundary")]
    NotClosed,
    #[error(transparent)]
    Theta(#[from] ThetaError),
}
