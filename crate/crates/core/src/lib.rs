//! Combinatorics of Matveev complexity for closed 3-manifolds: one-vertex triangulations and
//! their dual standard spines, the Farey calculus of slopes on a torus, and the assembling
//! calculus of manifolds with marked boundary.

pub mod linalg;
pub mod perm;
pub mod spine;
pub mod theta;
pub mod assembling;
