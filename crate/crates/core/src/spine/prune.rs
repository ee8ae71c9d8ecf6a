//! Combinatorial certificates that a standard spine is not minimal.
//!
//! Both checks are sound for spines of closed manifolds other than the three with complexity
//! zero, and neither is complete: surviving spines are minimal candidates only.

use crate::perm::{edge_index, face_vertices};
use crate::spine::triangulation::edge_classes;
use crate::spine::{SpineError, StandardSpine};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PruneReason {
    /// An embedded face touching at most three vertices.
    SmallEmbeddedFace { face: usize, vertices: usize },
    /// A triangle whose two edges at one corner are identified with matching directions, so
    /// the dual face crosses the singular set once along a disc through a single edge.
    ConeTriangle { edge: usize, apex: u8 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    MinimalCandidate,
    Pruned(PruneReason),
}

impl Verdict {
    pub fn is_pruned(&self) -> bool {
        matches!(self, Verdict::Pruned(_))
    }
}

/// The first face, if any, whose boundary visits no vertex and no edge twice and that touches
/// at most three vertices.
pub fn criterion_one(spine: &StandardSpine) -> Option<PruneReason> {
    spine.faces().iter().enumerate().find_map(|(face, f)| {
        let len = f.boundary.len();
        if len > 3 {
            return None;
        }
        let mut vertices: Vec<usize> = f.boundary.iter().map(|&s| spine.step_ends(s).0).collect();
        let mut edges: Vec<usize> = f.boundary.iter().map(|s| s.edge).collect();
        vertices.sort_unstable();
        vertices.dedup();
        edges.sort_unstable();
        edges.dedup();
        (vertices.len() == len && edges.len() == len).then_some(PruneReason::SmallEmbeddedFace { face, vertices: len })
    })
}

/// Triangles with two edges identified head to head, `x→y ~ x→z`. The oriented class of an
/// edge slot is its class together with whether the slot's vertex order matches the class's
/// first embedding.
pub(crate) fn cone_triangle(spine: &StandardSpine) -> Result<Option<PruneReason>, SpineError> {
    let table = spine
        .source()
        .ok_or_else(|| SpineError::Tracing("spine has no source triangulation".into()))?;
    let (classes, _) = edge_classes(table)?;
    let n = table.size();
    // Oriented class per ordered vertex pair of each tetrahedron.
    let mut oriented = vec![(usize::MAX, false); 16 * n];
    for (k, class) in classes.iter().enumerate() {
        for e in &class.embeddings {
            let [a, b, _, _] = e.vertices;
            oriented[16 * e.tet + 4 * a as usize + b as usize] = (k, true);
            oriented[16 * e.tet + 4 * b as usize + a as usize] = (k, false);
        }
    }
    for (index, edge) in spine.edges().iter().enumerate() {
        let (tet, face) = edge.triangle;
        let verts = face_vertices(face);
        for x in 0..3 {
            let y = verts[(x + 1) % 3];
            let z = verts[(x + 2) % 3];
            let apex = verts[x];
            debug_assert_ne!(edge_index(apex, y), edge_index(apex, z));
            let xy = oriented[16 * tet + 4 * apex as usize + y as usize];
            let xz = oriented[16 * tet + 4 * apex as usize + z as usize];
            if xy == xz {
                return Ok(Some(PruneReason::ConeTriangle { edge: index, apex }));
            }
        }
    }
    Ok(None)
}

/// Runs criterion 1 and, from three vertices on, the cone-triangle form of criterion 2. The cone
/// argument needs the complement of the cone's neighbourhood to carry at least three
/// tetrahedra, so it is not applied to smaller spines.
pub fn prune_nonminimal(spine: &StandardSpine) -> Verdict {
    if let Some(reason) = criterion_one(spine) {
        return Verdict::Pruned(reason);
    }
    if spine.vertex_count() < 3 {
        return Verdict::MinimalCandidate;
    }
    match cone_triangle(spine) {
        Ok(Some(reason)) => Verdict::Pruned(reason),
        _ => Verdict::MinimalCandidate,
    }
}
