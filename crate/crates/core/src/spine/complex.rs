//! The standard spine dual to a one-vertex triangulation.

use crate::perm::{edge_index, face_vertices};
use crate::spine::triangulation::{check_one_vertex_manifold, edge_classes};
use crate::spine::{GluingTable, SpineError};

/// A spine edge, dual to a triangle of the triangulation.
///
/// `ends[0]` is the tetrahedron on the representative side of the triangle (the smaller
/// `(tet, face)` of the pair) and `ends[1]` the other. Germ slot `k` belongs to the edge of
/// that triangle opposite its `k`-th vertex, listed in increasing order on the representative
/// side; `germs[k]` is the spine face through that slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineEdge {
    pub ends: [usize; 2],
    pub germs: [usize; 3],
    pub triangle: (usize, u8),
}

/// One side of a face boundary: it runs along `edge`, through germ slot `slot`, from
/// `ends[0]` to `ends[1]` when `forward` and the other way otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryStep {
    pub edge: usize,
    pub slot: u8,
    pub forward: bool,
}

/// A spine face, dual to an edge of the triangulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpineFace {
    pub boundary: Vec<BoundaryStep>,
}

#[derive(Clone, Debug)]
pub struct StandardSpine {
    vertex_count: usize,
    edges: Vec<SpineEdge>,
    faces: Vec<SpineFace>,
    source: Option<GluingTable>,
}

impl StandardSpine {
    /// Assembles a cell structure without checking it; see [`is_standard`].
    pub fn from_parts(vertex_count: usize, edges: Vec<SpineEdge>, faces: Vec<SpineFace>) -> StandardSpine {
        StandardSpine { vertex_count, edges, faces, source: None }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[SpineEdge] {
        &self.edges
    }

    pub fn faces(&self) -> &[SpineFace] {
        &self.faces
    }

    /// The triangulation this spine is dual to, when built by [`dual_spine`]. Spine vertex `i`
    /// is tetrahedron `i`, spine edge `j` is the `j`-th face pair and spine face `k` is edge
    /// class `k`.
    pub fn source(&self) -> Option<&GluingTable> {
        self.source.as_ref()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Tail and head vertex of a boundary step.
    pub fn step_ends(&self, step: BoundaryStep) -> (usize, usize) {
        let [a, b] = self.edges[step.edge].ends;
        if step.forward {
            (a, b)
        } else {
            (b, a)
        }
    }
}

pub fn dual_spine(table: &GluingTable) -> Result<StandardSpine, SpineError> {
    let classes = check_one_vertex_manifold(table)?;
    let (_, owner) = edge_classes(table)?;
    let n = table.size();

    let mut edge_of_triangle = vec![usize::MAX; 4 * n];
    let mut edges = Vec::with_capacity(2 * n);
    for (tet, face, g) in table.face_pairs() {
        let verts = face_vertices(face);
        let germs = [0, 1, 2].map(|k| {
            let others: Vec<u8> = (0..3).filter(|&i| i != k).map(|i| verts[i]).collect();
            owner[6 * tet + edge_index(others[0], others[1])]
        });
        edge_of_triangle[4 * tet + face as usize] = edges.len();
        edge_of_triangle[4 * g.tet + g.face as usize] = edges.len();
        edges.push(SpineEdge { ends: [tet, g.tet], germs, triangle: (tet, face) });
    }

    let faces = classes
        .iter()
        .map(|class| {
            let boundary = class
                .embeddings
                .iter()
                .map(|emb| {
                    let [_, _, c, d] = emb.vertices;
                    let edge = edge_of_triangle[4 * emb.tet + d as usize];
                    let forward = edges[edge].triangle == (emb.tet, d);
                    let (face, apex) = if forward {
                        (d, c)
                    } else {
                        let g = table.gluing(emb.tet, d).expect("closed table");
                        (g.face, g.perm.apply(c))
                    };
                    let slot = face_vertices(face).iter().position(|&v| v == apex).expect("apex on face") as u8;
                    BoundaryStep { edge, slot, forward }
                })
                .collect();
            SpineFace { boundary }
        })
        .collect();

    Ok(StandardSpine { vertex_count: n, edges, faces, source: Some(table.clone()) })
}

/// True iff every face boundary is a closed nonempty word, every edge carries exactly its
/// three germs, and every vertex has the local model of the tetrahedral 1-skeleton.
pub fn is_standard(spine: &StandardSpine) -> bool {
    let v = spine.vertex_count;
    if v == 0 || spine.edges.is_empty() {
        return false;
    }
    if spine.edges.iter().any(|e| e.ends.iter().any(|&x| x >= v) || e.germs.iter().any(|&f| f >= spine.faces.len())) {
        return false;
    }
    let mut slot_seen = vec![[false; 3]; spine.edges.len()];
    for (fi, face) in spine.faces.iter().enumerate() {
        if face.boundary.is_empty() {
            return false;
        }
        for (i, &step) in face.boundary.iter().enumerate() {
            if step.edge >= spine.edges.len() || step.slot > 2 {
                return false;
            }
            let seen = &mut slot_seen[step.edge][step.slot as usize];
            if *seen || spine.edges[step.edge].germs[step.slot as usize] != fi {
                return false;
            }
            *seen = true;
            let next = face.boundary[(i + 1) % face.boundary.len()];
            if next.edge >= spine.edges.len() || spine.step_ends(step).1 != spine.step_ends(next).0 {
                return false;
            }
        }
    }
    if slot_seen.iter().any(|s| s.contains(&false)) {
        return false;
    }

    // Edge-ends are (edge, side); a face corner joins the end a step arrives through with the
    // end the next step leaves through.
    let mut ends_at: Vec<Vec<(usize, usize)>> = vec![Vec::new(); v];
    for (ei, e) in spine.edges.iter().enumerate() {
        for side in 0..2 {
            ends_at[e.ends[side]].push((ei, side));
        }
    }
    let mut corners: Vec<Vec<[(usize, usize); 2]>> = vec![Vec::new(); v];
    for face in &spine.faces {
        let len = face.boundary.len();
        for i in 0..len {
            let (a, b) = (face.boundary[i], face.boundary[(i + 1) % len]);
            let arrive = (a.edge, a.forward as usize);
            let leave = (b.edge, !b.forward as usize);
            let vertex = spine.step_ends(b).0;
            let mut pair = [arrive, leave];
            pair.sort_unstable();
            corners[vertex].push(pair);
        }
    }
    (0..v).all(|x| {
        let ends = &ends_at[x];
        if ends.len() != 4 {
            return false;
        }
        let mut got = corners[x].clone();
        got.sort_unstable();
        let mut want: Vec<[(usize, usize); 2]> = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let mut pair = [ends[i], ends[j]];
                pair.sort_unstable();
                want.push(pair);
            }
        }
        want.sort_unstable();
        got == want
    })
}
