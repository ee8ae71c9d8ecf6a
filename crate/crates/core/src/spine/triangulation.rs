//! Vertex and edge classes of a realized triangulation.

use crate::perm::{edge_index, EDGE_VERTICES};
use crate::spine::{GluingTable, SpineError};

/// Minimal disjoint-set forest over `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    pub fn class_count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Number of vertices of the realized triangulation: classes of tetrahedron corners under
/// the face identifications.
pub fn vertex_count(table: &GluingTable) -> Result<usize, SpineError> {
    table.require_closed()?;
    table.validate()?;
    let mut corners = DisjointSets::new(4 * table.size());
    for (tet, face, g) in table.face_pairs() {
        for v in 0..4u8 {
            if v != face {
                corners.union(4 * tet + v as usize, 4 * g.tet + g.perm.apply(v) as usize);
            }
        }
    }
    Ok(corners.class_count())
}

/// One position of an edge inside a tetrahedron, as visited by a walk around the edge.
///
/// `vertices = [a, b, c, d]`: the edge is `ab`, the walk entered through the face opposite
/// `c` and leaves through the face opposite `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeEmbedding {
    pub tet: usize,
    pub vertices: [u8; 4],
}

impl EdgeEmbedding {
    pub fn edge(&self) -> usize {
        edge_index(self.vertices[0], self.vertices[1])
    }

    /// The next position around the edge, across the face opposite `d`.
    pub fn next(&self, table: &GluingTable) -> Option<EdgeEmbedding> {
        let [a, b, c, d] = self.vertices;
        let g = table.gluing(self.tet, d)?;
        let p = g.perm;
        Some(EdgeEmbedding { tet: g.tet, vertices: [p.apply(a), p.apply(b), p.apply(d), p.apply(c)] })
    }
}

/// The cyclic sequence of positions around one edge of a closed triangulation.
#[derive(Clone, Debug)]
pub struct EdgeClass {
    pub embeddings: Vec<EdgeEmbedding>,
}

impl EdgeClass {
    pub fn degree(&self) -> usize {
        self.embeddings.len()
    }
}

/// Starting state for walks: edge `ab` with `a < b`, leaving through the higher-numbered face.
fn start_state(tet: usize, edge: usize) -> EdgeEmbedding {
    let [a, b] = EDGE_VERTICES[edge];
    let mut rest = (0..4u8).filter(|&v| v != a && v != b);
    let c = rest.next().unwrap();
    let d = rest.next().unwrap();
    EdgeEmbedding { tet, vertices: [a, b, c, d] }
}

/// Edge classes of a closed table, ordered by their first tetrahedron edge, together with
/// the class index of every `(tet, edge)` slot.
pub fn edge_classes(table: &GluingTable) -> Result<(Vec<EdgeClass>, Vec<usize>), SpineError> {
    table.require_closed()?;
    let n = table.size();
    let mut owner = vec![usize::MAX; 6 * n];
    let mut classes = Vec::new();
    for tet in 0..n {
        for edge in 0..6 {
            if owner[6 * tet + edge] != usize::MAX {
                continue;
            }
            let start = start_state(tet, edge);
            let mut cur = start;
            let mut embeddings = Vec::new();
            loop {
                let slot = 6 * cur.tet + cur.edge();
                if owner[slot] != usize::MAX {
                    // Revisiting a slot before closing up means the edge meets itself reversed.
                    return Err(SpineError::NotManifold(format!(
                        "edge {:?} of tetrahedron {tet} is identified with itself in reverse",
                        EDGE_VERTICES[edge]
                    )));
                }
                owner[slot] = classes.len();
                embeddings.push(cur);
                cur = cur.next(table).expect("closed table");
                if cur == start {
                    break;
                }
            }
            classes.push(EdgeClass { embeddings });
        }
    }
    Ok((classes, owner))
}

/// Checks that a closed table with one vertex realizes a closed 3-manifold: no edge is
/// identified with itself in reverse and the vertex link is a sphere (`E = n + 1`).
pub fn check_one_vertex_manifold(table: &GluingTable) -> Result<Vec<EdgeClass>, SpineError> {
    let vertices = vertex_count(table)?;
    if vertices != 1 {
        return Err(SpineError::NotOneVertex(vertices));
    }
    let (classes, _) = edge_classes(table)?;
    let n = table.size();
    if classes.len() != n + 1 {
        // Link Euler characteristic is 2E - 2n.
        return Err(SpineError::NotManifold(format!(
            "vertex link has Euler characteristic {}",
            2 * classes.len() as i64 - 2 * n as i64
        )));
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doubled() -> GluingTable {
        "0 0 : 1 0 : 123\n0 1 : 1 1 : 023\n0 2 : 1 2 : 013\n0 3 : 1 3 : 012\n".parse().unwrap()
    }

    /// Corner classes computed by flooding along explicit corner adjacency, independent of
    /// the union-find path.
    fn flood_vertex_count(t: &GluingTable) -> usize {
        let n = t.size();
        let mut seen = vec![false; 4 * n];
        let mut count = 0;
        for start in 0..4 * n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(c) = stack.pop() {
                let (tet, v) = (c / 4, (c % 4) as u8);
                for face in (0..4u8).filter(|&f| f != v) {
                    let g = t.gluing(tet, face).unwrap();
                    let other = 4 * g.tet + g.perm.apply(v) as usize;
                    if !seen[other] {
                        seen[other] = true;
                        stack.push(other);
                    }
                }
            }
        }
        count
    }

    #[test]
    fn doubled_tetrahedron_has_four_vertices() {
        let t = doubled();
        assert_eq!(vertex_count(&t).unwrap(), 4);
        assert_eq!(flood_vertex_count(&t), 4);
        assert!(matches!(check_one_vertex_manifold(&t), Err(SpineError::NotOneVertex(4))));
    }

    #[test]
    fn empty_table_is_rejected() {
        let err = vertex_count(&GluingTable::unglued(0)).unwrap_err();
        assert!(err.to_string().contains("empty triangulation"));
    }

    #[test]
    fn doubled_tetrahedron_edges_have_degree_two() {
        let (classes, owner) = edge_classes(&doubled()).unwrap();
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|c| c.degree() == 2));
        assert_eq!(owner.len(), 12);
    }
}
