//! Cellular homology of a spine, which is that of the manifold in degrees up to two.

use crate::linalg::{AbelianGroup, Gf2Matrix};
use crate::spine::triangulation::DisjointSets;
use crate::spine::StandardSpine;

/// Integral first homology: generators are the edges off a spanning tree of the 1-skeleton,
/// relations the face boundaries.
pub fn first_homology(spine: &StandardSpine) -> AbelianGroup {
    let mut forest = DisjointSets::new(spine.vertex_count());
    let mut column = vec![None; spine.edges().len()];
    let mut gens = 0;
    for (i, e) in spine.edges().iter().enumerate() {
        if !forest.union(e.ends[0], e.ends[1]) {
            column[i] = Some(gens);
            gens += 1;
        }
    }
    let relations: Vec<Vec<i64>> = spine
        .faces()
        .iter()
        .map(|f| {
            let mut row = vec![0i64; gens];
            for s in &f.boundary {
                if let Some(c) = column[s.edge] {
                    row[c] += if s.forward { 1 } else { -1 };
                }
            }
            row
        })
        .collect();
    AbelianGroup::from_presentation(gens, &relations)
}

/// `[b0, b1, b2]` over GF(2).
pub fn z2_homology_ranks(spine: &StandardSpine) -> [usize; 3] {
    let (v, e, f) = (spine.vertex_count(), spine.edges().len(), spine.faces().len());
    let mut d1 = Gf2Matrix::new(v);
    for edge in spine.edges() {
        d1.push_row([edge.ends[0], edge.ends[1]]);
    }
    let mut d2 = Gf2Matrix::new(e);
    for face in spine.faces() {
        d2.push_row(face.boundary.iter().map(|s| s.edge));
    }
    let (r1, r2) = (d1.rank(), d2.rank());
    [v - r1, e - r1 - r2, f - r2]
}
