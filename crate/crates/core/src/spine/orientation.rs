//! The first Stiefel-Whitney class of a closed triangulated 3-manifold.
//!
//! Every tetrahedron carries the orientation induced by its vertex order. A face pairing
//! preserves the induced orientations iff its vertex bijection is odd, so a pairing has
//! parity 1 (reversing) iff its bijection is even. With this convention the tetrahedron
//! doubled along identity bijections is orientable.

use std::collections::VecDeque;

use crate::spine::triangulation::edge_classes;
use crate::spine::{GluingTable, SpineError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceParity {
    pub tet: usize,
    pub face: u8,
    pub target: usize,
    pub target_face: u8,
    pub reversing: bool,
}

#[derive(Clone, Debug)]
pub struct W1Cocycle {
    /// One entry per face pair, in [`GluingTable::face_pairs`] order (the spine edge order).
    pub parities: Vec<FaceParity>,
    /// A flip per tetrahedron making every parity zero, if one exists.
    pub orientation: Option<Vec<bool>>,
}

impl W1Cocycle {
    pub fn orientable(&self) -> bool {
        self.orientation.is_some()
    }
}

pub(crate) fn reversing(perm: crate::perm::Perm4) -> bool {
    perm.is_even()
}

pub fn w1_cocycle(table: &GluingTable) -> Result<W1Cocycle, SpineError> {
    table.require_closed()?;
    table.validate()?;
    let parities: Vec<FaceParity> = table
        .face_pairs()
        .map(|(tet, face, g)| FaceParity {
            tet,
            face,
            target: g.tet,
            target_face: g.face,
            reversing: reversing(g.perm),
        })
        .collect();

    // Two-colour the dual graph along a breadth-first spanning forest, then check every pair.
    let n = table.size();
    let mut flip: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if flip[root].is_some() {
            continue;
        }
        flip[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(t) = queue.pop_front() {
            for face in 0..4u8 {
                let g = table.gluing(t, face).expect("closed table");
                if flip[g.tet].is_none() {
                    flip[g.tet] = Some(flip[t].unwrap() ^ reversing(g.perm));
                    queue.push_back(g.tet);
                }
            }
        }
    }
    let flip: Vec<bool> = flip.into_iter().map(Option::unwrap).collect();
    let consistent = parities.iter().all(|p| flip[p.tet] ^ flip[p.target] == p.reversing);
    Ok(W1Cocycle { parities, orientation: consistent.then_some(flip) })
}

/// Orientation character of every triangulation edge, read as a loop through the single
/// vertex. Indexed by edge class.
///
/// The vertex link is a sphere, so its triangles (one per tetrahedron corner) can be oriented
/// coherently; an edge of tetrahedron `t` from corner `a` to corner `b` reverses orientation
/// iff the coherent link orientation disagrees with the one induced by `t` at exactly one of
/// its two ends.
pub(crate) fn edge_loop_characters(table: &GluingTable) -> Result<Vec<bool>, SpineError> {
    let n = table.size();
    let (classes, _) = edge_classes(table)?;
    let mut sign: Vec<Option<bool>> = vec![None; 4 * n];
    for root in 0..4 * n {
        if sign[root].is_some() {
            continue;
        }
        sign[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(c) = queue.pop_front() {
            let (tet, v) = (c / 4, (c % 4) as u8);
            let s = sign[c].unwrap();
            for face in (0..4u8).filter(|&f| f != v) {
                let g = table.gluing(tet, face).expect("closed table");
                let other = 4 * g.tet + g.perm.apply(v) as usize;
                let want = s ^ reversing(g.perm);
                match sign[other] {
                    None => {
                        sign[other] = Some(want);
                        queue.push_back(other);
                    }
                    Some(have) if have != want => {
                        return Err(SpineError::NotManifold("vertex link is non-orientable".into()));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    classes
        .iter()
        .map(|class| {
            let mut values = class.embeddings.iter().map(|e| {
                let [a, b, _, _] = e.vertices;
                sign[4 * e.tet + a as usize].unwrap() ^ sign[4 * e.tet + b as usize].unwrap()
            });
            let first = values.next().expect("edge classes are nonempty");
            if values.all(|x| x == first) {
                Ok(first)
            } else {
                Err(SpineError::NotManifold("edge loop character depends on the embedding".into()))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all 2^n reorientations.
    fn orientable_brute(t: &GluingTable) -> bool {
        let n = t.size();
        (0u32..1 << n).any(|mask| {
            t.face_pairs().all(|(a, _, g)| ((mask >> a) & 1 == 1) ^ ((mask >> g.tet) & 1 == 1) == reversing(g.perm))
        })
    }

    #[test]
    fn doubled_tetrahedron_is_orientable() {
        let t: GluingTable = "0 0 : 1 0 : 123\n0 1 : 1 1 : 023\n0 2 : 1 2 : 013\n0 3 : 1 3 : 012\n".parse().unwrap();
        let w = w1_cocycle(&t).unwrap();
        assert!(w.orientable());
        assert!(orientable_brute(&t));
        assert!(w.parities.iter().all(|p| p.reversing));
    }

    #[test]
    fn reflected_doubling_is_non_orientable_as_a_cocycle() {
        // Faces 0, 1, 2 by identity and face 3 by a transposition fixing face 3's images:
        // one odd gluing among even ones cannot be resolved.
        let t: GluingTable = "0 0 : 1 0 : 123\n0 1 : 1 1 : 023\n0 2 : 1 2 : 013\n0 3 : 1 3 : 102\n".parse().unwrap();
        let w = w1_cocycle(&t).unwrap();
        assert_eq!(w.orientable(), orientable_brute(&t));
        assert!(!w.orientable());
    }

    /// Vertex classes of the orientation double cover: corner `(t, v)` on sheet `s` is glued
    /// to sheet `s + parity`. An edge loop reverses orientation iff its two ends lift to
    /// different vertices.
    fn characters_by_double_cover(t: &GluingTable) -> Vec<bool> {
        let n = t.size();
        let id = |tet: usize, sheet: usize, v: u8| 8 * tet + 4 * sheet + v as usize;
        let mut sets = crate::spine::triangulation::DisjointSets::new(8 * n);
        for (tet, face, g) in t.face_pairs() {
            for sheet in 0..2 {
                let other = sheet ^ reversing(g.perm) as usize;
                for v in (0..4u8).filter(|&v| v != face) {
                    sets.union(id(tet, sheet, v), id(g.tet, other, g.perm.apply(v)));
                }
            }
        }
        let (classes, _) = edge_classes(t).unwrap();
        classes
            .iter()
            .map(|c| {
                let e = c.embeddings[0];
                let [a, b, _, _] = e.vertices;
                sets.find(id(e.tet, 0, a)) != sets.find(id(e.tet, 0, b))
            })
            .collect()
    }

    #[test]
    fn loop_characters_match_double_cover() {
        for n in 1..=3 {
            for e in crate::spine::enumerate_one_vertex(n, &Default::default()).unwrap() {
                let w = w1_cocycle(&e.table).unwrap();
                let chars = edge_loop_characters(&e.table).unwrap();
                assert_eq!(chars, characters_by_double_cover(&e.table), "{}", e.signature);
                assert_eq!(w.orientable(), orientable_brute(&e.table));
                assert_eq!(w.orientable(), chars.iter().all(|&c| !c));
            }
        }
    }
}
