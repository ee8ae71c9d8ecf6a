//! Exhaustive enumeration of closed one-vertex gluing tables.
//!
//! The search always glues the lowest unglued face. Its partner is either an unglued face of
//! a tetrahedron already reached, under any of the six face bijections, or face 0 of the next
//! unreached tetrahedron under one fixed bijection; every connected table is isomorphic to one
//! built this way. Partial tables are cut as soon as an edge closes up reversed or too many
//! edges close, and completed tables are deduplicated by signature.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::perm::{face_vertices, Perm4, ALL_PERMS};
use crate::spine::prune::{cone_triangle, criterion_one};
use crate::spine::triangulation::{check_one_vertex_manifold, DisjointSets, EdgeEmbedding};
use crate::spine::{canonical_form, canonical_signature, dual_spine, GluingTable, Signature, SpineError};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PruneFlags {
    /// Reject tables with an edge of degree at most two. Only sound from three tetrahedra on.
    pub low_degree: bool,
    /// Reject spines with an embedded face touching at most three vertices.
    pub criterion_one: bool,
    /// Reject triangles with two edges identified as a cone. Only sound from three
    /// tetrahedra on.
    pub cone_triangles: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub flags: PruneFlags,
    pub workers: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { flags: PruneFlags::default(), workers: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedTable {
    pub signature: Signature,
    /// The canonical representative.
    pub table: GluingTable,
}

#[derive(Clone)]
struct State {
    table: GluingTable,
    reached: usize,
    closed: usize,
}

#[derive(Clone, Copy)]
enum Move {
    Existing { target: usize, perm: Perm4 },
    Fresh,
}

/// The bijection taking face `f` onto face 0 of a fresh tetrahedron, vertices in order.
fn fresh_perm(face: u8) -> Perm4 {
    let mut img = [0u8; 4];
    for (v, target) in face_vertices(face).into_iter().zip([1, 2, 3]) {
        img[v as usize] = target;
    }
    img[face as usize] = 0;
    Perm4::new(img).unwrap()
}

fn lowest_unglued(state: &State) -> Option<(usize, u8)> {
    (0..state.reached).flat_map(|t| (0..4u8).map(move |f| (t, f))).find(|&(t, f)| state.table.gluing(t, f).is_none())
}

/// Possible partners of the lowest unglued face, in a fixed order.
fn moves(state: &State, n: usize, tet: usize, face: u8) -> Vec<Move> {
    let mut out = Vec::new();
    for t2 in tet..state.reached {
        for f2 in 0..4u8 {
            if (t2, f2) <= (tet, face) || state.table.gluing(t2, f2).is_some() {
                continue;
            }
            for perm in ALL_PERMS.iter().filter(|p| p.apply(face) == f2) {
                out.push(Move::Existing { target: t2, perm: *perm });
            }
        }
    }
    if state.reached < n {
        out.push(Move::Fresh);
    }
    out
}

/// Applies a move and checks the edges of the newly glued face. Returns false, leaving the
/// state to be restored by [`undo`], when the partial table can no longer complete.
fn apply(state: &mut State, n: usize, flags: PruneFlags, tet: usize, face: u8, mv: Move) -> bool {
    match mv {
        Move::Existing { target, perm } => state.table.glue(tet, face, target, perm).expect("both faces are free"),
        Move::Fresh => {
            state.table.glue(tet, face, state.reached, fresh_perm(face)).expect("fresh face is free");
            state.reached += 1;
        }
    }
    let verts = face_vertices(face);
    let mut done: u64 = 0;
    for k in 0..3 {
        let (a, b, c) = (verts[(k + 1) % 3], verts[(k + 2) % 3], verts[k]);
        let slot = 6 * tet + crate::perm::edge_index(a, b);
        if done >> slot & 1 == 1 {
            continue;
        }
        let forward = EdgeEmbedding { tet, vertices: [a, b, c, face] };
        let backward = EdgeEmbedding { tet, vertices: [a, b, face, c] };
        let Some((seen, walk)) = walk_chain(&state.table, forward) else { return false };
        match walk {
            Some(walk) => {
                done |= seen;
                state.closed += 1;
                if state.closed > n + 1 {
                    return false;
                }
                let degree = walk.len();
                if flags.low_degree && degree <= 2 {
                    return false;
                }
                if flags.criterion_one && degree <= 3 && embedded(&state.table, &walk) {
                    return false;
                }
            }
            None => {
                let Some((back, _)) = walk_chain(&state.table, backward) else { return false };
                // Both halves share only the starting slot.
                if seen & back != 1 << slot {
                    return false;
                }
            }
        }
    }
    let unglued = (0..n).flat_map(|t| (0..4u8).map(move |f| (t, f))).filter(|&(t, f)| state.table.gluing(t, f).is_none()).count();
    // A gluing closes at most three edges.
    if state.closed + 3 * unglued / 2 < n + 1 {
        return false;
    }
    if unglued > 0 && has_finished_vertex(&state.table, n) {
        return false;
    }
    !(flags.cone_triangles && has_partial_cone(&state.table, n))
}

/// A vertex whose link is already complete while unglued faces remain means a second vertex.
fn has_finished_vertex(table: &GluingTable, n: usize) -> bool {
    let mut corners = DisjointSets::new(4 * n);
    for (tet, face, g) in table.face_pairs() {
        for v in (0..4u8).filter(|&v| v != face) {
            corners.union(4 * tet + v as usize, 4 * g.tet + g.perm.apply(v) as usize);
        }
    }
    let mut open = vec![false; 4 * n];
    for tet in 0..n {
        for face in 0..4u8 {
            if table.gluing(tet, face).is_none() {
                for v in (0..4u8).filter(|&v| v != face) {
                    open[corners.find(4 * tet + v as usize)] = true;
                }
            }
        }
    }
    (0..4 * n).any(|c| corners.find(c) == c && !open[c])
}

fn undo(state: &mut State, tet: usize, face: u8, mv: Move, closed: usize) {
    state.table.unglue(tet, face);
    if let Move::Fresh = mv {
        state.reached -= 1;
    }
    state.closed = closed;
}

/// Walks forward from `start`. `None` if a slot repeats (the edge would be reversed);
/// otherwise the visited slots and, when the walk closes up, its embeddings.
fn walk_chain(table: &GluingTable, start: EdgeEmbedding) -> Option<(u64, Option<Vec<EdgeEmbedding>>)> {
    let mut seen: u64 = 0;
    let mut walk = Vec::new();
    let mut cur = start;
    loop {
        let slot = 6 * cur.tet + cur.edge();
        if seen >> slot & 1 == 1 {
            return None;
        }
        seen |= 1 << slot;
        walk.push(cur);
        match cur.next(table) {
            None => return Some((seen, None)),
            Some(next) if next == start => return Some((seen, Some(walk))),
            Some(next) => cur = next,
        }
    }
}

/// The dual face of a closed edge walk visits distinct tetrahedra through distinct triangles.
fn embedded(table: &GluingTable, walk: &[EdgeEmbedding]) -> bool {
    let mut tets: Vec<usize> = walk.iter().map(|e| e.tet).collect();
    let mut triangles: Vec<(usize, u8)> = walk
        .iter()
        .map(|e| {
            let d = e.vertices[3];
            let g = table.gluing(e.tet, d).expect("closed walk");
            (e.tet, d).min((g.tet, g.face))
        })
        .collect();
    tets.sort_unstable();
    tets.dedup();
    triangles.sort_unstable();
    triangles.dedup();
    tets.len() == walk.len() && triangles.len() == walk.len()
}

/// Oriented edges are identified along glued faces; a triangle with `x→y ~ x→z` stays a cone.
fn has_partial_cone(table: &GluingTable, n: usize) -> bool {
    let id = |t: usize, u: u8, v: u8| 16 * t + 4 * u as usize + v as usize;
    let mut sets = DisjointSets::new(16 * n);
    for (tet, face, g) in table.face_pairs() {
        let verts = face_vertices(face);
        for &u in &verts {
            for &v in &verts {
                if u != v {
                    sets.union(id(tet, u, v), id(g.tet, g.perm.apply(u), g.perm.apply(v)));
                }
            }
        }
    }
    for tet in 0..n {
        for face in 0..4u8 {
            if table.gluing(tet, face).is_none() {
                continue;
            }
            let verts = face_vertices(face);
            for x in 0..3 {
                let (apex, y, z) = (verts[x], verts[(x + 1) % 3], verts[(x + 2) % 3]);
                if sets.find(id(tet, apex, y)) == sets.find(id(tet, apex, z)) {
                    return true;
                }
            }
        }
    }
    false
}

fn accept(table: &GluingTable, flags: PruneFlags) -> Result<bool, SpineError> {
    if check_one_vertex_manifold(table).is_err() {
        return Ok(false);
    }
    let spine = dual_spine(table)?;
    if flags.criterion_one && criterion_one(&spine).is_some() {
        return Ok(false);
    }
    if flags.cone_triangles && cone_triangle(&spine)?.is_some() {
        return Ok(false);
    }
    if flags.low_degree && spine.faces().iter().any(|f| f.boundary.len() <= 2) {
        return Ok(false);
    }
    Ok(true)
}

fn search(state: &mut State, n: usize, flags: PruneFlags, out: &mut BTreeMap<Signature, GluingTable>) {
    let Some((tet, face)) = lowest_unglued(state) else {
        if state.reached == n && accept(&state.table, flags).unwrap_or(false) {
            let sig = canonical_signature(&state.table).expect("closed connected table");
            out.entry(sig).or_insert_with(|| canonical_form(&state.table).expect("closed connected table"));
        }
        return;
    };
    let closed = state.closed;
    for mv in moves(state, n, tet, face) {
        if apply(state, n, flags, tet, face, mv) {
            search(state, n, flags, out);
        }
        undo(state, tet, face, mv, closed);
    }
}

/// Partial states a few gluings deep, used as independent subtrees.
fn frontier(n: usize, flags: PruneFlags, depth: usize) -> Vec<State> {
    let mut level = vec![State { table: GluingTable::unglued(n), reached: 1, closed: 0 }];
    for _ in 0..depth {
        let mut next = Vec::new();
        for mut s in level {
            let Some((tet, face)) = lowest_unglued(&s) else {
                next.push(s);
                continue;
            };
            let closed = s.closed;
            for mv in moves(&s, n, tet, face) {
                if apply(&mut s, n, flags, tet, face, mv) {
                    next.push(s.clone());
                }
                undo(&mut s, tet, face, mv, closed);
            }
        }
        level = next;
    }
    level
}

/// All closed one-vertex manifold tables with `n` tetrahedra up to isomorphism, sorted by
/// signature. The result does not depend on `workers`.
pub fn enumerate_one_vertex(n: usize, options: &EnumerateOptions) -> Result<Vec<EnumeratedTable>, SpineError> {
    if n == 0 {
        return Err(SpineError::Empty);
    }
    if n > 10 {
        return Err(SpineError::IndexOutOfRange(format!("{n} tetrahedra is beyond the enumerator's range")));
    }
    let flags = options.flags;
    let frontier = frontier(n, flags, 3);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers.max(1))
        .build()
        .map_err(|e| SpineError::IndexOutOfRange(format!("thread pool: {e}")))?;
    let merged = pool.install(|| {
        frontier
            .into_par_iter()
            .map(|mut s| {
                let mut out = BTreeMap::new();
                search(&mut s, n, flags, &mut out);
                out
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    a.entry(k).or_insert(v);
                }
                a
            })
    });
    Ok(merged.into_iter().map(|(signature, table)| EnumeratedTable { signature, table }).collect())
}
