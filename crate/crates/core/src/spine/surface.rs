//! Surfaces carried by a spine: the Stiefel-Whitney surface and its traced topology.

use std::collections::VecDeque;

use crate::linalg::{Gf2Matrix, Gf2Solution};
use crate::spine::orientation::edge_loop_characters;
use crate::spine::triangulation::DisjointSets;
use crate::spine::{SpineError, StandardSpine};

/// A set of spine faces meeting every spine edge in an even number of germs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceInSpine {
    members: Vec<bool>,
    incidence: Vec<u8>,
}

impl SurfaceInSpine {
    pub fn new(spine: &StandardSpine, members: Vec<bool>) -> Result<SurfaceInSpine, SpineError> {
        if members.len() != spine.faces().len() {
            return Err(SpineError::IndexOutOfRange(format!(
                "{} face flags for {} faces",
                members.len(),
                spine.faces().len()
            )));
        }
        let incidence: Vec<u8> =
            spine.edges().iter().map(|e| e.germs.iter().filter(|&&f| members[f]).count() as u8).collect();
        if let Some(bad) = incidence.iter().position(|&k| k % 2 == 1) {
            return Err(SpineError::OddIncidence(bad));
        }
        Ok(SurfaceInSpine { members, incidence })
    }

    pub fn contains(&self, face: usize) -> bool {
        self.members[face]
    }

    pub fn face_set(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&f| self.members[f]).collect()
    }

    /// Number of germs of the surface at each spine edge (0 or 2).
    pub fn incidence(&self) -> &[u8] {
        &self.incidence
    }

    pub fn is_empty(&self) -> bool {
        !self.members.contains(&true)
    }
}

/// The unique surface in the spine meeting each triangulation edge loop oddly iff the loop
/// reverses orientation.
pub fn stiefel_whitney_surface(spine: &StandardSpine) -> Result<SurfaceInSpine, SpineError> {
    let order: Vec<usize> = (0..spine.faces().len()).collect();
    stiefel_whitney_surface_ordered(spine, &order)
}

/// Same system with the unknowns listed in `order`.
pub(crate) fn stiefel_whitney_surface_ordered(
    spine: &StandardSpine,
    order: &[usize],
) -> Result<SurfaceInSpine, SpineError> {
    let table = spine
        .source()
        .ok_or_else(|| SpineError::Tracing("spine has no source triangulation".into()))?;
    let characters = edge_loop_characters(table)?;
    let nf = spine.faces().len();
    let mut column = vec![0; nf];
    for (col, &face) in order.iter().enumerate() {
        column[face] = col;
    }
    let mut system = Gf2Matrix::new(nf);
    let mut rhs = Vec::new();
    // Cycle condition at every spine edge.
    for e in spine.edges() {
        system.push_row(e.germs.iter().map(|&f| column[f]));
        rhs.push(false);
    }
    // The face dual to edge e meets the loop e once and no other face meets it.
    for (face, &w) in characters.iter().enumerate() {
        system.push_row([column[face]]);
        rhs.push(w);
    }
    match system.solve(&rhs) {
        Gf2Solution::Unique(x) => SurfaceInSpine::new(spine, (0..nf).map(|f| x[column[f]]).collect()),
        Gf2Solution::Inconsistent => Err(SpineError::Inconsistent),
        Gf2Solution::Underdetermined(k) => Err(SpineError::NotUnique(k)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceComponent {
    /// Spine faces in this component, increasing.
    pub faces: Vec<usize>,
    /// Spine vertices the component passes through, increasing.
    pub vertices: Vec<usize>,
    pub euler: i64,
    pub orientable: bool,
}

impl SurfaceComponent {
    /// Orientable genus, or the number of cross-caps for a non-orientable component.
    pub fn genus(&self) -> i64 {
        if self.orientable {
            (2 - self.euler) / 2
        } else {
            2 - self.euler
        }
    }

    pub fn is_sphere(&self) -> bool {
        self.orientable && self.euler == 2
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurfaceTopology {
    pub components: Vec<SurfaceComponent>,
}

impl SurfaceTopology {
    pub fn euler(&self) -> i64 {
        self.components.iter().map(|c| c.euler).sum()
    }
}

/// Side `i` of a polygon runs from its corner `i` to corner `i + 1`.
struct Traced {
    polygons: Vec<usize>,
    /// (polygon, side) pairs glued to each other.
    side_pairs: Vec<[(usize, usize); 2]>,
    corner_base: Vec<usize>,
    corner_classes: DisjointSets,
    polygon_classes: DisjointSets,
}

fn trace(spine: &StandardSpine, sigma: &SurfaceInSpine) -> Result<Traced, SpineError> {
    let polygons = sigma.face_set();
    let mut corner_base = Vec::with_capacity(polygons.len());
    let mut total = 0;
    for &f in &polygons {
        corner_base.push(total);
        total += spine.faces()[f].boundary.len();
    }
    let mut at_edge: Vec<Vec<(usize, usize)>> = vec![Vec::new(); spine.edges().len()];
    for (p, &f) in polygons.iter().enumerate() {
        for (i, step) in spine.faces()[f].boundary.iter().enumerate() {
            at_edge[step.edge].push((p, i));
        }
    }
    let mut corner_classes = DisjointSets::new(total);
    let mut polygon_classes = DisjointSets::new(polygons.len());
    let mut side_pairs = Vec::new();
    for (e, sides) in at_edge.iter().enumerate() {
        match sides.len() {
            0 => continue,
            2 => {}
            k => return Err(SpineError::Tracing(format!("{k} surface sides at spine edge {e}"))),
        }
        // Tail corner and head corner of each side, relative to the edge direction.
        let ends: Vec<(usize, usize)> = sides
            .iter()
            .map(|&(p, i)| {
                let boundary = &spine.faces()[polygons[p]].boundary;
                let here = corner_base[p] + i;
                let next = corner_base[p] + (i + 1) % boundary.len();
                if boundary[i].forward {
                    (here, next)
                } else {
                    (next, here)
                }
            })
            .collect();
        corner_classes.union(ends[0].0, ends[1].0);
        corner_classes.union(ends[0].1, ends[1].1);
        polygon_classes.union(sides[0].0, sides[1].0);
        side_pairs.push([sides[0], sides[1]]);
    }
    Ok(Traced { polygons, side_pairs, corner_base, corner_classes, polygon_classes })
}

/// Glues the faces of `sigma` along their shared spine edges into an abstract closed surface.
pub fn surface_topology(spine: &StandardSpine, sigma: &SurfaceInSpine) -> Result<SurfaceTopology, SpineError> {
    let mut tr = trace(spine, sigma)?;
    let np = tr.polygons.len();
    let roots: Vec<usize> = (0..np).map(|p| tr.polygon_classes.find(p)).collect();
    let mut comp_ids: Vec<usize> = roots.clone();
    comp_ids.sort_unstable();
    comp_ids.dedup();
    let comp_of = |p: usize| comp_ids.binary_search(&roots[p]).unwrap();

    // Orientation propagation: glued sides must be traversed oppositely.
    let mut adjacency: Vec<Vec<(usize, bool)>> = vec![Vec::new(); np];
    for &[(p1, s1), (p2, s2)] in &tr.side_pairs {
        let f1 = spine.faces()[tr.polygons[p1]].boundary[s1].forward;
        let f2 = spine.faces()[tr.polygons[p2]].boundary[s2].forward;
        let flip = !(f1 ^ f2);
        adjacency[p1].push((p2, flip));
        adjacency[p2].push((p1, flip));
    }
    let mut sign: Vec<Option<bool>> = vec![None; np];
    let mut orientable = vec![true; comp_ids.len()];
    for root in 0..np {
        if sign[root].is_some() {
            continue;
        }
        sign[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(p) = queue.pop_front() {
            for &(q, flip) in &adjacency[p] {
                let want = sign[p].unwrap() ^ flip;
                match sign[q] {
                    None => {
                        sign[q] = Some(want);
                        queue.push_back(q);
                    }
                    Some(have) if have != want => orientable[comp_of(p)] = false,
                    Some(_) => {}
                }
            }
        }
    }

    let mut components: Vec<SurfaceComponent> = orientable
        .iter()
        .map(|&orientable| SurfaceComponent { faces: Vec::new(), vertices: Vec::new(), euler: 0, orientable })
        .collect();
    let mut corner_sets: Vec<Vec<usize>> = vec![Vec::new(); comp_ids.len()];
    let mut sides = vec![0i64; comp_ids.len()];
    let mut sheets: Vec<Vec<usize>> = vec![Vec::new(); spine.vertex_count()];
    for p in 0..np {
        let c = comp_of(p);
        let face = tr.polygons[p];
        components[c].faces.push(face);
        let boundary = &spine.faces()[face].boundary;
        sides[c] += boundary.len() as i64;
        for (i, &step) in boundary.iter().enumerate() {
            let class = tr.corner_classes.find(tr.corner_base[p] + i);
            let vertex = spine.step_ends(step).0;
            components[c].vertices.push(vertex);
            corner_sets[c].push(class);
            sheets[vertex].push(class);
        }
    }
    // A vertex link holds no two disjoint circles, so each spine vertex carries one sheet.
    for (vertex, classes) in sheets.iter_mut().enumerate() {
        classes.sort_unstable();
        classes.dedup();
        if classes.len() > 1 {
            return Err(SpineError::Tracing(format!("{} surface sheets at spine vertex {vertex}", classes.len())));
        }
    }
    for (c, comp) in components.iter_mut().enumerate() {
        comp.vertices.sort_unstable();
        comp.vertices.dedup();
        comp.faces.sort_unstable();
        let corners = &mut corner_sets[c];
        corners.sort_unstable();
        corners.dedup();
        // Every side is shared by two polygons.
        comp.euler = corners.len() as i64 - sides[c] / 2 + comp.faces.len() as i64;
    }
    components.sort_by(|a, b| a.faces.cmp(&b.faces));
    Ok(SurfaceTopology { components })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentStats {
    /// Pairs of spine vertices where the surface passes three edge-ends.
    pub v3: usize,
    /// Spine vertices where the surface passes all four edge-ends.
    pub v4: usize,
    /// Discs of the surface cut along the preimage of the singular graph.
    pub f: usize,
    pub genus: i64,
    pub euler: i64,
    pub orientable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaStats {
    pub components: Vec<ComponentStats>,
}

impl SigmaStats {
    pub fn v3(&self) -> usize {
        self.components.iter().map(|c| c.v3).sum()
    }

    pub fn v4(&self) -> usize {
        self.components.iter().map(|c| c.v4).sum()
    }

    pub fn f(&self) -> usize {
        self.components.iter().map(|c| c.f).sum()
    }
}

/// Vertex and disc counts of a nonempty surface, checking `v3 + v4 = f - χ` per component.
pub fn sigma_stats(spine: &StandardSpine, sigma: &SurfaceInSpine) -> Result<SigmaStats, SpineError> {
    if sigma.is_empty() {
        return Err(SpineError::Tracing("surface is empty".into()));
    }
    let topology = surface_topology(spine, sigma)?;
    let mut ends_on = vec![0usize; spine.vertex_count()];
    for (e, edge) in spine.edges().iter().enumerate() {
        if sigma.incidence()[e] > 0 {
            ends_on[edge.ends[0]] += 1;
            ends_on[edge.ends[1]] += 1;
        }
    }
    let mut components = Vec::new();
    for comp in &topology.components {
        let mut raw3 = 0;
        let mut v4 = 0;
        for &v in &comp.vertices {
            match ends_on[v] {
                3 => raw3 += 1,
                4 => v4 += 1,
                k => return Err(SpineError::CountingIdentity(format!("surface passes {k} edge-ends at vertex {v}"))),
            }
        }
        if raw3 % 2 == 1 {
            return Err(SpineError::CountingIdentity(format!("{raw3} three-valent vertices")));
        }
        let f = comp.faces.len();
        let edges: usize = comp.faces.iter().map(|&x| spine.faces()[x].boundary.len()).sum::<usize>() / 2;
        if 2 * edges != 3 * raw3 + 4 * v4 {
            return Err(SpineError::CountingIdentity(format!(
                "{edges} surface edges against {raw3} three-valent and {v4} four-valent vertices"
            )));
        }
        let v3 = raw3 / 2;
        if (v3 + v4) as i64 != f as i64 - comp.euler {
            return Err(SpineError::CountingIdentity(format!(
                "v3 + v4 = {} but f - χ = {}",
                v3 + v4,
                f as i64 - comp.euler
            )));
        }
        components.push(ComponentStats { v3, v4, f, genus: comp.genus(), euler: comp.euler, orientable: comp.orientable });
    }
    Ok(SigmaStats { components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spine::{dual_spine, enumerate_one_vertex, w1_cocycle, GluingTable};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn sol() -> GluingTable {
        include_str!("../../../../fixtures/sol_bundle_6.tri").parse().unwrap()
    }

    #[test]
    fn empty_surface_has_no_components() {
        let t = &enumerate_one_vertex(1, &Default::default()).unwrap()[0].table;
        let s = dual_spine(t).unwrap();
        let sigma = stiefel_whitney_surface(&s).unwrap();
        assert!(sigma.is_empty());
        assert_eq!(surface_topology(&s, &sigma).unwrap().components.len(), 0);
        assert!(sigma_stats(&s, &sigma).is_err());
    }

    #[test]
    fn odd_incidence_is_rejected() {
        let t = &enumerate_one_vertex(1, &Default::default()).unwrap()[1].table;
        let s = dual_spine(t).unwrap();
        let members: Vec<bool> = (0..s.faces().len()).map(|f| f == 0).collect();
        let odd = s.edges().iter().any(|e| e.germs.iter().filter(|&&g| g == 0).count() % 2 == 1);
        assert_eq!(SurfaceInSpine::new(&s, members).is_err(), odd);
    }

    #[test]
    fn sol_bundle_surface_is_one_torus() {
        let s = dual_spine(&sol()).unwrap();
        let sigma = stiefel_whitney_surface(&s).unwrap();
        let topology = surface_topology(&s, &sigma).unwrap();
        assert_eq!(topology.components.len(), 1);
        let c = &topology.components[0];
        assert_eq!((c.euler, c.orientable, c.genus()), (0, true, 1));
        let stats = sigma_stats(&s, &sigma).unwrap();
        assert!(2 * stats.v3() + stats.v4() <= 6);
        assert_eq!(stats.v3() + stats.v4(), stats.f());
    }

    #[test]
    fn solution_does_not_depend_on_unknown_order() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut tables: Vec<GluingTable> = enumerate_one_vertex(3, &Default::default()).unwrap().into_iter().map(|e| e.table).collect();
        tables.push(sol());
        for t in tables {
            let s = dual_spine(&t).unwrap();
            let base = stiefel_whitney_surface(&s).unwrap();
            for _ in 0..5 {
                let mut order: Vec<usize> = (0..s.faces().len()).collect();
                order.shuffle(&mut rng);
                assert_eq!(stiefel_whitney_surface_ordered(&s, &order).unwrap(), base);
            }
            assert_eq!(base.is_empty(), w1_cocycle(&t).unwrap().orientable());
        }
    }
}
