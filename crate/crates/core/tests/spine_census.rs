use std::collections::{BTreeMap, BTreeSet};

use complexity_core::perm::{face_vertices, Perm4, ALL_PERMS};
use complexity_core::spine::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every closed gluing table on `n` tetrahedra, by pairing faces in all possible ways.
fn all_closed_tables(n: usize) -> Vec<GluingTable> {
    fn rec(t: &mut GluingTable, n: usize, out: &mut Vec<GluingTable>) {
        let free = (0..n).flat_map(|a| (0..4u8).map(move |f| (a, f))).find(|&(a, f)| t.gluing(a, f).is_none());
        let Some((a, f)) = free else {
            out.push(t.clone());
            return;
        };
        for b in 0..n {
            for g in 0..4u8 {
                if (b, g) <= (a, f) || t.gluing(b, g).is_some() {
                    continue;
                }
                for p in ALL_PERMS.iter().filter(|p| p.apply(f) == g) {
                    t.glue(a, f, b, *p).unwrap();
                    rec(t, n, out);
                    t.unglue(a, f);
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut GluingTable::unglued(n), n, &mut out);
    out
}

/// Independent manifold test: corners flooded for vertices, oriented edge slots merged
/// across faces for edges.
fn brute_one_vertex_manifold(t: &GluingTable) -> bool {
    let n = t.size();
    let mut parent: Vec<usize> = (0..16 * n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] == x {
            x
        } else {
            let r = find(p, p[x]);
            p[x] = r;
            r
        }
    }
    let id = |a: usize, u: u8, v: u8| 16 * a + 4 * u as usize + v as usize;
    let mut corners: Vec<usize> = (0..4 * n).collect();
    for a in 0..n {
        for f in 0..4u8 {
            let g = t.gluing(a, f).unwrap();
            let vs = face_vertices(f);
            for &u in &vs {
                let cu = find(&mut corners, 4 * a + u as usize);
                let cv = find(&mut corners, 4 * g.tet + g.perm.apply(u) as usize);
                corners[cu] = cv;
                for &v in &vs {
                    if u != v {
                        let x = find(&mut parent, id(a, u, v));
                        let y = find(&mut parent, id(g.tet, g.perm.apply(u), g.perm.apply(v)));
                        parent[x] = y;
                    }
                }
            }
        }
    }
    let vertices = (0..4 * n).filter(|&c| find(&mut corners, c) == c).count();
    let mut classes = BTreeSet::new();
    for a in 0..n {
        for u in 0..4u8 {
            for v in u + 1..4 {
                let x = find(&mut parent, id(a, u, v));
                let y = find(&mut parent, id(a, v, u));
                if x == y {
                    return false;
                }
                classes.insert(x.min(y));
            }
        }
    }
    vertices == 1 && classes.len() == n + 1
}

fn relabelings(n: usize) -> Vec<(Vec<usize>, Vec<Perm4>)> {
    let mut tet_maps: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        tet_maps = tet_maps
            .into_iter()
            .flat_map(|m| {
                let free: Vec<usize> = (0..n).filter(|x| !m.contains(x)).collect();
                free.into_iter().map(move |x| [m.clone(), vec![x]].concat())
            })
            .collect();
    }
    let mut vmaps: Vec<Vec<Perm4>> = vec![vec![]];
    for _ in 0..n {
        vmaps = vmaps.into_iter().flat_map(|m| ALL_PERMS.iter().map(move |p| [m.clone(), vec![*p]].concat())).collect();
    }
    tet_maps.iter().flat_map(|t| vmaps.iter().map(move |v| (t.clone(), v.clone()))).collect()
}

/// Brute-force isomorphism class label: the smallest text over all relabelings.
fn brute_class(t: &GluingTable, all: &[(Vec<usize>, Vec<Perm4>)]) -> String {
    all.iter().map(|(tm, vm)| t.relabel(tm, vm).to_string()).min().unwrap()
}

#[test]
fn enumeration_matches_brute_force_up_to_two_tetrahedra() {
    for (n, expected) in [(1, 3), (2, 12)] {
        let rl = relabelings(n);
        let raw: Vec<GluingTable> = all_closed_tables(n).into_iter().filter(brute_one_vertex_manifold).collect();
        let mut by_class: BTreeMap<String, BTreeSet<Signature>> = BTreeMap::new();
        for t in &raw {
            by_class.entry(brute_class(t, &rl)).or_default().insert(canonical_signature(t).unwrap());
        }
        // Signatures separate exactly the brute-force classes.
        assert!(by_class.values().all(|s| s.len() == 1));
        let sigs: BTreeSet<Signature> = by_class.values().flat_map(|s| s.iter().cloned()).collect();
        assert_eq!(sigs.len(), by_class.len());
        assert_eq!(sigs.len(), expected);

        let enumerated: BTreeSet<Signature> =
            enumerate_one_vertex(n, &EnumerateOptions::default()).unwrap().into_iter().map(|e| e.signature).collect();
        assert_eq!(enumerated, sigs);
    }
}

#[test]
fn frozen_counts_through_three_tetrahedra() {
    let c1 = EnumerateOptions { flags: PruneFlags { criterion_one: true, ..Default::default() }, workers: 1 };
    for (n, total, survivors) in [(1, 3, 2), (2, 12, 4), (3, 63, 7)] {
        assert_eq!(enumerate_one_vertex(n, &EnumerateOptions::default()).unwrap().len(), total);
        assert_eq!(enumerate_one_vertex(n, &c1).unwrap().len(), survivors);
    }
}

#[test]
fn survivors_are_the_known_minimal_manifolds() {
    let c1 = EnumerateOptions { flags: PruneFlags { criterion_one: true, ..Default::default() }, workers: 1 };
    let expected: [&[&str]; 3] = [
        &["Z4", "Z5"],
        &["Z2+Z2", "Z5", "Z7", "Z8"],
        &["Z10", "Z11", "Z12", "Z13", "Z4", "Z6", "Z9"],
    ];
    for (n, want) in (1..=3).zip(expected) {
        let mut got: Vec<String> = enumerate_one_vertex(n, &c1)
            .unwrap()
            .iter()
            .map(|e| first_homology(&dual_spine(&e.table).unwrap()).to_string())
            .collect();
        got.sort();
        assert_eq!(got, want, "n = {n}");
    }
}

#[test]
fn pruning_only_removes_tables() {
    let all: BTreeSet<Signature> =
        enumerate_one_vertex(3, &EnumerateOptions::default()).unwrap().into_iter().map(|e| e.signature).collect();
    for flags in [
        PruneFlags { low_degree: true, ..Default::default() },
        PruneFlags { criterion_one: true, ..Default::default() },
        PruneFlags { cone_triangles: true, ..Default::default() },
        PruneFlags { low_degree: true, criterion_one: true, cone_triangles: true },
    ] {
        let some: BTreeSet<Signature> = enumerate_one_vertex(3, &EnumerateOptions { flags, workers: 1 })
            .unwrap()
            .into_iter()
            .map(|e| e.signature)
            .collect();
        assert!(some.is_subset(&all));
    }
}

#[test]
fn output_does_not_depend_on_workers() {
    let one = enumerate_one_vertex(3, &EnumerateOptions { workers: 1, ..Default::default() }).unwrap();
    let four = enumerate_one_vertex(3, &EnumerateOptions { workers: 4, ..Default::default() }).unwrap();
    assert_eq!(one, four);
}

#[test]
fn duality_and_surface_invariants_through_three_tetrahedra() {
    for n in 1..=3 {
        for e in enumerate_one_vertex(n, &EnumerateOptions::default()).unwrap() {
            assert_eq!(vertex_count(&e.table).unwrap(), 1);
            let s = dual_spine(&e.table).unwrap();
            assert_eq!((s.vertex_count(), s.edges().len(), s.faces().len()), (n, 2 * n, n + 1));
            assert_eq!(s.euler_characteristic(), 1);
            assert!(is_standard(&s));

            let orientable = w1_cocycle(&e.table).unwrap().orientable();
            let sigma = stiefel_whitney_surface(&s).unwrap();
            assert_eq!(sigma.is_empty(), orientable);
            assert!(sigma.incidence().iter().all(|&k| k % 2 == 0));
            let topology = surface_topology(&s, &sigma).unwrap();
            assert!(topology.components.iter().all(|c| c.orientable));
            if !sigma.is_empty() {
                let stats = sigma_stats(&s, &sigma).unwrap();
                assert!(2 * stats.v3() + stats.v4() <= n);
            }

            // Over GF(2): b1 = b2, and b1 counts the free rank plus the even torsion.
            let [b0, b1, b2] = z2_homology_ranks(&s);
            let h = first_homology(&s);
            assert_eq!((b0, b1), (1, b2));
            assert_eq!(b1, h.rank + h.torsion.iter().filter(|&&t| t % 2 == 0).count());
        }
    }
}

#[test]
fn signatures_survive_random_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut tables: Vec<GluingTable> =
        enumerate_one_vertex(3, &EnumerateOptions::default()).unwrap().into_iter().map(|e| e.table).collect();
    tables.push(include_str!("../../../fixtures/sol_bundle_6.tri").parse().unwrap());
    for t in tables.iter().step_by(5) {
        let sig = canonical_signature(t).unwrap();
        for _ in 0..100 {
            let mut tm: Vec<usize> = (0..t.size()).collect();
            tm.shuffle(&mut rng);
            let vm: Vec<Perm4> = (0..t.size()).map(|_| ALL_PERMS[rng.gen_range(0..24)]).collect();
            assert_eq!(canonical_signature(&t.relabel(&tm, &vm)).unwrap(), sig);
        }
        let canonical = table_from_signature(sig.as_str()).unwrap();
        assert_eq!(canonical_signature(&canonical).unwrap(), sig);
        assert_eq!(canonical_form(&canonical).unwrap(), canonical);
    }
}

#[test]
fn homologically_distinct_tables_get_distinct_signatures() {
    let all = enumerate_one_vertex(3, &EnumerateOptions::default()).unwrap();
    for a in &all {
        for b in &all {
            let (sa, sb) = (dual_spine(&a.table).unwrap(), dual_spine(&b.table).unwrap());
            if z2_homology_ranks(&sa) != z2_homology_ranks(&sb) {
                assert_ne!(a.signature, b.signature);
            }
        }
    }
}

#[test]
fn sol_bundle_fixture() {
    let t: GluingTable = include_str!("../../../fixtures/sol_bundle_6.tri").parse().unwrap();
    assert_eq!(t.size(), 6);
    assert_eq!(vertex_count(&t).unwrap(), 1);
    assert!(!w1_cocycle(&t).unwrap().orientable());
    let s = dual_spine(&t).unwrap();
    assert!(is_standard(&s));
    assert_eq!(first_homology(&s).to_string(), "Z");
    let sigma = stiefel_whitney_surface(&s).unwrap();
    let topology = surface_topology(&s, &sigma).unwrap();
    assert_eq!(topology.components.len(), 1);
    assert_eq!(topology.components[0].genus(), 1);
    assert!(topology.components[0].orientable);
}

#[test]
fn criterion_one_prunes_embedded_small_faces() {
    // The one-tetrahedron three-sphere has a face of length one.
    let s3 = enumerate_one_vertex(1, &EnumerateOptions::default())
        .unwrap()
        .into_iter()
        .map(|e| dual_spine(&e.table).unwrap())
        .find(|s| first_homology(s).to_string() == "0")
        .unwrap();
    assert!(matches!(prune_nonminimal(&s3), Verdict::Pruned(PruneReason::SmallEmbeddedFace { .. })));
    let sol = dual_spine(&include_str!("../../../fixtures/sol_bundle_6.tri").parse().unwrap()).unwrap();
    assert_eq!(prune_nonminimal(&sol), Verdict::MinimalCandidate);
}

#[test]
fn rejects_invalid_inputs() {
    assert_eq!(enumerate_one_vertex(0, &EnumerateOptions::default()).unwrap_err(), SpineError::Empty);
    let open: GluingTable = "0 0 : 0 1 : 023".parse().unwrap();
    assert!(matches!(dual_spine(&open), Err(SpineError::Unglued { .. })));
    assert!(table_from_signature("nope").is_err());
    assert!(table_from_signature("sig:").is_err());
}
