//! Closed non-orientable manifolds built from the twisted I-bundle, small Seifert pieces and
//! self-assembled products.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::assembling::{
    assemble, attach_brick, classify_geometry, classify_torus_bundle, self_assemble, AssemblyError, Brick, Geometry, Kind,
    MarkedManifold, SeifertData,
};
use crate::linalg::AbelianGroup;
use crate::theta::{Gl2, Slope, ThetaGraph};

/// `(D₂ × S¹)` with singular fibers of types `(2,1), (2,1)`, marked `θ₋₁`: `B₄` with its first
/// two tori filled along `2` by `B₂`'s. Besides the fibration over the disc (fiber `0`) it is
/// the twisted circle bundle over the Möbius strip, with fiber `−1`.
pub fn seifert_piece_22() -> MarkedManifold {
    let b4 = MarkedManifold::brick(Brick::B4);
    let m = attach_brick(&b4, 0, Brick::B2, Slope::integer(2)).expect("2 is one flip from θ₀");
    let m = attach_brick(&m, 0, Brick::B2, Slope::integer(2)).expect("2 is one flip from θ₀");
    let base = SeifertData::disc(vec![(2, 1), (2, 1)]);
    m.with_fibration(SeifertData::mobius(), vec![Slope::integer(-1)])
        .expect("one boundary torus")
        .with_kind(Kind::SeifertPiece(base), "(D2xS1)_{2,2}")
        .with_sharpness("complexity 3 for the only non-solid-torus piece with one marked torus and c ≤ 3")
}

/// `(D₂ × S¹)` with singular fibers `(3,1), (2,1)`, marked `θ₋₁`: on `B₄`, a `B₃` turns the
/// first marking into `{1, 2, ∞}` so that a `B₂` can fill slope `3`, and a second `B₂` fills
/// slope `2` on the second torus.
pub fn seifert_piece_32() -> MarkedManifold {
    let b4 = MarkedManifold::brick(Brick::B4);
    let m = attach_brick(&b4, 0, Brick::B3, Slope::ZERO).expect("0 is in θ₀");
    let m = attach_brick(&m, 0, Brick::B2, Slope::integer(3)).expect("3 is one flip from {1, 2, ∞}");
    let m = attach_brick(&m, 0, Brick::B2, Slope::integer(2)).expect("2 is one flip from θ₀");
    m.with_kind(Kind::SeifertPiece(SeifertData::disc(vec![(3, 1), (2, 1)])), "(D2xS1)_{3,2}")
}

fn fibration_bases(m: &MarkedManifold) -> Result<Vec<SeifertData>, AssemblyError> {
    let mut bases: Vec<SeifertData> = m.fibrations().iter().map(|f| f.base.clone()).collect();
    bases.sort();
    bases.dedup();
    if bases.is_empty() {
        return Err(AssemblyError::NoFibration);
    }
    Ok(bases)
}

/// Base orbifolds of the fibrations of two twisted I-bundles glued by `ψ`. Several when
/// `ψ` matches both fibers.
pub fn classify_two_twisted(psi: Gl2) -> Result<Vec<SeifertData>, AssemblyError> {
    let t = MarkedManifold::twisted_i_bundle();
    fibration_bases(&assemble(&t, 0, &t, 0, psi)?)
}

/// Base orbifolds of a one-torus Seifert piece marked `θ₋₁` glued to the twisted I-bundle by
/// `ψ`. Fails when no fiber of the piece goes to a fiber of the bundle.
pub fn classify_seifert_twisted(piece: &MarkedManifold, psi: Gl2) -> Result<Vec<SeifertData>, AssemblyError> {
    fibration_bases(&assemble(piece, 0, &MarkedManifold::twisted_i_bundle(), 0, psi)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatManifold {
    pub name: &'static str,
    pub homology: AbelianGroup,
}

/// The four closed non-orientable flat 3-manifolds, told apart by first homology.
pub fn nonorientable_flat_manifolds() -> Vec<FlatManifold> {
    let group = |rank, torsion: &[u64]| AbelianGroup { rank, torsion: torsion.to_vec() };
    vec![
        FlatManifold { name: "first amphicosm", homology: group(2, &[2]) },
        FlatManifold { name: "second amphicosm", homology: group(2, &[]) },
        FlatManifold { name: "first amphidicosm", homology: group(1, &[2, 2]) },
        FlatManifold { name: "second amphidicosm", homology: group(1, &[4]) },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusClass {
    pub name: String,
    pub geometry: Geometry,
    pub homology: AbelianGroup,
    /// Orbifold Euler characteristic of the produced fibrations, when there are any.
    pub chi_orb: Option<Ratio<i64>>,
    /// Bundle normal form, for torus bundles.
    pub monodromy: Option<Gl2>,
    pub ledger: u32,
    /// Distinct base orbifolds produced.
    pub fibrations: Vec<SeifertData>,
    pub constructions: Vec<String>,
}

/// One closed manifold produced by a construction, classified.
#[derive(Clone, Debug)]
struct Candidate {
    manifold: MarkedManifold,
    geometry: Geometry,
    bases: Vec<SeifertData>,
    monodromy: Option<Gl2>,
}

fn classify(m: MarkedManifold) -> Result<Candidate, AssemblyError> {
    if !m.is_closed() {
        return Err(AssemblyError::NotClosed);
    }
    if let Kind::TorusBundle(a) = m.kind {
        let class = classify_torus_bundle(a.entries())?;
        return Ok(Candidate { manifold: m, geometry: class.geometry, bases: Vec::new(), monodromy: Some(class.monodromy) });
    }
    let bases = fibration_bases(&m)?;
    let e = Ratio::from_integer(0);
    let geometries: Vec<Geometry> = bases.iter().map(|b| classify_geometry(b, e, m.orientable())).collect::<Result<_, _>>()?;
    if geometries.iter().any(|g| *g != geometries[0]) {
        return Err(AssemblyError::BadOrbifold(format!("fibrations disagree on geometry: {geometries:?}")));
    }
    Ok(Candidate { manifold: m, geometry: geometries[0], bases, monodromy: None })
}

fn into_class(name: String, members: Vec<Candidate>) -> CensusClass {
    let first = &members[0];
    let mut fibrations: Vec<SeifertData> = members.iter().flat_map(|c| c.bases.iter().cloned()).collect();
    fibrations.sort();
    fibrations.dedup();
    let mut constructions: Vec<String> = members.iter().map(|c| c.manifold.trace.to_string()).collect();
    constructions.sort();
    constructions.dedup();
    CensusClass {
        name,
        geometry: first.geometry,
        homology: first.manifold.homology(),
        chi_orb: fibrations.first().map(SeifertData::chi_orb),
        monodromy: first.monodromy,
        ledger: members.iter().map(|c| c.manifold.ledger.bound).min().expect("nonempty"),
        fibrations,
        constructions,
    }
}

/// Every closed manifold obtained from two twisted I-bundles, from `(D₂×S¹)_{2,2}` and a
/// twisted I-bundle, or by self-assembling `B₀` into a non-orientable bundle, grouped into
/// classes: flat manifolds by first homology, torus bundles by monodromy normal form.
pub fn nonorientable_c6_census() -> Result<Vec<CensusClass>, AssemblyError> {
    let twisted = MarkedManifold::twisted_i_bundle();
    let piece = seifert_piece_22();
    let theta0 = ThetaGraph::standard();
    let mut produced = Vec::new();
    for psi in Gl2::theta_maps(theta0, theta0) {
        produced.push(assemble(&twisted, 0, &twisted, 0, psi)?);
    }
    for psi in Gl2::theta_maps(ThetaGraph::integral(-1), theta0) {
        produced.push(assemble(&piece, 0, &twisted, 0, psi)?);
    }
    let b0 = MarkedManifold::brick(Brick::B0);
    let targets = std::iter::once(theta0).chain(theta0.slopes().map(|s| theta0.flip(s).expect("own slope")));
    for target in targets {
        for psi in Gl2::theta_maps(theta0, target) {
            let m = self_assemble(&b0, 0, 1, psi)?;
            if !m.orientable() {
                produced.push(m);
            }
        }
    }

    let flats = nonorientable_flat_manifolds();
    let mut groups: BTreeMap<(usize, String), Vec<Candidate>> = BTreeMap::new();
    for m in produced {
        if m.orientable() {
            return Err(AssemblyError::BadOrbifold(format!("{} is orientable", m.trace)));
        }
        let c = classify(m)?;
        let key = match (c.geometry, c.monodromy) {
            (Geometry::Flat, _) => {
                let h = c.manifold.homology();
                match flats.iter().position(|f| f.homology == h) {
                    Some(i) => (i, flats[i].name.to_string()),
                    None => (flats.len(), format!("unlisted flat manifold with H1 = {h}")),
                }
            }
            (g, Some(a)) => (flats.len() + 1, format!("{g} torus bundle with monodromy {a}")),
            (g, None) => (flats.len() + 2, format!("{g} manifold with H1 = {}", c.manifold.homology())),
        };
        groups.entry(key).or_default().push(c);
    }
    Ok(groups.into_iter().map(|((_, name), members)| into_class(name, members)).collect())
}

/// The complexity 7 examples: `(D₂×S¹)_{3,2}` glued to the twisted I-bundle so that its fiber
/// goes to either fiber of the bundle, and `B₃` self-assembled by `[[2,1],[1,0]]`.
pub fn c7_constructions() -> Result<Vec<CensusClass>, AssemblyError> {
    let twisted = MarkedManifold::twisted_i_bundle();
    let piece = seifert_piece_32();
    let mut out = Vec::new();
    for target in [Slope::ZERO, Slope::INFINITY] {
        let psi = Gl2::theta_maps(ThetaGraph::integral(-1), ThetaGraph::standard())
            .into_iter()
            .filter(|psi| psi.apply(Slope::ZERO) == target)
            .min_by_key(|psi| psi.normal_key())
            .expect("a marking map sends 0 anywhere in θ₀");
        let c = classify(assemble(&piece, 0, &twisted, 0, psi)?)?;
        let name = format!("{} fibering over {}", c.geometry, c.bases[0]);
        out.push(into_class(name, vec![c]));
    }
    let psi = Gl2::new([[2, 1], [1, 0]]).map_err(AssemblyError::Theta)?;
    let c = classify(self_assemble(&MarkedManifold::brick(Brick::B3), 0, 1, psi)?)?;
    let name = format!("{} torus bundle with monodromy {psi}", c.geometry);
    out.push(into_class(name, vec![c]));
    Ok(out)
}
