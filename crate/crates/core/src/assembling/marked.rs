//! Manifolds with marked boundary and the two gluing operations on them.
//!
//! Each boundary torus carries slope coordinates `(a, b)` and a θ-graph in those coordinates.
//! Alongside the marking the model keeps what the gluings need to compute: a presentation of
//! `H₁` with the images of `a` and `b` for every boundary torus, orientability, and the known
//! Seifert fibrations with their fiber slope on each boundary torus.

use std::fmt;

use crate::assembling::{AssemblyError, SeifertData};
use crate::linalg::{invariant_factors, AbelianGroup};
use crate::theta::{flip_distance, Gl2, Slope, ThetaGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Brick {
    /// `T × I` with the same marking on both ends.
    B0,
    /// Solid torus whose meridian is a slope of the marking.
    B1,
    /// Solid torus whose meridian is one flip away from the marking.
    B2,
    /// `T × I` with markings related by a flip.
    B3,
    /// Pair of pants times a circle, marked `θ₀, θ₀, θ₋₁`.
    B4,
}

impl Brick {
    pub fn complexity(self) -> u32 {
        match self {
            Brick::B0 | Brick::B1 | Brick::B2 => 0,
            Brick::B3 => 1,
            Brick::B4 => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Kind {
    Block(Brick),
    /// The twisted I-bundle over the torus, Möbius strip times a circle, marked `{0, 1, ∞}`.
    TwistedIBundle,
    SeifertPiece(SeifertData),
    TorusBundle(Gl2),
    Composite,
}

/// How a manifold was built.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Trace {
    Leaf(String),
    Assemble { left: Box<Trace>, right: Box<Trace>, psi: Gl2 },
    SelfAssemble { inner: Box<Trace>, psi: Gl2 },
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trace::Leaf(name) => write!(f, "{name}"),
            Trace::Assemble { left, right, psi } => write!(f, "assemble({left}, {right}, ψ={psi})"),
            Trace::SelfAssemble { inner, psi } => write!(f, "self-assemble({inner}, ψ={psi})"),
        }
    }
}

/// An upper bound on complexity. Equality is never inferred; `sharp` records an outside claim.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Ledger {
    pub bound: u32,
    pub sharp: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Fibration {
    pub base: SeifertData,
    /// Fiber slope on each boundary torus.
    pub fibers: Vec<Slope>,
    /// A slope meeting the fiber once that bounds a section, where known.
    sections: Vec<Option<Slope>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryTorus {
    pub marking: ThetaGraph,
    /// Images of `a` and `b` in the generators of `H₁`.
    images: [Vec<i64>; 2],
    /// Whether `(a, b)` is positive for the induced boundary orientation; meaningful only on
    /// orientable manifolds.
    positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedManifold {
    pub kind: Kind,
    pub boundary: Vec<BoundaryTorus>,
    pub ledger: Ledger,
    pub trace: Trace,
    orientable: bool,
    generators: usize,
    relations: Vec<Vec<i64>>,
    fibrations: Vec<Fibration>,
    /// Set on solid tori.
    meridian: Option<Slope>,
}

fn pad(v: &[i64], before: usize, after: usize) -> Vec<i64> {
    let mut out = vec![0; before];
    out.extend_from_slice(v);
    out.extend(std::iter::repeat_n(0, after));
    out
}

fn det(u: Slope, v: Slope) -> i64 {
    u.p() * v.q() - u.q() * v.p()
}

impl MarkedManifold {
    fn leaf(kind: Kind, name: &str, boundary: Vec<BoundaryTorus>, generators: usize, relations: Vec<Vec<i64>>, bound: u32) -> Self {
        MarkedManifold {
            kind,
            boundary,
            ledger: Ledger { bound, sharp: None },
            trace: Trace::Leaf(name.to_string()),
            orientable: true,
            generators,
            relations,
            fibrations: Vec::new(),
            meridian: None,
        }
    }

    /// A brick in its standard coordinates: markings `{0, 1, ∞}`, with `{1, 2, ∞}` on the far
    /// end of `B₃`, meridian `0` for `B₁` and `2` for `B₂`.
    pub fn brick(b: Brick) -> MarkedManifold {
        let theta0 = ThetaGraph::standard();
        match b {
            Brick::B0 => MarkedManifold::product(theta0, theta0).expect("equal markings"),
            Brick::B1 => MarkedManifold::solid_torus(theta0, Slope::ZERO).expect("meridian in the marking"),
            Brick::B2 => MarkedManifold::solid_torus(theta0, Slope::integer(2)).expect("meridian one flip away"),
            Brick::B3 => MarkedManifold::product(theta0, ThetaGraph::integral(1)).expect("one flip"),
            Brick::B4 => {
                // H₁ = ⟨x₁, x₂, x₃, f | x₁ + x₂ + x₃⟩; torus i has a ↦ xᵢ, b ↦ f.
                let boundary = [ThetaGraph::integral(0), ThetaGraph::integral(0), ThetaGraph::integral(-1)]
                    .into_iter()
                    .enumerate()
                    .map(|(i, marking)| {
                        let mut a = vec![0; 4];
                        a[i] = 1;
                        BoundaryTorus { marking, images: [a, vec![0, 0, 0, 1]], positive: true }
                    })
                    .collect();
                let mut m = MarkedManifold::leaf(Kind::Block(Brick::B4), "B4", boundary, 4, vec![vec![1, 1, 1, 0]], 3);
                m.fibrations.push(Fibration {
                    base: SeifertData::pair_of_pants(),
                    fibers: vec![Slope::ZERO; 3],
                    sections: vec![Some(Slope::INFINITY); 3],
                });
                m
            }
        }
    }

    /// `T × I` marked `end0` and `end1` in one common coordinate system; `B₀` or `B₃`.
    pub fn product(end0: ThetaGraph, end1: ThetaGraph) -> Result<MarkedManifold, AssemblyError> {
        let (brick, name) = match flip_distance(end0, end1) {
            0 => (Brick::B0, "B0"),
            1 => (Brick::B3, "B3"),
            d => return Err(AssemblyError::TooFar(d)),
        };
        let images = [vec![1, 0], vec![0, 1]];
        let boundary = vec![
            BoundaryTorus { marking: end0, images: images.clone(), positive: true },
            BoundaryTorus { marking: end1, images, positive: false },
        ];
        Ok(MarkedManifold::leaf(Kind::Block(brick), name, boundary, 2, Vec::new(), brick.complexity()))
    }

    /// A solid torus marked `marking` whose meridian is `meridian`; `B₁` or `B₂`.
    pub fn solid_torus(marking: ThetaGraph, meridian: Slope) -> Result<MarkedManifold, AssemblyError> {
        let (brick, name) = if marking.contains(meridian) {
            (Brick::B1, "B1")
        } else if marking.opposite_slopes().contains(&meridian) {
            (Brick::B2, "B2")
        } else {
            return Err(AssemblyError::NotABrickFilling(meridian, marking));
        };
        // The functional (x, y) ↦ q·x − p·y kills the meridian and is onto.
        let images = [vec![meridian.q()], vec![-meridian.p()]];
        let boundary = vec![BoundaryTorus { marking, images, positive: true }];
        let mut m = MarkedManifold::leaf(Kind::Block(brick), name, boundary, 1, Vec::new(), 0);
        m.meridian = Some(meridian);
        Ok(m)
    }

    /// `S × S¹` for the Möbius strip `S`, with `a = ∂S` and `b` the circle factor, marked
    /// `{0, 1, ∞}`. It fibers with fiber `0` over `S` and with fiber `∞` over an annulus with
    /// one mirror circle.
    pub fn twisted_i_bundle() -> MarkedManifold {
        // H₁ = ⟨c, f⟩ with c the core of S: a ↦ 2c, b ↦ f.
        let boundary = vec![BoundaryTorus { marking: ThetaGraph::standard(), images: [vec![2, 0], vec![0, 1]], positive: true }];
        let mut m = MarkedManifold::leaf(Kind::TwistedIBundle, "TxI~", boundary, 2, Vec::new(), 3);
        m.orientable = false;
        m.fibrations = vec![
            Fibration { base: SeifertData::mobius(), fibers: vec![Slope::ZERO], sections: vec![Some(Slope::INFINITY)] },
            Fibration { base: SeifertData::annulus_with_mirror(), fibers: vec![Slope::INFINITY], sections: vec![None] },
        ];
        m
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn is_closed(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn markings(&self) -> Vec<ThetaGraph> {
        self.boundary.iter().map(|t| t.marking).collect()
    }

    pub fn fibrations(&self) -> &[Fibration] {
        &self.fibrations
    }

    pub fn homology(&self) -> AbelianGroup {
        AbelianGroup::from_presentation(self.generators, &self.relations)
    }

    /// Records a Seifert fibration known from outside the model.
    pub fn with_fibration(mut self, base: SeifertData, fibers: Vec<Slope>) -> Result<MarkedManifold, AssemblyError> {
        if fibers.len() != self.boundary.len() || base.boundary as usize != fibers.len() {
            return Err(AssemblyError::BadOrbifold(format!("{base} does not match {} boundary tori", self.boundary.len())));
        }
        let sections = vec![None; fibers.len()];
        self.fibrations.push(Fibration { base, fibers, sections });
        Ok(self)
    }

    pub fn with_kind(mut self, kind: Kind, name: &str) -> MarkedManifold {
        self.kind = kind;
        self.trace = Trace::Leaf(format!("{name} = {}", self.trace));
        self
    }

    pub fn with_sharpness(mut self, claim: &str) -> MarkedManifold {
        self.ledger.sharp = Some(claim.to_string());
        self
    }

    fn image(&self, torus: usize, v: (i64, i64)) -> Vec<i64> {
        let [a, b] = &self.boundary[torus].images;
        a.iter().zip(b).map(|(x, y)| v.0 * x + v.1 * y).collect()
    }

    /// Whether the class of slope `s` on torus `t` has finite order in `H₁`.
    pub fn slope_is_torsion(&self, torus: usize, s: Slope) -> bool {
        let v = self.image(torus, (s.p(), s.q()));
        let mut rows = self.relations.clone();
        let before = invariant_factors(&rows, self.generators).len();
        rows.push(v);
        invariant_factors(&rows, self.generators).len() == before
    }

    fn check_torus(&self, t: usize) -> Result<(), AssemblyError> {
        if t < self.boundary.len() {
            Ok(())
        } else {
            Err(AssemblyError::NoSuchTorus(t, self.boundary.len()))
        }
    }

    fn product_ends(&self) -> bool {
        matches!(self.kind, Kind::Block(Brick::B0 | Brick::B3))
    }
}

fn psi_column(psi: Gl2, j: usize) -> (i64, i64) {
    let m = psi.entries();
    (m[0][j], m[1][j])
}

/// Fills torus `t` of a fibration along `meridian`; `None` if the meridian is the fiber.
fn fill_fibration(f: &Fibration, t: usize, meridian: Slope) -> Result<Option<Fibration>, AssemblyError> {
    let fiber = f.fibers[t];
    let p = meridian.intersection(fiber);
    let cone = match p {
        0 => return Ok(None),
        1 => None,
        _ => {
            let section = f.sections[t].ok_or_else(|| AssemblyError::BadOrbifold("filling without a known section".into()))?;
            // meridian = x·section + y·fiber
            let d = det(section, fiber);
            let (mut x, mut y) = (det(meridian, fiber) / d, det(section, meridian) / d);
            if x < 0 {
                (x, y) = (-x, -y);
            }
            debug_assert_eq!(x as u64, p);
            Some((p, y.rem_euclid(p as i64) as u64))
        }
    };
    let mut fibers = f.fibers.clone();
    let mut sections = f.sections.clone();
    fibers.remove(t);
    sections.remove(t);
    Ok(Some(Fibration { base: f.base.cap(cone)?, fibers, sections }))
}

/// Glues torus `t1` of `m1` to torus `t2` of `m2` by `ψ`, which must carry the first marking
/// onto the second. The ledger adds; the result is never marked sharp.
pub fn assemble(m1: &MarkedManifold, t1: usize, m2: &MarkedManifold, t2: usize, psi: Gl2) -> Result<MarkedManifold, AssemblyError> {
    m1.check_torus(t1)?;
    m2.check_torus(t2)?;
    let (theta1, theta2) = (m1.boundary[t1].marking, m2.boundary[t2].marking);
    if psi.apply_theta(theta1) != theta2 {
        return Err(AssemblyError::MarkingMismatch(psi.apply_theta(theta1), theta2));
    }
    let (g1, g2) = (m1.generators, m2.generators);
    let mut relations: Vec<Vec<i64>> = m1.relations.iter().map(|r| pad(r, 0, g2)).collect();
    relations.extend(m2.relations.iter().map(|r| pad(r, g1, 0)));
    for (j, e) in [(1, 0), (0, 1)].into_iter().enumerate() {
        let left = pad(&m1.image(t1, e), 0, g2);
        let right = pad(&m2.image(t2, psi_column(psi, j)), g1, 0);
        relations.push(left.iter().zip(&right).map(|(x, y)| x - y).collect());
    }
    let mut boundary: Vec<BoundaryTorus> = Vec::new();
    for t in m1.boundary.iter().enumerate().filter(|&(i, _)| i != t1).map(|(_, t)| t) {
        boundary.push(BoundaryTorus { images: t.images.clone().map(|v| pad(&v, 0, g2)), ..t.clone() });
    }
    // The gluing must reverse the induced orientations; otherwise m2 is reoriented.
    let sign = |t: &BoundaryTorus| if t.positive { 1 } else { -1 };
    let reorient = psi.det() * sign(&m1.boundary[t1]) * sign(&m2.boundary[t2]) == 1;
    for t in m2.boundary.iter().enumerate().filter(|&(i, _)| i != t2).map(|(_, t)| t) {
        let images = t.images.clone().map(|v| pad(&v, g1, 0));
        boundary.push(BoundaryTorus { images, positive: t.positive != reorient, ..t.clone() });
    }
    let fibrations = glue_fibrations(m1, t1, m2, t2, psi)?;
    Ok(MarkedManifold {
        kind: Kind::Composite,
        boundary,
        ledger: Ledger { bound: m1.ledger.bound + m2.ledger.bound, sharp: None },
        trace: Trace::Assemble { left: Box::new(m1.trace.clone()), right: Box::new(m2.trace.clone()), psi },
        orientable: m1.orientable && m2.orientable,
        generators: g1 + g2,
        relations,
        fibrations,
        meridian: None,
    })
}

fn glue_fibrations(m1: &MarkedManifold, t1: usize, m2: &MarkedManifold, t2: usize, psi: Gl2) -> Result<Vec<Fibration>, AssemblyError> {
    let inv = psi.inverse();
    let mut out = Vec::new();
    if let Some(mu) = m2.meridian {
        for f in &m1.fibrations {
            out.extend(fill_fibration(f, t1, inv.apply(mu))?);
        }
    } else if let Some(mu) = m1.meridian {
        for f in &m2.fibrations {
            out.extend(fill_fibration(f, t2, psi.apply(mu))?);
        }
    } else if m2.product_ends() {
        // The far end of the product has the coordinates of the near one.
        for f in &m1.fibrations {
            let mut g = f.clone();
            let (fiber, section) = (g.fibers.remove(t1), g.sections.remove(t1));
            g.fibers.push(psi.apply(fiber));
            g.sections.push(section.map(|s| psi.apply(s)));
            out.push(g);
        }
    } else if m1.product_ends() {
        for f in &m2.fibrations {
            let mut g = f.clone();
            let (fiber, section) = (g.fibers.remove(t2), g.sections.remove(t2));
            g.fibers.insert(0, inv.apply(fiber));
            g.sections.insert(0, section.map(|s| inv.apply(s)));
            out.push(g);
        }
    } else {
        for f1 in &m1.fibrations {
            for f2 in &m2.fibrations {
                if psi.apply(f1.fibers[t1]) != f2.fibers[t2] {
                    continue;
                }
                let mut fibers = f1.fibers.clone();
                let mut sections = f1.sections.clone();
                fibers.remove(t1);
                sections.remove(t1);
                let (mut fb, mut sc) = (f2.fibers.clone(), f2.sections.clone());
                fb.remove(t2);
                sc.remove(t2);
                fibers.extend(fb);
                sections.extend(sc);
                out.push(Fibration { base: f1.base.glue(&f2.base)?, fibers, sections });
            }
        }
    }
    Ok(out)
}

/// Glues torus `t1` of `m` to torus `t2` by `ψ`, where `ψ` carries the first marking onto
/// the second or onto one flip of it. Adds six to the ledger.
pub fn self_assemble(m: &MarkedManifold, t1: usize, t2: usize, psi: Gl2) -> Result<MarkedManifold, AssemblyError> {
    m.check_torus(t1)?;
    m.check_torus(t2)?;
    if t1 == t2 {
        return Err(AssemblyError::SameTorus(t1));
    }
    let image = psi.apply_theta(m.boundary[t1].marking);
    let d = flip_distance(image, m.boundary[t2].marking);
    if d > 1 {
        return Err(AssemblyError::TooFar(d));
    }
    let g = m.generators;
    // H₁ gains a free generator for the new loop.
    let mut relations: Vec<Vec<i64>> = m.relations.iter().map(|r| pad(r, 0, 1)).collect();
    for (j, e) in [(1, 0), (0, 1)].into_iter().enumerate() {
        let row: Vec<i64> = m.image(t1, e).iter().zip(m.image(t2, psi_column(psi, j))).map(|(x, y)| x - y).collect();
        relations.push(pad(&row, 0, 1));
    }
    let boundary = m
        .boundary
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != t1 && i != t2)
        .map(|(_, t)| BoundaryTorus { images: t.images.clone().map(|v| pad(&v, 0, 1)), ..t.clone() })
        .collect();
    let sign = |t: usize| if m.boundary[t].positive { 1 } else { -1 };
    let orientable = m.orientable && psi.det() * sign(t1) * sign(t2) == -1;
    let kind = if m.product_ends() { Kind::TorusBundle(psi) } else { Kind::Composite };
    Ok(MarkedManifold {
        kind,
        boundary,
        ledger: Ledger { bound: m.ledger.bound + 6, sharp: None },
        trace: Trace::SelfAssemble { inner: Box::new(m.trace.clone()), psi },
        orientable,
        generators: g + 1,
        relations,
        fibrations: Vec::new(),
        meridian: None,
    })
}

/// Assembles a brick onto torus `t` of `m`, in the coordinates of that torus: `B₁` fills
/// `slope ∈ θ`, `B₂` fills a `slope` one flip away from `θ`, `B₃` flips `θ` at `slope`.
/// Torus positions are preserved.
pub fn attach_brick(m: &MarkedManifold, t: usize, brick: Brick, slope: Slope) -> Result<MarkedManifold, AssemblyError> {
    m.check_torus(t)?;
    let theta = m.boundary[t].marking;
    let piece = match brick {
        Brick::B1 | Brick::B2 => {
            let piece = MarkedManifold::solid_torus(theta, slope)?;
            if piece.kind != Kind::Block(brick) {
                return Err(AssemblyError::NotABrickFilling(slope, theta));
            }
            piece
        }
        Brick::B3 => MarkedManifold::product(theta, theta.flip(slope).map_err(|_| AssemblyError::NotABrickFilling(slope, theta))?)?,
        Brick::B0 | Brick::B4 => return Err(AssemblyError::NotABrickFilling(slope, theta)),
    };
    let mut out = assemble(m, t, &piece, 0, Gl2::IDENTITY)?;
    if brick == Brick::B3 {
        let moved = out.boundary.pop().expect("far end of the product");
        out.boundary.insert(t, moved);
        for f in &mut out.fibrations {
            let fiber = f.fibers.pop().expect("far end");
            let section = f.sections.pop().expect("far end");
            f.fibers.insert(t, fiber);
            f.sections.insert(t, section);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(rank: usize, torsion: &[u64]) -> AbelianGroup {
        AbelianGroup { rank, torsion: torsion.to_vec() }
    }

    fn gl2(m: [[i64; 2]; 2]) -> Gl2 {
        Gl2::new(m).unwrap()
    }

    #[test]
    fn bricks() {
        let expected = [(Brick::B0, 0, 2, 2), (Brick::B1, 0, 1, 1), (Brick::B2, 0, 1, 1), (Brick::B3, 1, 2, 2), (Brick::B4, 3, 3, 3)];
        for (b, c, tori, rank) in expected {
            let m = MarkedManifold::brick(b);
            assert_eq!((m.ledger.bound, m.boundary.len()), (c, tori), "{b:?}");
            assert_eq!(m.homology(), group(rank, &[]), "{b:?}");
            assert!(m.orientable());
        }
        let t = MarkedManifold::twisted_i_bundle();
        assert!(!t.orientable());
        assert_eq!((t.ledger.bound, t.homology()), (3, group(2, &[])));
        assert_eq!(t.fibrations().len(), 2);
    }

    #[test]
    fn brick_conditions() {
        let theta0 = ThetaGraph::standard();
        assert_eq!(MarkedManifold::product(theta0, "{2,3,inf}".parse().unwrap()), Err(AssemblyError::TooFar(2)));
        assert!(matches!(MarkedManifold::solid_torus(theta0, Slope::integer(3)), Err(AssemblyError::NotABrickFilling(..))));
        let b4 = MarkedManifold::brick(Brick::B4);
        assert!(attach_brick(&b4, 0, Brick::B1, Slope::integer(2)).is_err());
        assert!(attach_brick(&b4, 0, Brick::B2, Slope::ZERO).is_err());
        assert!(attach_brick(&b4, 3, Brick::B1, Slope::ZERO).is_err());
        let wrong = assemble(&b4, 2, &MarkedManifold::brick(Brick::B1), 0, Gl2::IDENTITY);
        assert!(matches!(wrong, Err(AssemblyError::MarkingMismatch(..))));
    }

    #[test]
    fn fillings_of_the_pair_of_pants() {
        let b4 = MarkedManifold::brick(Brick::B4);
        let section = attach_brick(&b4, 0, Brick::B1, Slope::INFINITY).unwrap();
        assert_eq!(section.homology(), group(2, &[]));
        assert_eq!(section.fibrations()[0].base.cones, vec![]);
        assert_eq!(section.fibrations()[0].base.boundary, 2);
        let fiber = attach_brick(&b4, 0, Brick::B1, Slope::ZERO).unwrap();
        assert!(fiber.fibrations().is_empty());
        let cone = attach_brick(&b4, 1, Brick::B2, Slope::integer(2)).unwrap();
        assert_eq!(cone.fibrations()[0].base.cones, vec![(2, 1)]);
        assert_eq!(cone.markings(), vec![ThetaGraph::standard(), ThetaGraph::integral(-1)]);
        let flipped = attach_brick(&b4, 0, Brick::B3, Slope::ZERO).unwrap();
        assert_eq!(flipped.markings()[0], ThetaGraph::integral(1));
        assert_eq!(flipped.ledger.bound, 4);
    }

    #[test]
    fn self_assembling_products() {
        let b0 = MarkedManifold::brick(Brick::B0);
        let torus3 = self_assemble(&b0, 0, 1, Gl2::IDENTITY).unwrap();
        assert!(torus3.orientable() && torus3.is_closed());
        assert_eq!((torus3.homology(), torus3.ledger.bound), (group(3, &[]), 6));
        let reflect = self_assemble(&b0, 0, 1, gl2([[1, 0], [0, -1]])).unwrap();
        assert!(!reflect.orientable());
        assert_eq!(reflect.homology(), group(2, &[2]));
        assert_eq!(self_assemble(&b0, 0, 0, Gl2::IDENTITY), Err(AssemblyError::SameTorus(0)));
        assert_eq!(self_assemble(&b0, 0, 1, gl2([[2, 1], [1, 1]])), Err(AssemblyError::TooFar(2)));
    }

    #[test]
    fn gluing_reorients_the_second_piece() {
        let b0 = MarkedManifold::brick(Brick::B0);
        let swap = gl2([[0, 1], [1, 0]]);
        let long = assemble(&b0, 1, &b0, 0, swap).unwrap();
        assert!(long.orientable());
        // The far end now differs from the near one by the swap, a reflection.
        assert!(!self_assemble(&long, 0, 1, Gl2::IDENTITY).unwrap().orientable());
        let straight = assemble(&b0, 1, &b0, 0, Gl2::IDENTITY).unwrap();
        assert!(self_assemble(&straight, 0, 1, Gl2::IDENTITY).unwrap().orientable());
    }
}
