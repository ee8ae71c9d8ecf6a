//! Base orbifolds of Seifert fibrations and the geometry they determine.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::assembling::AssemblyError;

/// A base orbifold: an underlying compact surface whose boundary circles are either true
/// boundary or mirror circles, plus cone points `(p, q)` with `p ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct SeifertData {
    /// Euler characteristic of the underlying surface, mirror circles counted as boundary.
    pub euler: i64,
    pub orientable: bool,
    /// True boundary circles, one per boundary torus of the total space.
    pub boundary: u32,
    pub mirrors: u32,
    pub cones: Vec<(u64, u64)>,
}

impl SeifertData {
    pub fn new(euler: i64, orientable: bool, boundary: u32, mirrors: u32, cones: Vec<(u64, u64)>) -> Result<Self, AssemblyError> {
        let circles = (boundary + mirrors) as i64;
        let closed_euler = euler + circles;
        if closed_euler > 2 || (orientable && closed_euler % 2 != 0) || (!orientable && closed_euler > 1) {
            return Err(AssemblyError::BadOrbifold(format!("no surface with χ={euler} and {circles} circles")));
        }
        for &(p, q) in &cones {
            if p < 2 || p.gcd(&q) != 1 {
                return Err(AssemblyError::BadOrbifold(format!("cone point ({p},{q})")));
            }
        }
        let mut d = SeifertData { euler, orientable, boundary, mirrors, cones };
        d.cones.sort_by(|a, b| b.cmp(a));
        Ok(d)
    }

    pub fn disc(cones: Vec<(u64, u64)>) -> SeifertData {
        SeifertData::new(1, true, 1, 0, cones).expect("disc")
    }

    pub fn pair_of_pants() -> SeifertData {
        SeifertData::new(-1, true, 3, 0, Vec::new()).expect("pair of pants")
    }

    pub fn mobius() -> SeifertData {
        SeifertData::new(0, false, 1, 0, Vec::new()).expect("Möbius strip")
    }

    pub fn annulus_with_mirror() -> SeifertData {
        SeifertData::new(0, true, 1, 1, Vec::new()).expect("annulus")
    }

    pub fn is_closed(&self) -> bool {
        self.boundary == 0
    }

    /// `χ(underlying) − Σ (1 − 1/p)`.
    pub fn chi_orb(&self) -> Ratio<i64> {
        self.cones.iter().fold(Ratio::from_integer(self.euler), |acc, &(p, _)| acc - (Ratio::from_integer(1) - Ratio::new(1, p as i64)))
    }

    pub fn with_cone(&self, cone: (u64, u64)) -> Result<SeifertData, AssemblyError> {
        let mut cones = self.cones.clone();
        cones.push(cone);
        SeifertData::new(self.euler, self.orientable, self.boundary, self.mirrors, cones)
    }

    /// Caps one true boundary circle with a disc, adding a cone point when `p ≥ 2`.
    pub(crate) fn cap(&self, cone: Option<(u64, u64)>) -> Result<SeifertData, AssemblyError> {
        if self.boundary == 0 {
            return Err(AssemblyError::BadOrbifold("no boundary circle to cap".into()));
        }
        let mut cones = self.cones.clone();
        cones.extend(cone);
        SeifertData::new(self.euler + 1, self.orientable, self.boundary - 1, self.mirrors, cones)
    }

    /// Two bases glued along one true boundary circle each.
    pub(crate) fn glue(&self, other: &SeifertData) -> Result<SeifertData, AssemblyError> {
        if self.boundary == 0 || other.boundary == 0 {
            return Err(AssemblyError::BadOrbifold("no boundary circle to glue".into()));
        }
        let cones = self.cones.iter().chain(&other.cones).copied().collect();
        SeifertData::new(
            self.euler + other.euler,
            self.orientable && other.orientable,
            self.boundary + other.boundary - 2,
            self.mirrors + other.mirrors,
            cones,
        )
    }

    fn surface_name(&self) -> String {
        let circles = self.boundary + self.mirrors;
        let closed = self.euler + circles as i64;
        match (self.orientable, closed, circles) {
            (true, 2, 0) => "sphere".to_string(),
            (true, 2, 1) => "disc".to_string(),
            (true, 2, 2) => "annulus".to_string(),
            (true, 2, 3) => "pair of pants".to_string(),
            (true, 0, 0) => "torus".to_string(),
            (false, 1, 0) => "RP²".to_string(),
            (false, 1, 1) => "Möbius strip".to_string(),
            (false, 0, 0) => "Klein bottle".to_string(),
            (true, c, n) => format!("genus {} surface with {n} holes", (2 - c) / 2),
            (false, c, n) => format!("non-orientable genus {} surface with {n} holes", 2 - c),
        }
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.surface_name())?;
        match self.mirrors {
            0 => {}
            1 => write!(f, "+mirror")?,
            m => write!(f, "+{m} mirrors")?,
        }
        for (p, q) in &self.cones {
            write!(f, "({p},{q})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Geometry {
    S3,
    S2xR,
    Flat,
    Nil,
    H2xR,
    SlTilde,
    Sol,
    NotClassifiedHere,
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Geometry::S3 => "S3",
            Geometry::S2xR => "S2xR",
            Geometry::Flat => "E3",
            Geometry::Nil => "Nil",
            Geometry::H2xR => "H2xR",
            Geometry::SlTilde => "SL2~",
            Geometry::Sol => "Sol",
            Geometry::NotClassifiedHere => "unclassified",
        };
        write!(f, "{name}")
    }
}

/// Seifert geometry from the sign of `χ^orb` and whether the Euler number vanishes.
pub fn geometry_from_invariants(chi_orb: Ratio<i64>, euler_number: Ratio<i64>) -> Geometry {
    let zero = Ratio::from_integer(0);
    match (chi_orb.cmp(&zero), euler_number == zero) {
        (std::cmp::Ordering::Greater, true) => Geometry::S2xR,
        (std::cmp::Ordering::Greater, false) => Geometry::S3,
        (std::cmp::Ordering::Equal, true) => Geometry::Flat,
        (std::cmp::Ordering::Equal, false) => Geometry::Nil,
        (std::cmp::Ordering::Less, true) => Geometry::H2xR,
        (std::cmp::Ordering::Less, false) => Geometry::SlTilde,
    }
}

/// Geometry of the closed Seifert manifold fibering over `d` with Euler number `e`. A fibration
/// with non-orientable total space has `e = 0`; `total_orientable = false` with `e ≠ 0` is
/// rejected.
pub fn classify_geometry(d: &SeifertData, e: Ratio<i64>, total_orientable: bool) -> Result<Geometry, AssemblyError> {
    if !d.is_closed() {
        return Err(AssemblyError::BadOrbifold(format!("{d} has boundary")));
    }
    if !total_orientable && e != Ratio::from_integer(0) {
        return Err(AssemblyError::BadOrbifold("a non-orientable Seifert manifold has Euler number zero".into()));
    }
    Ok(geometry_from_invariants(d.chi_orb(), e))
}
