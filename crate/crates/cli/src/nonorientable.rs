use complexity_core::assembling::{c7_constructions, nonorientable_c6_census, CensusClass, Geometry};
use num_rational::Ratio;
use serde::Serialize;

use crate::output::{Emit, Row};
use crate::Outcome;

#[derive(Serialize)]
struct CensusRow {
    complexity: u32,
    description: String,
    geometry: String,
    chi_orb: Option<String>,
    monodromy: Option<[[i64; 2]; 2]>,
    ledger: u32,
    homology: String,
    fibrations: Vec<String>,
    constructions: Vec<String>,
}

impl CensusRow {
    fn new(complexity: u32, c: &CensusClass) -> CensusRow {
        CensusRow {
            complexity,
            description: c.name.clone(),
            geometry: c.geometry.to_string(),
            chi_orb: c.chi_orb.map(|r| r.to_string()),
            monodromy: c.monodromy.map(|m| m.entries()),
            ledger: c.ledger,
            homology: c.homology.to_string(),
            fibrations: c.fibrations.iter().map(|b| b.to_string()).collect(),
            constructions: c.constructions.clone(),
        }
    }
}

impl Row for CensusRow {
    const HEADER: &'static [&'static str] =
        &["complexity", "description", "geometry", "chi_orb", "monodromy", "ledger", "homology", "fibrations", "construction"];

    fn cells(&self) -> Vec<String> {
        let monodromy = self.monodromy.map(|[[a, b], [c, d]]| format!("[[{a},{b}],[{c},{d}]]"));
        vec![
            self.complexity.to_string(),
            self.description.clone(),
            self.geometry.clone(),
            self.chi_orb.clone().unwrap_or_else(|| "-".into()),
            monodromy.unwrap_or_else(|| "-".into()),
            self.ledger.to_string(),
            self.homology.clone(),
            if self.fibrations.is_empty() { "-".into() } else { self.fibrations.join(",") },
            self.constructions.first().cloned().unwrap_or_default(),
        ]
    }
}

/// Disagreements with the expected census: four flat manifolds and the Sol bundle with
/// monodromy `[[1,1],[1,0]]` at complexity 6; two H²×R manifolds with `χ^orb = −1/6` and a
/// Sol bundle with monodromy `[[2,1],[1,0]]` at complexity 7.
fn mismatches(six: &[CensusClass], seven: &[CensusClass]) -> Vec<String> {
    let mut out = Vec::new();
    let flats: Vec<&CensusClass> = six.iter().filter(|c| c.geometry == Geometry::Flat).collect();
    let sols: Vec<&CensusClass> = six.iter().filter(|c| c.geometry == Geometry::Sol).collect();
    if six.len() != 5 || flats.len() != 4 || sols.len() != 1 {
        out.push(format!("complexity 6: {} classes ({} flat, {} Sol), expected 5 (4 flat, 1 Sol)", six.len(), flats.len(), sols.len()));
    }
    if let Some(sol) = sols.first() {
        if sol.monodromy.map(|m| m.entries()) != Some([[1, 1], [1, 0]]) {
            out.push(format!("complexity 6: Sol class {} does not have monodromy [[1,1],[1,0]]", sol.name));
        }
    }
    for c in six.iter().chain(seven) {
        let expected = if six.contains(c) { 6 } else { 7 };
        if c.ledger != expected {
            out.push(format!("{}: ledger {}, expected {expected}", c.name, c.ledger));
        }
    }
    for c in &flats {
        if !c.fibrations.iter().any(|b| b.chi_orb() == Ratio::from_integer(0)) {
            out.push(format!("{}: no fibration with χ^orb = 0", c.name));
        }
    }
    let hyperbolic: Vec<&CensusClass> = seven.iter().filter(|c| c.geometry == Geometry::H2xR).collect();
    if hyperbolic.len() != 2 || hyperbolic.iter().any(|c| c.chi_orb != Some(Ratio::new(-1, 6))) {
        out.push("complexity 7: expected two H2xR rows with χ^orb = -1/6".into());
    }
    let sol7 = seven.iter().any(|c| c.geometry == Geometry::Sol && c.monodromy.map(|m| m.entries()) == Some([[2, 1], [1, 0]]));
    if !sol7 {
        out.push("complexity 7: no Sol row with monodromy [[2,1],[1,0]]".into());
    }
    out
}

pub fn run(emit: &Emit) -> Result<Outcome, String> {
    let six = nonorientable_c6_census().map_err(|e| e.to_string())?;
    let seven = c7_constructions().map_err(|e| e.to_string())?;
    let rows: Vec<CensusRow> =
        six.iter().map(|c| CensusRow::new(6, c)).chain(seven.iter().map(|c| CensusRow::new(7, c))).collect();
    Ok(Outcome { table: emit.render(&rows)?, mismatches: mismatches(&six, &seven) })
}
