use complexity_core::theta::lens_census;
use serde::Serialize;

use crate::output::{Emit, Row};
use crate::Outcome;

/// Lens spaces per complexity 0..=9 (the census of P²-irreducible closed manifolds).
pub const EXPECTED: [usize; 10] = [3, 2, 3, 6, 10, 20, 36, 72, 136, 272];

#[derive(Serialize)]
struct LensRow {
    complexity: usize,
    count: usize,
    representatives: Vec<String>,
}

impl Row for LensRow {
    const HEADER: &'static [&'static str] = &["complexity", "count", "representatives"];

    fn cells(&self) -> Vec<String> {
        vec![self.complexity.to_string(), self.count.to_string(), self.representatives.join(",")]
    }
}

pub fn run(c_max: usize, emit: &Emit) -> Result<Outcome, String> {
    let census = lens_census(c_max).map_err(|e| e.to_string())?;
    let rows: Vec<LensRow> = census
        .by_complexity
        .iter()
        .enumerate()
        .map(|(c, spaces)| LensRow {
            complexity: c,
            count: spaces.len(),
            representatives: spaces.iter().map(|l| l.to_string()).collect(),
        })
        .collect();
    let mismatches = rows
        .iter()
        .zip(EXPECTED)
        .filter(|(r, want)| r.count != *want)
        .map(|(r, want)| format!("complexity {}: {} lens spaces, expected {want}", r.complexity, r.count))
        .collect();
    Ok(Outcome { table: emit.render(&rows)?, mismatches })
}
