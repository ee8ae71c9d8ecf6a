//! Linear algebra over GF(2) and abelian group presentations over ℤ.

use std::fmt;

/// Dense GF(2) matrix with bit-packed rows.
#[derive(Clone, Debug)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gf2Solution {
    Unique(Vec<bool>),
    Inconsistent,
    /// Consistent, but the kernel has this dimension.
    Underdetermined(usize),
}

impl Gf2Matrix {
    pub fn new(cols: usize) -> Self {
        Gf2Matrix { cols, rows: Vec::new() }
    }

    fn words(&self) -> usize {
        // One extra bit for an augmented column.
        (self.cols + 1).div_ceil(64)
    }

    /// Appends a row given by the columns holding a 1. Repeated columns cancel.
    pub fn push_row(&mut self, ones: impl IntoIterator<Item = usize>) {
        let mut row = vec![0u64; self.words()];
        for c in ones {
            assert!(c < self.cols, "column {c} out of range");
            row[c / 64] ^= 1 << (c % 64);
        }
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        eliminate(&mut rows, self.cols).len()
    }

    /// Solves `A x = b`.
    pub fn solve(&self, rhs: &[bool]) -> Gf2Solution {
        assert_eq!(rhs.len(), self.rows.len());
        let aug = self.cols;
        let mut rows = self.rows.clone();
        for (row, &b) in rows.iter_mut().zip(rhs) {
            if b {
                row[aug / 64] |= 1 << (aug % 64);
            }
        }
        let pivots = eliminate(&mut rows, self.cols);
        let r = pivots.len();
        if rows[r..].iter().any(|row| bit(row, aug)) {
            return Gf2Solution::Inconsistent;
        }
        if r < self.cols {
            return Gf2Solution::Underdetermined(self.cols - r);
        }
        let mut x = vec![false; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = bit(&rows[i], aug);
        }
        Gf2Solution::Unique(x)
    }
}

fn bit(row: &[u64], c: usize) -> bool {
    row[c / 64] >> (c % 64) & 1 == 1
}

/// Reduced row echelon form in place; returns pivot columns.
fn eliminate(rows: &mut [Vec<u64>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| bit(&rows[i], c)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && bit(row, c) {
                for (w, pw) in row.iter_mut().zip(&pivot) {
                    *w ^= pw;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Invariant factors (nonzero diagonal of the Smith normal form) of an integer matrix.
pub fn invariant_factors(matrix: &[Vec<i64>], cols: usize) -> Vec<u64> {
    let mut m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| {
            assert_eq!(row.len(), cols);
            row.iter().map(|&v| v as i128).collect()
        })
        .collect();
    let nrows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(cols) {
        // Smallest nonzero entry in the remaining block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && best.is_none_or(|(bi, bj)| v.abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let p = m[t][t];
        let mut dirty = false;
        for i in t + 1..nrows {
            let q = m[i][t] / p;
            if q != 0 {
                for j in t..cols {
                    m[i][j] -= q * m[t][j];
                }
            }
            dirty |= m[i][t] != 0;
        }
        for j in t + 1..cols {
            let q = m[t][j] / p;
            if q != 0 {
                for row in m.iter_mut().skip(t) {
                    row[j] -= q * row[t];
                }
            }
            dirty |= m[t][j] != 0;
        }
        if dirty {
            continue;
        }
        // Divisibility: fold in any entry the pivot does not divide.
        let bad = (t + 1..nrows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
        if let Some(i) = bad {
            for j in t..cols {
                m[t][j] += m[i][j];
            }
            continue;
        }
        diag.push(p.unsigned_abs() as u64);
        t += 1;
    }
    diag
}

/// A finitely generated abelian group `ℤ^rank ⊕ ⊕ ℤ/tᵢ` with `t₁ | t₂ | …`, all `tᵢ > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    /// The group with `generators` generators and the given relation rows.
    pub fn from_presentation(generators: usize, relations: &[Vec<i64>]) -> AbelianGroup {
        let diag = invariant_factors(relations, generators);
        let mut torsion: Vec<u64> = diag.iter().copied().filter(|&d| d > 1).collect();
        torsion.sort_unstable();
        AbelianGroup { rank: generators - diag.len(), torsion }
    }

    pub fn free(rank: usize) -> AbelianGroup {
        AbelianGroup { rank, torsion: Vec::new() }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}
