use std::fmt;
use std::str::FromStr;

use crate::perm::{face_vertices, Perm4};
use crate::spine::SpineError;

/// Where a tetrahedron face is glued.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub tet: usize,
    pub face: u8,
    /// Maps the vertices of the source tetrahedron to those of `tet`; sends the source face
    /// number to `face`.
    pub perm: Perm4,
}

/// `n` tetrahedra with face-pairing maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GluingTable {
    pairings: Vec<Option<Gluing>>,
}

impl GluingTable {
    /// A table of `n` tetrahedra with every face unglued.
    pub fn unglued(n: usize) -> GluingTable {
        GluingTable { pairings: vec![None; 4 * n] }
    }

    pub fn size(&self) -> usize {
        self.pairings.len() / 4
    }

    pub fn gluing(&self, tet: usize, face: u8) -> Option<Gluing> {
        self.pairings[4 * tet + face as usize]
    }

    pub fn is_closed(&self) -> bool {
        self.pairings.iter().all(Option::is_some)
    }

    /// Glues `(tet, face)` to `(perm(tet-vertices))` and installs the reverse pairing.
    pub fn glue(&mut self, tet: usize, face: u8, target: usize, perm: Perm4) -> Result<(), SpineError> {
        let n = self.size();
        if tet >= n || target >= n || face > 3 {
            return Err(SpineError::IndexOutOfRange(format!("{tet} {face} -> {target}")));
        }
        let target_face = perm.apply(face);
        if tet == target && face == target_face {
            return Err(SpineError::SelfGluedFace { tet, face });
        }
        let forward = Gluing { tet: target, face: target_face, perm };
        let backward = Gluing { tet, face, perm: perm.inverse() };
        for (slot, value) in [((tet, face), forward), ((target, target_face), backward)] {
            let existing = &mut self.pairings[4 * slot.0 + slot.1 as usize];
            match existing {
                Some(g) if *g != value => {
                    return Err(SpineError::NotInvolution { tet: slot.0, face: slot.1 });
                }
                _ => *existing = Some(value),
            }
        }
        Ok(())
    }

    pub fn unglue(&mut self, tet: usize, face: u8) {
        if let Some(g) = self.pairings[4 * tet + face as usize].take() {
            self.pairings[4 * g.tet + g.face as usize] = None;
        }
    }

    /// Checks the involution invariants. Tables built through [`GluingTable::glue`] always pass.
    pub fn validate(&self) -> Result<(), SpineError> {
        let n = self.size();
        for tet in 0..n {
            for face in 0..4u8 {
                let Some(g) = self.gluing(tet, face) else { continue };
                if g.tet >= n || g.perm.apply(face) != g.face {
                    return Err(SpineError::IndexOutOfRange(format!("{tet} {face}")));
                }
                if g.tet == tet && g.face == face {
                    return Err(SpineError::SelfGluedFace { tet, face });
                }
                let back = self.gluing(g.tet, g.face);
                if back != Some(Gluing { tet, face, perm: g.perm.inverse() }) {
                    return Err(SpineError::NotInvolution { tet, face });
                }
            }
        }
        Ok(())
    }

    pub(crate) fn require_closed(&self) -> Result<(), SpineError> {
        if self.size() == 0 {
            return Err(SpineError::Empty);
        }
        for tet in 0..self.size() {
            for face in 0..4u8 {
                if self.gluing(tet, face).is_none() {
                    return Err(SpineError::Unglued { tet, face });
                }
            }
        }
        Ok(())
    }

    /// Each glued face pair once, as `(tet, face, gluing)` with `(tet, face)` the smaller side.
    pub fn face_pairs(&self) -> impl Iterator<Item = (usize, u8, Gluing)> + '_ {
        (0..self.size()).flat_map(move |tet| {
            (0..4u8).filter_map(move |face| {
                let g = self.gluing(tet, face)?;
                ((tet, face) < (g.tet, g.face)).then_some((tet, face, g))
            })
        })
    }

    /// Relabels: tetrahedron `i` becomes `tet_map[i]` with vertex relabeling `vertex_maps[i]`.
    pub fn relabel(&self, tet_map: &[usize], vertex_maps: &[Perm4]) -> GluingTable {
        let n = self.size();
        let mut out = GluingTable::unglued(n);
        for tet in 0..n {
            for face in 0..4u8 {
                if let Some(g) = self.gluing(tet, face) {
                    let new_face = vertex_maps[tet].apply(face);
                    let perm = vertex_maps[g.tet].compose(g.perm).compose(vertex_maps[tet].inverse());
                    out.pairings[4 * tet_map[tet] + new_face as usize] =
                        Some(Gluing { tet: tet_map[g.tet], face: perm.apply(new_face), perm });
                }
            }
        }
        out
    }
}

impl fmt::Debug for GluingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GluingTable(n={}, {:?})", self.size(), self.to_string())
    }
}

/// One `T f : T' f' : abc` line per glued face pair.
impl fmt::Display for GluingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {} tetrahedra", self.size())?;
        for (tet, face, g) in self.face_pairs() {
            let [a, b, c] = face_vertices(face).map(|v| g.perm.apply(v));
            writeln!(f, "{tet} {face} : {} {} : {a}{b}{c}", g.tet, g.face)?;
        }
        Ok(())
    }
}

impl FromStr for GluingTable {
    type Err = SpineError;

    /// Parses the line format. The tetrahedron count is one more than the largest index
    /// mentioned, or the `# N tetrahedra` header when present.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = Vec::new();
        let mut declared: Option<usize> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if let Some(comment) = line.strip_prefix('#') {
                let mut words = comment.split_whitespace();
                if let (Some(num), Some("tetrahedra"), None) = (words.next(), words.next(), words.next()) {
                    declared = num.parse().ok();
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            lines.push((lineno + 1, parse_line(line).map_err(|why| SpineError::Malformed { line: lineno + 1, why })?));
        }
        let used = lines.iter().map(|&(_, (t, _, u, _, _))| t.max(u) + 1).max().unwrap_or(0);
        let n = declared.unwrap_or(used).max(used);
        let mut table = GluingTable::unglued(n);
        for (lineno, (tet, face, target, target_face, perm)) in lines {
            if perm.apply(face) != target_face {
                return Err(SpineError::Malformed {
                    line: lineno,
                    why: format!("bijection of {tet} {face} does not land on face {target_face}"),
                });
            }
            table.glue(tet, face, target, perm)?;
        }
        Ok(table)
    }
}

type Line = (usize, u8, usize, u8, Perm4);

fn parse_line(line: &str) -> Result<Line, String> {
    let parts: Vec<&str> = line.split(':').map(str::trim).collect();
    let [src, dst, images] = parts[..] else {
        return Err(format!("expected `T f : T' f' : abc`, got `{line}`"));
    };
    let pair = |s: &str| -> Result<(usize, u8), String> {
        let mut it = s.split_whitespace();
        let (Some(t), Some(f), None) = (it.next(), it.next(), it.next()) else {
            return Err(format!("expected `tet face`, got `{s}`"));
        };
        let t = t.parse::<usize>().map_err(|e| format!("tetrahedron `{t}`: {e}"))?;
        let f = f.parse::<u8>().map_err(|e| format!("face `{f}`: {e}"))?;
        if f > 3 {
            return Err(format!("face {f} out of range"));
        }
        Ok((t, f))
    };
    let (tet, face) = pair(src)?;
    let (target, target_face) = pair(dst)?;
    let digits: Vec<u8> = images
        .chars()
        .map(|c| c.to_digit(10).filter(|&d| d < 4).map(|d| d as u8))
        .collect::<Option<_>>()
        .ok_or_else(|| format!("bad vertex images `{images}`"))?;
    if digits.len() != 3 {
        return Err(format!("expected three vertex images, got `{images}`"));
    }
    let mut img = [0u8; 4];
    for (v, d) in face_vertices(face).into_iter().zip(&digits) {
        img[v as usize] = *d;
    }
    img[face as usize] = 6 - digits.iter().sum::<u8>();
    let perm = Perm4::new(img).ok_or_else(|| format!("vertex images `{images}` repeat"))?;
    Ok((tet, face, target, target_face, perm))
}
