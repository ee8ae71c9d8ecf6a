//! Isomorphism signatures of gluing tables.
//!
//! For every starting tetrahedron and every relabeling of its vertices, the table is
//! relabeled breadth-first: faces are scanned in new-label order and each newly reached
//! tetrahedron takes the next index, with vertex labels chosen so the connecting gluing
//! becomes the identity. The smallest serialization over all starts is the signature.

use std::collections::VecDeque;
use std::fmt;

use crate::perm::{Perm4, ALL_PERMS};
use crate::spine::{GluingTable, SpineError};

/// Printable canonical form, `sig:` followed by base-36 digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(String);

impl Signature {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Entry per face: 0 for unglued, else `24 * target + perm index + 1`.
type Code = Vec<u32>;

fn relabeled_code(table: &GluingTable, start: usize, labeling: Perm4, best: Option<&Code>) -> Option<(Code, Vec<usize>, Vec<Perm4>)> {
    let n = table.size();
    let mut index = vec![usize::MAX; n];
    let mut maps = vec![Perm4::IDENTITY; n];
    let mut order = Vec::with_capacity(n);
    index[start] = 0;
    maps[start] = labeling;
    order.push(start);
    let mut queue = VecDeque::from([start]);
    let mut code = Vec::with_capacity(4 * n);
    let mut tight = best.is_some();
    while let Some(tet) = queue.pop_front() {
        let inverse = maps[tet].inverse();
        for new_face in 0..4u8 {
            let old_face = inverse.apply(new_face);
            let value = match table.gluing(tet, old_face) {
                None => 0,
                Some(g) => {
                    if index[g.tet] == usize::MAX {
                        index[g.tet] = order.len();
                        order.push(g.tet);
                        maps[g.tet] = maps[tet].compose(g.perm.inverse());
                        queue.push_back(g.tet);
                    }
                    let perm = maps[g.tet].compose(g.perm).compose(inverse);
                    24 * index[g.tet] as u32 + perm.index() as u32 + 1
                }
            };
            if tight {
                let b = best.unwrap()[code.len()];
                if value > b {
                    return None;
                }
                if value < b {
                    tight = false;
                }
            }
            code.push(value);
        }
    }
    if order.len() != n {
        return None;
    }
    let tet_map: Vec<usize> = index;
    Some((code, tet_map, maps))
}

fn connected(table: &GluingTable) -> bool {
    let n = table.size();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(t) = stack.pop() {
        for face in 0..4u8 {
            if let Some(g) = table.gluing(t, face) {
                if !seen[g.tet] {
                    seen[g.tet] = true;
                    stack.push(g.tet);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn canonical_code(table: &GluingTable) -> Result<(Code, Vec<usize>, Vec<Perm4>), SpineError> {
    if table.size() == 0 {
        return Err(SpineError::Empty);
    }
    table.validate()?;
    if !connected(table) {
        return Err(SpineError::Disconnected);
    }
    let mut best: Option<(Code, Vec<usize>, Vec<Perm4>)> = None;
    for start in 0..table.size() {
        for labeling in ALL_PERMS {
            if let Some(found) = relabeled_code(table, start, labeling, best.as_ref().map(|b| &b.0)) {
                if best.as_ref().is_none_or(|b| found.0 < b.0) {
                    best = Some(found);
                }
            }
        }
    }
    Ok(best.expect("a connected table has a relabeling"))
}

fn digits_needed(max: u32) -> usize {
    let mut width = 1;
    let mut cap = 36u64;
    while cap <= max as u64 {
        width += 1;
        cap *= 36;
    }
    width
}

fn push_base36(out: &mut String, mut value: u32, width: usize) {
    let mut buf = vec![b'0'; width];
    for slot in buf.iter_mut().rev() {
        *slot = char::from_digit(value % 36, 36).unwrap() as u8;
        value /= 36;
    }
    out.push_str(std::str::from_utf8(&buf).unwrap());
}

fn encode(n: usize, code: &Code) -> Signature {
    let width = digits_needed(24 * n as u32 + 1);
    let mut s = String::from("sig:");
    push_base36(&mut s, width as u32, 1);
    push_base36(&mut s, n as u32, width);
    for &v in code {
        push_base36(&mut s, v, width);
    }
    Signature(s)
}

/// Signature invariant under relabeling tetrahedra and their vertices.
pub fn canonical_signature(table: &GluingTable) -> Result<Signature, SpineError> {
    let (code, _, _) = canonical_code(table)?;
    Ok(encode(table.size(), &code))
}

/// The relabeled table whose serialization is the signature.
pub fn canonical_form(table: &GluingTable) -> Result<GluingTable, SpineError> {
    let (_, tet_map, maps) = canonical_code(table)?;
    Ok(table.relabel(&tet_map, &maps))
}

/// Rebuilds the canonical table from its signature.
pub fn table_from_signature(sig: &str) -> Result<GluingTable, SpineError> {
    let bad = |why: &str| SpineError::BadSignature(format!("{why}: `{sig}`"));
    let body = sig.strip_prefix("sig:").ok_or_else(|| bad("missing prefix"))?;
    let digits: Vec<u32> = body.chars().map(|c| c.to_digit(36)).collect::<Option<_>>().ok_or_else(|| bad("bad digit"))?;
    let (&width, rest) = digits.split_first().ok_or_else(|| bad("empty"))?;
    let width = width as usize;
    if width == 0 || rest.len() % width != 0 {
        return Err(bad("bad width"));
    }
    let values: Vec<u32> = rest.chunks(width).map(|c| c.iter().fold(0, |acc, &d| acc * 36 + d)).collect();
    let (&n, code) = values.split_first().ok_or_else(|| bad("missing size"))?;
    let n = n as usize;
    if n == 0 || code.len() != 4 * n {
        return Err(bad("wrong length"));
    }
    let mut table = GluingTable::unglued(n);
    for (slot, &v) in code.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let target = ((v - 1) / 24) as usize;
        let perm = Perm4::from_index(((v - 1) % 24) as usize);
        if target >= n {
            return Err(bad("target out of range"));
        }
        table.glue(slot / 4, (slot % 4) as u8, target, perm).map_err(|e| bad(&e.to_string()))?;
    }
    if encode(n, &code.to_vec()).as_str() != sig {
        return Err(bad("not in canonical encoding"));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base36_widths() {
        assert_eq!(digits_needed(25), 1);
        assert_eq!(digits_needed(35), 1);
        assert_eq!(digits_needed(36), 2);
        let mut s = String::new();
        push_base36(&mut s, 37, 2);
        assert_eq!(s, "11");
    }

    #[test]
    fn swapping_tetrahedra_keeps_signature() {
        let t: GluingTable = "0 0 : 1 1 : 023\n0 1 : 0 2 : 031\n0 3 : 1 3 : 102\n1 0 : 1 2 : 130\n".parse().unwrap();
        let swapped = t.relabel(&[1, 0], &[Perm4::IDENTITY, Perm4::IDENTITY]);
        assert_eq!(canonical_signature(&t).unwrap(), canonical_signature(&swapped).unwrap());
        let sig = canonical_signature(&t).unwrap();
        assert!(sig.as_str().starts_with("sig:"));
        let back = table_from_signature(sig.as_str()).unwrap();
        assert_eq!(back, canonical_form(&t).unwrap());
        assert_eq!(canonical_signature(&back).unwrap(), sig);
    }

    #[test]
    fn disconnected_tables_are_rejected() {
        let t: GluingTable = "0 0 : 0 1 : 023\n1 0 : 1 1 : 023\n".parse().unwrap();
        assert_eq!(canonical_signature(&t), Err(SpineError::Disconnected));
    }
}
