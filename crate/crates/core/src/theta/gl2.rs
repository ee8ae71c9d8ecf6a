//! Integer matrices of determinant ±1 acting on slopes by `(p, q) ↦ (a·p + b·q, c·p + d·q)`.

use std::cmp::Reverse;
use std::fmt;

use crate::theta::{Slope, ThetaError, ThetaGraph};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Gl2 {
    /// Row-major `[[a, b], [c, d]]`.
    m: [[i64; 2]; 2],
}

impl Gl2 {
    pub const IDENTITY: Gl2 = Gl2 { m: [[1, 0], [0, 1]] };

    pub fn new(m: [[i64; 2]; 2]) -> Result<Gl2, ThetaError> {
        let det = m[0][0] as i128 * m[1][1] as i128 - m[0][1] as i128 * m[1][0] as i128;
        if det.abs() != 1 {
            return Err(ThetaError::NotUnimodular(det as i64));
        }
        Ok(Gl2 { m })
    }

    pub fn entries(self) -> [[i64; 2]; 2] {
        self.m
    }

    pub fn det(self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(self) -> i64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn mul(self, other: Gl2) -> Gl2 {
        let (a, b) = (self.m, other.m);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Gl2 { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn inverse(self) -> Gl2 {
        let [[a, b], [c, d]] = self.m;
        let det = self.det();
        Gl2 { m: [[det * d, -det * b], [-det * c, det * a]] }
    }

    pub fn neg(self) -> Gl2 {
        Gl2 { m: self.m.map(|row| row.map(|x| -x)) }
    }

    pub fn pow(self, k: u32) -> Gl2 {
        (0..k).fold(Gl2::IDENTITY, |acc, _| acc.mul(self))
    }

    /// `P·self·P⁻¹`.
    pub fn conjugate_by(self, p: Gl2) -> Gl2 {
        p.mul(self).mul(p.inverse())
    }

    pub fn apply(self, s: Slope) -> Slope {
        let [[a, b], [c, d]] = self.m;
        Slope::new(a * s.p() + b * s.q(), c * s.p() + d * s.q()).expect("unimodular image of a primitive vector")
    }

    pub fn apply_theta(self, t: ThetaGraph) -> ThetaGraph {
        ThetaGraph::new(t.slopes().map(|s| self.apply(s))).expect("unimodular maps preserve Farey triangles")
    }

    /// Least `k ≥ 1` with `selfᵏ = I`. Finite orders in GL₂(ℤ) divide 4 or 6, so `k ≤ 12` suffices.
    pub fn order(self) -> Option<u32> {
        let mut acc = self;
        for k in 1..=12 {
            if acc == Gl2::IDENTITY {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }

    pub fn is_periodic(self) -> bool {
        self.order().is_some()
    }

    /// Some `P` with entries at most `bound` in absolute value and `P·self·P⁻¹ = target`.
    pub fn conjugator_to(self, target: Gl2, bound: i64) -> Option<Gl2> {
        if self.det() != target.det() || self.trace() != target.trace() {
            return None;
        }
        bounded_unimodular(bound).find(|p| p.mul(self) == target.mul(*p))
    }

    /// The conjugate minimizing [`Gl2::normal_key`] over conjugators with entries up to a
    /// bound that starts at 10 and doubles until the answer repeats.
    pub fn conjugacy_normal_form(self) -> Gl2 {
        let mut bound = 10;
        let mut best = self.normal_form_within(bound);
        loop {
            bound *= 2;
            let next = self.normal_form_within(bound);
            if next == best {
                return best;
            }
            best = next;
        }
    }

    fn normal_form_within(self, bound: i64) -> Gl2 {
        bounded_unimodular(bound)
            .map(|p| self.conjugate_by(p))
            .chain([self])
            .min_by_key(|g| g.normal_key())
            .expect("nonempty")
    }

    /// Small entries first, then few negative entries, then lexicographically largest.
    pub fn normal_key(self) -> (i64, usize, Reverse<[[i64; 2]; 2]>) {
        let flat = self.m.as_flattened();
        (flat.iter().map(|x| x.abs()).sum(), flat.iter().filter(|&&x| x < 0).count(), Reverse(self.m))
    }

    /// All maps sending the triangle `from` onto `to`, twelve in all: six vertex bijections,
    /// each realized by a matrix and its negative.
    pub fn theta_maps(from: ThetaGraph, to: ThetaGraph) -> Vec<Gl2> {
        let [x, y, z] = from.slopes();
        let src = [[x.p(), y.p()], [x.q(), y.q()]];
        let src = Gl2::new(src).expect("adjacent slopes");
        let mut out = Vec::new();
        for (i, j) in [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)] {
            let (u, v) = (to.slopes()[i], to.slopes()[j]);
            for (su, sv) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let Ok(dst) = Gl2::new([[su * u.p(), sv * v.p()], [su * u.q(), sv * v.q()]]) else { continue };
                let g = dst.mul(src.inverse());
                if to.contains(g.apply(z)) {
                    out.push(g);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Determinant ±1 matrices with entries in `[-bound, bound]`.
fn bounded_unimodular(bound: i64) -> impl Iterator<Item = Gl2> {
    let r = -bound..=bound;
    r.clone().flat_map(move |a| {
        let r = -bound..=bound;
        r.clone().flat_map(move |b| {
            let r = -bound..=bound;
            r.clone().flat_map(move |c| solutions_d(a, b, c, bound).map(move |d| Gl2 { m: [[a, b], [c, d]] }))
        })
    })
}

/// `d` in range with `a·d − b·c = ±1`.
fn solutions_d(a: i64, b: i64, c: i64, bound: i64) -> Box<dyn Iterator<Item = i64>> {
    if a == 0 {
        return if (b * c).abs() == 1 { Box::new(-bound..=bound) } else { Box::new(std::iter::empty()) };
    }
    let ds: Vec<i64> = [1, -1]
        .into_iter()
        .filter_map(|det| {
            let num = det + b * c;
            (num % a == 0).then_some(num / a)
        })
        .filter(|d| d.abs() <= bound)
        .collect();
    Box::new(ds.into_iter())
}

impl fmt::Display for Gl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.m;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl fmt::Debug for Gl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(m: [[i64; 2]; 2]) -> Gl2 {
        Gl2::new(m).unwrap()
    }

    #[test]
    fn fixed_images() {
        let a = g([[2, 1], [1, 0]]);
        assert_eq!(a.apply_theta(ThetaGraph::standard()), "{2, ∞, 3}".parse().unwrap());
        assert_eq!(g([[1, 1], [1, 0]]).apply(Slope::INFINITY), Slope::integer(1));
        assert_eq!(Gl2::new([[2, 0], [0, 1]]), Err(ThetaError::NotUnimodular(2)));
        for s in ["0", "7/3", "-2/5", "∞"] {
            let s: Slope = s.parse().unwrap();
            assert_eq!(Gl2::IDENTITY.apply(s), s);
        }
    }

    #[test]
    fn orders() {
        assert_eq!(g([[0, 1], [1, 0]]).order(), Some(2));
        assert_eq!(g([[0, -1], [1, 1]]).order(), Some(6));
        assert_eq!(g([[0, -1], [1, 0]]).order(), Some(4));
        assert_eq!(g([[1, 1], [1, 0]]).order(), None);
        assert_eq!(g([[1, 1], [0, 1]]).order(), None);
    }

    #[test]
    fn every_bounded_torsion_element_has_order_dividing_twelve() {
        for p in bounded_unimodular(4) {
            let periodic_up_to_24 = (1..=24).any(|k| p.pow(k) == Gl2::IDENTITY);
            assert_eq!(periodic_up_to_24, p.is_periodic(), "{p}");
        }
    }

    #[test]
    fn theta_maps_are_the_triangle_symmetries() {
        let maps = Gl2::theta_maps(ThetaGraph::standard(), ThetaGraph::integral(-1));
        assert_eq!(maps.len(), 12);
        for m in maps {
            assert_eq!(m.apply_theta(ThetaGraph::standard()), ThetaGraph::integral(-1));
        }
    }

    #[test]
    fn normal_forms_of_small_classes() {
        assert_eq!(g([[0, 1], [1, 1]]).conjugacy_normal_form(), g([[1, 1], [1, 0]]));
        assert_eq!(g([[-1, 1], [1, 0]]).conjugacy_normal_form(), g([[0, 1], [1, -1]]));
        assert_eq!(g([[2, 1], [1, 0]]).conjugacy_normal_form(), g([[2, 1], [1, 0]]));
    }
}
