//! Lens spaces and their complexity.
//!
//! `L(p, q)` is the union of two solid tori whose meridians are the slopes `0` and `p/q` of
//! the common boundary torus. A skeleton is assembled from a chain of flip bricks between two
//! solid tori, each of which fills a slope in its marking or one flip away from it, so the
//! complexity is the flip distance between the stars of the two meridians, less two. The fast
//! path is the continued-fraction digit sum `S(p, q) − 3`.

use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;

use crate::theta::distance::star_distance;
use crate::theta::{Slope, ThetaError};

pub const MAX_CENSUS_COMPLEXITY: usize = 12;

/// A lens space in canonical form: `q` is the least of `±q^{±1} mod p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    pub fn new(p: u64, q: u64) -> Result<LensSpace, ThetaError> {
        if p == 0 || p.gcd(&q) != 1 {
            return Err(ThetaError::NotLens(p, q));
        }
        if p == 1 {
            return Ok(LensSpace { p, q: 0 });
        }
        let q = q % p;
        let inv = mod_inverse(q, p);
        let q = [q, p - q, inv, p - inv].into_iter().min().expect("four candidates");
        Ok(LensSpace { p, q })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    pub fn q(self) -> u64 {
        self.q
    }

    /// All `q` in `[0, p)` giving this space.
    pub fn class(self) -> Vec<u64> {
        if self.p == 1 {
            return vec![0];
        }
        let inv = mod_inverse(self.q, self.p);
        let mut qs = vec![self.q, self.p - self.q, inv, self.p - inv];
        qs.sort_unstable();
        qs.dedup();
        qs
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

fn mod_inverse(q: u64, p: u64) -> u64 {
    let e = (q as i64).extended_gcd(&(p as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i64) as u64
}

/// Sum of the partial quotients of `p/q`.
pub fn digit_sum(p: u64, q: u64) -> u64 {
    let (mut a, mut b, mut sum) = (p, q, 0);
    while b != 0 {
        sum += a / b;
        (a, b) = (b, a % b);
    }
    sum
}

/// Complexity from the least digit sum over the class.
pub fn lens_complexity(l: LensSpace) -> usize {
    if l.p <= 3 {
        return 0;
    }
    let s = l.class().into_iter().map(|q| digit_sum(l.p, q)).min().expect("nonempty class");
    s.saturating_sub(3) as usize
}

/// Complexity from the Farey picture: flips between the stars of the two meridians, less the
/// one flip each solid torus can absorb.
pub fn lens_complexity_by_flips(l: LensSpace) -> usize {
    let far = if l.p == 1 { Slope::INFINITY } else { Slope::new(l.p as i64, l.q as i64).expect("coprime") };
    star_distance(Slope::ZERO, far).saturating_sub(2)
}

fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a.saturating_add(b));
    }
    a
}

/// Canonical lens spaces grouped by complexity `0..=c_max`, each group sorted by `(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LensCensus {
    pub by_complexity: Vec<Vec<LensSpace>>,
}

impl LensCensus {
    pub fn counts(&self) -> Vec<usize> {
        self.by_complexity.iter().map(Vec::len).collect()
    }
}

/// The largest `p` with digit sum at most `s` over some `q` is the Fibonacci number `F(s+1)`,
/// reached by `F(s+1)/F(s)`. Complexity `c` needs `S ≤ c + 3`.
pub fn scan_bound(c_max: usize) -> u64 {
    fibonacci(c_max + 4)
}

pub fn lens_census(c_max: usize) -> Result<LensCensus, ThetaError> {
    if c_max > MAX_CENSUS_COMPLEXITY {
        return Err(ThetaError::CensusBound(c_max));
    }
    let bound = scan_bound(c_max);
    let found: Vec<(usize, LensSpace)> = (1..=bound)
        .into_par_iter()
        .flat_map_iter(|p| {
            (0..p.max(2)).filter(move |&q| p.gcd(&q) == 1).filter_map(move |q| {
                let l = LensSpace::new(p, q).expect("coprime");
                if l.q != q {
                    return None;
                }
                if p > 1 {
                    let s = digit_sum(p, q) as usize;
                    assert!(p <= fibonacci(s + 1), "digit sum {s} of {p}/{q} below the Fibonacci bound");
                }
                let c = lens_complexity(l);
                (c <= c_max).then_some((c, l))
            })
        })
        .collect();
    let mut by_complexity = vec![Vec::new(); c_max + 1];
    for (c, l) in found {
        by_complexity[c].push(l);
    }
    for group in &mut by_complexity {
        group.sort();
    }
    Ok(LensCensus { by_complexity })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lens(p: u64, q: u64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(lens(7, 4), lens(7, 2));
        assert_eq!(lens(7, 5), lens(7, 2));
        assert_eq!(lens(1, 0).to_string(), "L(1,0)");
        assert_eq!(lens(2, 1).class(), vec![1]);
        assert!(LensSpace::new(6, 3).is_err());
        assert!(LensSpace::new(0, 1).is_err());
    }

    #[test]
    fn small_complexities() {
        for (p, q) in [(1, 0), (2, 1), (3, 1)] {
            assert_eq!(lens_complexity(lens(p, q)), 0);
        }
        assert_eq!(lens_complexity(lens(4, 1)), 1);
        assert_eq!(lens_complexity(lens(5, 2)), 1);
        assert_eq!(lens_complexity(lens(7, 2)), 2);
        assert_eq!(digit_sum(7, 2), 5);
    }

    #[test]
    fn only_two_lens_spaces_of_complexity_one_up_to_fifty() {
        let ones: Vec<LensSpace> = (1..=50u64)
            .flat_map(|p| (0..p.max(2)).filter(move |&q| p.gcd(&q) == 1).map(move |q| lens(p, q)))
            .filter(|&l| lens_complexity(l) == 1)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(ones, vec![lens(4, 1), lens(5, 2)]);
    }

    #[test]
    fn census_bound_rejected() {
        assert_eq!(lens_census(13), Err(ThetaError::CensusBound(13)));
    }
}
