use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::theta::ThetaError;

/// An unoriented essential simple closed curve on a torus, `±(p·a + q·b)`, written `p/q`.
/// Normalized so that `q > 0`, or `(p, q) = (1, 0)` for `∞`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };
    pub const ZERO: Slope = Slope { p: 0, q: 1 };

    pub fn new(p: i64, q: i64) -> Result<Slope, ThetaError> {
        if p.gcd(&q) != 1 {
            return Err(ThetaError::NotPrimitive(p, q));
        }
        Ok(if q < 0 || (q == 0 && p < 0) { Slope { p: -p, q: -q } } else { Slope { p, q } })
    }

    pub fn integer(n: i64) -> Slope {
        Slope { p: n, q: 1 }
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    pub fn is_infinite(self) -> bool {
        self.q == 0
    }

    /// Absolute algebraic intersection number of the two curves.
    pub fn intersection(self, other: Slope) -> u64 {
        (self.p as i128 * other.q as i128 - self.q as i128 * other.p as i128).unsigned_abs() as u64
    }

    /// Normalized `self ± other` as vectors; both are adjacent to each when `self, other` are.
    pub(crate) fn sum_and_difference(self, other: Slope) -> (Slope, Slope) {
        let sum = Slope::new(self.p + other.p, self.q + other.q).expect("adjacent slopes");
        let diff = Slope::new(self.p - other.p, self.q - other.q).expect("adjacent slopes");
        (sum, diff)
    }
}

/// Slopes ordered by value with `∞` last.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.q, other.q) {
            (0, 0) => Ordering::Equal,
            (0, _) => Ordering::Greater,
            (_, 0) => Ordering::Less,
            _ => (self.p as i128 * other.q as i128).cmp(&(other.p as i128 * self.q as i128)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            0 => write!(f, "∞"),
            1 => write!(f, "{}", self.p),
            q => write!(f, "{}/{}", self.p, q),
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Slope {
    type Err = ThetaError;

    /// Accepts `p/q`, `p`, `∞` and `inf`.
    fn from_str(s: &str) -> Result<Slope, ThetaError> {
        let s = s.trim();
        if s == "∞" || s.eq_ignore_ascii_case("inf") {
            return Ok(Slope::INFINITY);
        }
        let bad = || ThetaError::Parse(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
            None => (s.parse().map_err(|_| bad())?, 1),
        };
        Slope::new(p, q)
    }
}

/// True iff the three slopes are distinct and pairwise adjacent in the Farey graph.
pub fn is_theta(slopes: [Slope; 3]) -> bool {
    let [a, b, c] = slopes;
    a.intersection(b) == 1 && b.intersection(c) == 1 && a.intersection(c) == 1
}

/// A θ-graph on a torus, recorded as the Farey triangle of its three slopes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct ThetaGraph {
    /// Sorted by value.
    slopes: [Slope; 3],
}

impl ThetaGraph {
    pub fn new(slopes: [Slope; 3]) -> Result<ThetaGraph, ThetaError> {
        if !is_theta(slopes) {
            return Err(ThetaError::NotTheta(slopes));
        }
        let mut slopes = slopes;
        slopes.sort();
        Ok(ThetaGraph { slopes })
    }

    /// `{0, 1, ∞}`.
    pub fn standard() -> ThetaGraph {
        ThetaGraph::integral(0)
    }

    /// `θᵢ = {i, i+1, ∞}`.
    pub fn integral(i: i64) -> ThetaGraph {
        ThetaGraph { slopes: [Slope::integer(i), Slope::integer(i + 1), Slope::INFINITY] }
    }

    pub fn slopes(&self) -> [Slope; 3] {
        self.slopes
    }

    pub fn contains(&self, s: Slope) -> bool {
        self.slopes.contains(&s)
    }

    /// The two slopes other than `s`.
    pub fn others(&self, s: Slope) -> Result<[Slope; 2], ThetaError> {
        let rest: Vec<Slope> = self.slopes.iter().copied().filter(|&x| x != s).collect();
        rest.try_into().map_err(|_| ThetaError::NotInTheta(s, *self))
    }

    /// The other Farey triangle on the edge opposite `removed`.
    pub fn flip(&self, removed: Slope) -> Result<ThetaGraph, ThetaError> {
        Ok(self.flip_with_new(removed)?.0)
    }

    /// As [`ThetaGraph::flip`], also returning the slope that replaced `removed`.
    pub fn flip_with_new(&self, removed: Slope) -> Result<(ThetaGraph, Slope), ThetaError> {
        let [x, y] = self.others(removed)?;
        let (sum, diff) = x.sum_and_difference(y);
        let new = if sum == removed { diff } else { sum };
        Ok((ThetaGraph::new([x, y, new]).expect("flip of a Farey triangle"), new))
    }

    /// The three slopes at flip distance one: each is the new slope of one flip.
    pub fn opposite_slopes(&self) -> [Slope; 3] {
        self.slopes.map(|s| self.flip_with_new(s).expect("own slope").1)
    }
}

impl fmt::Display for ThetaGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.slopes;
        write!(f, "{{{a}, {b}, {c}}}")
    }
}

impl fmt::Debug for ThetaGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ThetaGraph {
    type Err = ThetaError;

    /// Three comma-separated slopes, optionally in braces.
    fn from_str(s: &str) -> Result<ThetaGraph, ThetaError> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let slopes: Vec<Slope> = inner.split(',').map(str::parse).collect::<Result<_, _>>()?;
        let slopes: [Slope; 3] = slopes.try_into().map_err(|_| ThetaError::Parse(s.to_string()))?;
        ThetaGraph::new(slopes)
    }
}
