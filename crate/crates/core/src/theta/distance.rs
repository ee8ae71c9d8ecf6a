//! Paths in the dual tree of the Farey tessellation.
//!
//! The triangles containing `∞` are `θᵢ = {i, i+1, ∞}` and form a line in the tree. Every other
//! triangle has a unique slope of largest denominator, the sum of the other two; flipping it
//! strictly lowers the largest denominator, so repeated descent reaches that line.

use std::collections::HashMap;

use crate::theta::{Slope, ThetaGraph};

/// The neighbour one step closer to the `∞` fan, or `None` on the fan.
fn parent(t: &ThetaGraph) -> Option<ThetaGraph> {
    if t.contains(Slope::INFINITY) {
        return None;
    }
    let top = t.slopes().into_iter().max_by_key(|s| s.q()).expect("three slopes");
    Some(t.flip(top).expect("own slope"))
}

fn fan_index(t: &ThetaGraph) -> i64 {
    debug_assert!(t.contains(Slope::INFINITY));
    t.slopes()[0].p()
}

fn descent(t: ThetaGraph) -> Vec<ThetaGraph> {
    let mut chain = vec![t];
    while let Some(up) = parent(chain.last().expect("nonempty")) {
        chain.push(up);
    }
    chain
}

/// The triangles on the tree path from `a` to `b`, both included.
pub fn flip_path(a: ThetaGraph, b: ThetaGraph) -> Vec<ThetaGraph> {
    let up_a = descent(a);
    let up_b = descent(b);
    let depth_b: HashMap<ThetaGraph, usize> = up_b.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    if let Some((i, j)) = up_a.iter().enumerate().find_map(|(i, t)| depth_b.get(t).map(|&j| (i, j))) {
        let mut path = up_a[..=i].to_vec();
        path.extend(up_b[..j].iter().rev());
        return path;
    }
    let (from, to) = (fan_index(up_a.last().expect("nonempty")), fan_index(up_b.last().expect("nonempty")));
    let mut path = up_a;
    let step = if to > from { 1 } else { -1 };
    let mut k = from;
    while k != to {
        k += step;
        path.push(ThetaGraph::integral(k));
    }
    path.pop();
    path.extend(up_b.iter().rev());
    path
}

/// Number of flips needed to pass from `a` to `b`.
pub fn flip_distance(a: ThetaGraph, b: ThetaGraph) -> usize {
    flip_path(a, b).len() - 1
}

/// Least number of flips between a triangle containing `x` and one containing `y`.
pub fn star_distance(x: Slope, y: Slope) -> usize {
    // Stars are connected subtrees, so the bridge between them lies on any path joining them.
    let path = flip_path(any_triangle_containing(x), any_triangle_containing(y));
    let last_x = path.iter().rposition(|t| t.contains(x)).expect("path starts in the star of x");
    let first_y = path.iter().position(|t| t.contains(y)).expect("path ends in the star of y");
    first_y.saturating_sub(last_x)
}

/// Some Farey triangle with `s` as a vertex.
pub fn any_triangle_containing(s: Slope) -> ThetaGraph {
    // p·x + q·y = ±1 makes (−y, x) adjacent to (p, q).
    let (g, x, y) = extended_gcd(s.p() as i128, s.q() as i128);
    let other = Slope::new((-y * g) as i64, (x * g) as i64).expect("unimodular neighbour");
    let (sum, _) = s.sum_and_difference(other);
    ThetaGraph::new([s, other, sum]).expect("Farey triangle")
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}
