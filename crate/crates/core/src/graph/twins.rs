//! Twins: vertex pairs that no third vertex tells apart.

use super::Graph;

/// Whether `u` and `v` are twins: they are distinct and no third vertex is
/// adjacent to exactly one of them.
pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = |a: usize, b: usize| g.neighbors(a).iter().copied().filter(move |&x| x as usize != b);
    u != v && strip(u, v).eq(strip(v, u))
}

/// All twin pairs (u, v) with u < v, in lexicographic order.
pub fn twins(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| are_twins(g, u, v)).collect()
}

/// Whether some pair of distinct vertices are twins.
pub fn has_twins(g: &Graph) -> bool {
    let n = g.order();
    (0..n).any(|u| (u + 1..n).any(|v| are_twins(g, u, v)))
}

pub fn is_twin_free(g: &Graph) -> bool {
    !has_twins(g)
}
