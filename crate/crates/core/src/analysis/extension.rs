//! The k-extension property and the degree-preserving 2-switch.

use crate::graph::{iso, Graph};
use crate::wl::{refine, Version};

/// Whether for all disjoint X, Y with |X ∪ Y| ≤ k some vertex outside X ∪ Y
/// is adjacent to every vertex of X and to no vertex of Y.
pub fn extension_property(g: &Graph, k: usize) -> bool {
    let n = g.order();
    let words = n.div_ceil(64);
    let mut all = vec![u64::MAX; words];
    if !n.is_multiple_of(64) {
        all[words - 1] = (1u64 << (n % 64)) - 1;
    }
    extend_from(g, k, 0, &all)
}

/// `candidates`: vertices outside the chosen set that satisfy all chosen
/// constraints. Subsets are extended by vertices of larger index only.
fn extend_from(g: &Graph, k: usize, start: usize, candidates: &[u64]) -> bool {
    if candidates.iter().all(|&w| w == 0) {
        return false;
    }
    if k == 0 {
        return true;
    }
    (start..g.order()).all(|v| {
        [true, false].iter().all(|&adjacent| {
            let row = g.row(v);
            let next: Vec<u64> = candidates
                .iter()
                .zip(row)
                .enumerate()
                .map(|(i, (&c, &r))| {
                    let keep = if adjacent { c & r } else { c & !r };
                    if i == v / 64 {
                        keep & !(1u64 << (v % 64))
                    } else {
                        keep
                    }
                })
                .collect();
            extend_from(g, k - 1, v + 1, &next)
        })
    })
}

/// Number of quadruples tried before giving up on an isomorphic switch.
const SWITCH_ATTEMPTS: usize = 64;

/// Remove edges wx, yz and add xy, zw for vertices with deg w = deg y and
/// deg x = deg z, so that every vertex keeps its degree and the multiset of
/// its neighbours' degrees. Quadruples of four equal degrees are preferred.
/// Returns a witness H ≇ G whose round-2 colour-refinement colours agree
/// with G vertex by vertex, or `None`.
pub fn two_switch_witness(g: &Graph) -> Option<Graph> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (u, v) in g.edges() {
        edges.push((u, v));
        edges.push((v, u));
    }
    let deg = |v: usize| g.degree(v);
    let mut attempts = 0;
    for equidegree in [true, false] {
        for &(w, x) in &edges {
            for &(y, z) in &edges {
                let distinct = w != y && w != z && x != y && x != z;
                if !distinct || g.adjacent(x, y) || g.adjacent(z, w) {
                    continue;
                }
                let matched = deg(w) == deg(y) && deg(x) == deg(z);
                let equal = matched && deg(w) == deg(x);
                if !matched || equal != equidegree {
                    continue;
                }
                if let Some(h) = certified_switch(g, [w, x, y, z]) {
                    return Some(h);
                }
                attempts += 1;
                if attempts >= SWITCH_ATTEMPTS {
                    return None;
                }
            }
        }
    }
    None
}

fn certified_switch(g: &Graph, [w, x, y, z]: [usize; 4]) -> Option<Graph> {
    let removed = |a: usize, b: usize| (a.min(b), a.max(b));
    let gone = [removed(w, x), removed(y, z)];
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|e| !gone.contains(e)).collect();
    edges.push((x, y));
    edges.push((z, w));
    let h = Graph::new(g.order(), edges).ok()?;
    let c = refine(g, Some(&h), 1, Version::Standard, Some(2)).ok()?;
    let round = 2.min(c.last_round());
    (c.colors_g(round) == c.colors_h(round) && !iso(g, &h)).then_some(h)
}
