//! Automorphism counting and isomorphism search.

use super::refine::{individualize, refine, refine_joint, target_cell};
use super::Graph;
use crate::error::{Error, Result};

/// Largest order for which automorphisms are counted by plain backtracking.
pub const COUNT_ORDER: usize = 10;

pub fn automorphism_count(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > COUNT_ORDER {
        return Err(Error::Resource(format!(
            "automorphism counting is exhaustive and limited to order {COUNT_ORDER}; got {n}"
        )));
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g, 0, &mut image, &mut used))
}

fn extend(g: &Graph, v: usize, image: &mut [usize], used: &mut [bool]) -> u64 {
    let n = g.order();
    if v == n {
        return 1;
    }
    let mut total = 0;
    for w in 0..n {
        if used[w] || g.degree(w) != g.degree(v) {
            continue;
        }
        if (0..v).all(|u| g.adjacent(u, v) == g.adjacent(image[u], w)) {
            image[v] = w;
            used[w] = true;
            total += extend(g, v + 1, image, used);
            used[w] = false;
        }
    }
    total
}

/// All automorphisms of `g` as vertex maps, or `None` once more than `limit`
/// have been found. Intended for small graphs (plain backtracking).
pub fn automorphisms(g: &Graph, limit: usize) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found = Vec::new();
    collect(g, 0, &mut image, &mut used, &mut found, limit).then_some(found)
}

fn collect(
    g: &Graph,
    v: usize,
    image: &mut [usize],
    used: &mut [bool],
    found: &mut Vec<Vec<usize>>,
    limit: usize,
) -> bool {
    let n = g.order();
    if v == n {
        found.push(image.to_vec());
        return found.len() <= limit;
    }
    for w in 0..n {
        if used[w] || g.degree(w) != g.degree(v) {
            continue;
        }
        if (0..v).all(|u| g.adjacent(u, v) == g.adjacent(image[u], w)) {
            image[v] = w;
            used[w] = true;
            let within = collect(g, v + 1, image, used, found, limit);
            used[w] = false;
            if !within {
                return false;
            }
        }
    }
    true
}

/// True iff the only automorphism is the identity.
pub fn is_asymmetric(g: &Graph) -> bool {
    if g.order() <= 8 {
        return automorphism_count(g).expect("order within the counting range") == 1;
    }
    asymmetric_by_search(g)
}

fn asymmetric_by_search(g: &Graph) -> bool {
    let mut colors = vec![0u32; g.order()];
    refine(g, &mut colors);
    // A non-trivial automorphism moves some v to some w of the same colour;
    // its inverse moves w to v, so unordered pairs suffice.
    for v in 0..g.order() {
        for w in v + 1..g.order() {
            if colors[v] == colors[w]
                && find_colored(g, g, individualize(&colors, v), individualize(&colors, w)).is_some()
            {
                return false;
            }
        }
    }
    true
}

/// An isomorphism `g → h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    find_colored(g, h, vec![0; g.order()], vec![0; h.order()])
}

fn find_colored(g: &Graph, h: &Graph, cg: Vec<u32>, ch: Vec<u32>) -> Option<Vec<usize>> {
    let mut colors = [cg, ch];
    refine_joint(&[g, h], &mut colors);
    let [cg, ch] = colors;
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }
    let Some(cell) = target_cell(&cg) else {
        let mut by_color = vec![usize::MAX; g.order()];
        for (w, &c) in ch.iter().enumerate() {
            by_color[c as usize] = w;
        }
        let map: Vec<usize> = cg.iter().map(|&c| by_color[c as usize]).collect();
        let ok = g.edges().iter().all(|&(u, v)| h.adjacent(map[u], map[v]));
        return ok.then_some(map);
    };
    let v = cell[0];
    let c = cg[v];
    (0..h.order())
        .filter(|&w| ch[w] == c)
        .find_map(|w| find_colored(g, h, individualize(&cg, v), individualize(&ch, w)))
}
