//! Canonical codes.
//!
//! A code is the order (4 bytes, big endian) followed by the upper triangle
//! of the adjacency matrix under the canonical ordering, packed most
//! significant bit first in the column order `(0,1), (0,2), (1,2), (0,3), …`.
//! Up to order 8 the canonical ordering is the one giving the
//! lexicographically least bitstring over all permutations; beyond that it
//! is the least bitstring over the leaves of an individualisation-refinement
//! search tree.

use super::refine::{individualize, refine, target_cell};
use super::twins::are_twins;
use super::Graph;

const EXHAUSTIVE_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        u32::from_be_bytes(self.0[..4].try_into().expect("code has an order prefix")) as usize
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonical_labeling(g).0
}

pub fn iso(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

/// The canonical code together with a permutation `perm` (vertex `v` goes
/// to position `perm[v]`) such that `g.relabel(&perm)` is the canonical
/// representative.
pub fn canonical_labeling(g: &Graph) -> (CanonicalCode, Vec<usize>) {
    let ordering = if g.order() <= EXHAUSTIVE_ORDER { exhaustive_ordering(g) } else { refined_ordering(g) };
    let code = encode(g, &ordering);
    let mut perm = vec![0; g.order()];
    for (pos, &v) in ordering.iter().enumerate() {
        perm[v] = pos;
    }
    (code, perm)
}

fn encode(g: &Graph, ordering: &[usize]) -> CanonicalCode {
    let n = ordering.len();
    let mut bytes = (n as u32).to_be_bytes().to_vec();
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(ordering[i], ordering[j]) as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    CanonicalCode(bytes)
}

/// Column-by-column filtering: a lexicographically least string made of
/// fixed-width blocks has a least first block, then a least second block
/// among those, and so on.
fn exhaustive_ordering(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut survivors: Vec<Vec<usize>> = vec![Vec::new()];
    for p in 0..n {
        let mut best = u64::MAX;
        let mut next = Vec::new();
        for prefix in &survivors {
            for v in 0..n {
                if prefix.contains(&v) {
                    continue;
                }
                let column = prefix.iter().fold(0u64, |acc, &u| (acc << 1) | g.adjacent(u, v) as u64);
                if column < best {
                    best = column;
                    next.clear();
                }
                if column == best {
                    let mut extended = prefix.clone();
                    extended.push(v);
                    next.push(extended);
                }
            }
        }
        survivors = next;
        debug_assert!(p > 0 || survivors.len() == n);
    }
    survivors.swap_remove(0)
}

fn refined_ordering(g: &Graph) -> Vec<usize> {
    let mut best: Option<(CanonicalCode, Vec<usize>)> = None;
    search(g, vec![0; g.order()], &mut best);
    best.expect("the search tree has at least one leaf").1
}

fn search(g: &Graph, mut colors: Vec<u32>, best: &mut Option<(CanonicalCode, Vec<usize>)>) {
    refine(g, &mut colors);
    let Some(cell) = target_cell(&colors) else {
        let mut ordering: Vec<usize> = (0..g.order()).collect();
        ordering.sort_by_key(|&v| colors[v]);
        let code = encode(g, &ordering);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, ordering));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // Swapping twins is an automorphism fixing everything individualised so far.
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        search(g, individualize(&colors, v), best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{cycle, disjoint_union, gnp, path, random_permutation};

    #[test]
    fn cycle_versus_two_triangles() {
        let c6 = cycle(6).unwrap();
        let c3 = cycle(3).unwrap();
        assert!(!iso(&c6, &disjoint_union(&[c3.clone(), c3]).unwrap()));
    }

    #[test]
    fn relabelled_path_is_isomorphic() {
        let p3 = path(3).unwrap();
        for perm in [[0, 1, 2], [2, 0, 1], [1, 2, 0], [0, 2, 1]] {
            assert!(iso(&p3, &p3.relabel(&perm)));
        }
    }

    #[test]
    fn labelled_four_vertex_graphs_give_eleven_codes() {
        let pairs: Vec<(usize, usize)> = (1..4).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let mut codes = std::collections::BTreeSet::new();
        for mask in 0u32..64 {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            codes.insert(canonical_form(&Graph::new(4, edges).unwrap()));
        }
        assert_eq!(codes.len(), 11);
    }

    #[test]
    fn representative_has_the_code() {
        for seed in 0..20 {
            for n in [5, 9, 14] {
                let g = gnp(n, 0.4, seed).unwrap();
                let (code, perm) = canonical_labeling(&g);
                let rep = g.relabel(&perm);
                assert_eq!(encode(&rep, &(0..n).collect::<Vec<_>>()), code);
                let h = g.relabel(&random_permutation(n, seed + 100));
                assert_eq!(canonical_form(&h), code);
            }
        }
    }

    #[test]
    fn refined_search_handles_symmetric_graphs() {
        let petersen = crate::graph::from_graph6("IheA@GUAo").unwrap();
        let relabelled = petersen.relabel(&random_permutation(10, 3));
        assert_eq!(canonical_form(&petersen), canonical_form(&relabelled));
        let c10 = cycle(10).unwrap();
        assert!(!iso(&c10, &petersen));
        let two_c5 = disjoint_union(&[cycle(5).unwrap(), cycle(5).unwrap()]).unwrap();
        assert!(!iso(&c10, &two_c5));
    }
}
