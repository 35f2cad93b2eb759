//! Twins, sifting and weak sieves.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;
use std::collections::HashMap;

/// Largest order for the exhaustive minimum-sieve search.
pub const MIN_SIEVE_ORDER: usize = 16;

/// Outcome of the greedy sieve construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SieveReport {
    /// The chosen set X, in the order vertices were added.
    pub sieve: Vec<usize>,
    /// The classes of vertices outside X with equal neighbourhoods in X.
    pub classes: Vec<Vec<usize>>,
    /// S(X): X together with every vertex identified by its adjacencies to X.
    pub sifted: Vec<usize>,
    /// Whether S(S(X)) is the whole vertex set.
    pub is_weak_sieve: bool,
    pub size: usize,
    /// The class count after each greedy step, starting with X = ∅.
    pub class_history: Vec<usize>,
    /// Length of the shortest prefix of `sieve` that is already a weak
    /// sieve, if any.
    pub weak_prefix: Option<usize>,
}

fn in_set(g: &Graph, set: &[usize]) -> Vec<bool> {
    let mut member = vec![false; g.order()];
    set.iter().for_each(|&x| member[x] = true);
    member
}

/// The partition of V(G)∖X by neighbourhood in X, classes ordered by their
/// smallest vertex.
pub fn similarity_classes(g: &Graph, set: &[usize]) -> Vec<Vec<usize>> {
    let member = in_set(g, set);
    let mut sorted: Vec<usize> = set.to_vec();
    sorted.sort_unstable();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_trace: HashMap<Vec<bool>, usize> = HashMap::new();
    for v in (0..g.order()).filter(|&v| !member[v]) {
        let trace: Vec<bool> = sorted.iter().map(|&x| g.adjacent(v, x)).collect();
        let next = classes.len();
        let idx = *by_trace.entry(trace).or_insert(next);
        if idx == classes.len() {
            classes.push(Vec::new());
        }
        classes[idx].push(v);
    }
    classes
}

/// S(X): the members of X and the vertices alone in their similarity class.
pub fn sift(g: &Graph, set: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = set.to_vec();
    out.extend(similarity_classes(g, set).into_iter().filter(|c| c.len() == 1).map(|c| c[0]));
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether S(S(X)) = V(G).
pub fn is_weak_sieve(g: &Graph, set: &[usize]) -> bool {
    sift(g, &sift(g, set)).len() == g.order()
}

/// Greedy construction: keep adding the vertex that increases the number of
/// similarity classes the most (ties: larger degree, then smaller index)
/// until no vertex increases it.
pub fn weak_sieve(g: &Graph) -> SieveReport {
    let mut sieve = Vec::new();
    let mut count = similarity_classes(g, &sieve).len();
    let mut history = vec![count];
    loop {
        let mut best: Option<(usize, usize)> = None;
        for u in 0..g.order() {
            if sieve.contains(&u) {
                continue;
            }
            sieve.push(u);
            let c = similarity_classes(g, &sieve).len();
            sieve.pop();
            let better = match best {
                None => true,
                Some((b, bc)) => c > bc || (c == bc && g.degree(u) > g.degree(b)),
            };
            if c > count && better {
                best = Some((u, c));
            }
        }
        let Some((u, c)) = best else { break };
        sieve.push(u);
        count = c;
        history.push(count);
    }
    let classes = similarity_classes(g, &sieve);
    let sifted = sift(g, &sieve);
    SieveReport {
        is_weak_sieve: is_weak_sieve(g, &sieve),
        size: sieve.len(),
        classes,
        sifted,
        class_history: history,
        weak_prefix: (0..=sieve.len()).find(|&i| is_weak_sieve(g, &sieve[..i])),
        sieve,
    }
}

/// A smallest weak sieve, by exhaustive search over subsets in order of
/// size (and binary-counter order within a size).
pub fn minimum_weak_sieve(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    if n > MIN_SIEVE_ORDER {
        return Err(Error::Resource(format!(
            "minimum weak sieve search is exhaustive and limited to order {MIN_SIEVE_ORDER}"
        )));
    }
    for size in 0..=n {
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize != size {
                continue;
            }
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if is_weak_sieve(g, &set) {
                return Ok(set);
            }
        }
    }
    unreachable!("all but one vertex always form a weak sieve")
}

/// The sieve used by the strategy player: the greedy one when it works,
/// otherwise a minimum one.
pub fn strategy_sieve(g: &Graph) -> Result<Vec<usize>> {
    let greedy = weak_sieve(g);
    if greedy.is_weak_sieve {
        Ok(greedy.sieve)
    } else {
        minimum_weak_sieve(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn path_on_four_vertices() {
        let report = weak_sieve(&path(4).unwrap());
        assert_eq!(report.sieve, vec![1]);
        assert_eq!(report.classes, vec![vec![0, 2], vec![3]]);
        assert_eq!(report.sifted, vec![1, 3]);
        assert!(report.is_weak_sieve);
        assert_eq!(report.class_history, vec![1, 2]);
        assert_eq!(report.weak_prefix, Some(1));
    }

    #[test]
    fn minimum_sieve_handles_twins() {
        let k3 = complete(3).unwrap();
        assert!(!weak_sieve(&k3).is_weak_sieve);
        let min = minimum_weak_sieve(&k3).unwrap();
        assert_eq!(min.len(), 2);
        assert!(is_weak_sieve(&k3, &min));
    }
}
