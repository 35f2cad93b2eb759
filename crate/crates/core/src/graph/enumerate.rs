//! Isomorphism-class enumeration of small graphs and trees.

use super::canon::{canonical_labeling, CanonicalCode};
use super::trees::tree_code;
use super::Graph;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::sync::OnceLock;

pub const MAX_ENUMERATION_ORDER: usize = 7;
const MAX_TREE_ORDER: usize = 16;

static GRAPHS: [OnceLock<Vec<Graph>>; MAX_ENUMERATION_ORDER + 1] =
    [const { OnceLock::new() }; MAX_ENUMERATION_ORDER + 1];

/// One canonical representative per isomorphism class of order `n`,
/// sorted by canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Parameter("order must be at least 1".into()));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::Resource(format!(
            "exhaustive enumeration stops at order {MAX_ENUMERATION_ORDER}; sample random graphs of order {n} instead"
        )));
    }
    Ok(classes(n).clone())
}

fn classes(n: usize) -> &'static Vec<Graph> {
    GRAPHS[n].get_or_init(|| {
        if n == 1 {
            return vec![Graph::new(1, []).expect("K1")];
        }
        // Every class of order n arises from one of order n−1 by adding a vertex.
        let mut found: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for base in classes(n - 1) {
            let edges = base.edges();
            for mask in 0u64..1 << (n - 1) {
                let extra = (0..n - 1).filter(|u| mask >> u & 1 == 1).map(|u| (u, n - 1));
                let g = Graph::new(n, edges.iter().copied().chain(extra)).expect("valid extension");
                let (code, perm) = canonical_labeling(&g);
                found.entry(code).or_insert_with(|| g.relabel(&perm));
            }
        }
        found.into_values().collect()
    })
}

/// One representative per isomorphism class of trees of order `n`,
/// sorted by unrooted tree code.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Parameter("order must be at least 1".into()));
    }
    if n > MAX_TREE_ORDER {
        return Err(Error::Resource(format!("tree enumeration stops at order {MAX_TREE_ORDER}")));
    }
    let mut level = vec![Graph::new(1, []).expect("K1")];
    for m in 2..=n {
        let mut found: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for t in &level {
            let edges = t.edges();
            for attach in 0..m - 1 {
                let g = Graph::new(m, edges.iter().copied().chain([(attach, m - 1)])).expect("leaf addition");
                found.entry(tree_code(&g).expect("still a tree")).or_insert(g);
            }
        }
        level = found.into_values().collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::automorphism::find_isomorphism;

    /// Independent oracle: cluster all labelled graphs by explicit
    /// permutation search.
    fn brute_force_classes(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let perms = permutations(n);
        let mut reps: Vec<Graph> = Vec::new();
        for mask in 0u64..1 << pairs.len() {
            let g =
                Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
            let known =
                reps.iter().any(|r| r.edge_count() == g.edge_count() && perms.iter().any(|p| g.relabel(p) == *r));
            if !known {
                reps.push(g);
            }
        }
        reps.len()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn class_counts_match_brute_force() {
        let expected = [1, 2, 4, 11, 34];
        for n in 1..=5 {
            let classes = enumerate_graphs(n).unwrap();
            assert_eq!(classes.len(), expected[n - 1]);
            if n <= 4 {
                assert_eq!(brute_force_classes(n), expected[n - 1]);
            }
        }
    }

    #[test]
    fn representatives_pairwise_non_isomorphic() {
        let classes = enumerate_graphs(5).unwrap();
        for (i, g) in classes.iter().enumerate() {
            for h in &classes[i + 1..] {
                assert!(find_isomorphism(g, h).is_none());
            }
        }
    }

    #[test]
    fn larger_counts() {
        assert_eq!(enumerate_graphs(6).unwrap().len(), 156);
        assert!(matches!(enumerate_graphs(8), Err(Error::Resource(_))));
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }
}
