//! Immutable simple graphs.
//!
//! Adjacency is kept twice: sorted neighbour lists for iteration and, up to
//! [`DENSE_LIMIT`] vertices, one bitset row per vertex for constant-time
//! tests and word-parallel set operations. Graphs of order at most
//! [`WORD_ORDER`] fit a single machine word per row, which is what the game
//! solvers rely on.

mod automorphism;
mod canon;
mod enumerate;
pub mod generate;
mod io;
mod metrics;
pub(crate) mod refine;
mod trees;
mod twins;

pub use automorphism::{automorphism_count, automorphisms, find_isomorphism, is_asymmetric};
pub use canon::{canonical_form, canonical_labeling, iso, CanonicalCode};
pub use enumerate::{enumerate_graphs, enumerate_trees, MAX_ENUMERATION_ORDER};
pub use generate::{
    complete, cycle, disjoint_union, empty, generate, gnp, path, random_labeled_tree, random_permutation, star, Family,
};
pub use io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
pub use metrics::{metrics, ComponentType, MetricsReport};
pub use trees::{enumerate_asym_rooted_trees, rooted_code, tree_centers, tree_code, tree_separator, RootedTree};
pub use twins::{are_twins, has_twins, is_twin_free, twins};

use crate::error::{Error, Result};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

/// Largest order handled by the single-word game engines.
pub const WORD_ORDER: usize = 64;
/// Largest order for which bitset rows are materialised.
pub const DENSE_LIMIT: usize = 8192;
/// Distance sentinel for vertices in different components.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    nbrs: Vec<Vec<u32>>,
    component: Vec<u32>,
    component_count: usize,
    dist: OnceLock<Arc<Vec<u32>>>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::Parameter("a graph needs at least one vertex".into()));
        }
        let mut nbrs = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Parameter(format!("edge {u}-{v} out of range for order {n}")));
            }
            if u == v {
                return Err(Error::Parameter(format!("self-loop at vertex {u}")));
            }
            nbrs[u].push(v as u32);
            nbrs[v].push(u as u32);
        }
        Ok(Self::from_neighbour_lists(nbrs))
    }

    /// Builds a graph from a symmetric, irreflexive predicate.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges)
    }

    fn from_neighbour_lists(mut nbrs: Vec<Vec<u32>>) -> Graph {
        let n = nbrs.len();
        for list in &mut nbrs {
            list.sort_unstable();
            list.dedup();
        }
        let words = n.div_ceil(64);
        let mut rows = Vec::new();
        if n <= DENSE_LIMIT {
            rows = vec![0u64; n * words];
            for (u, list) in nbrs.iter().enumerate() {
                for &v in list {
                    rows[u * words + v as usize / 64] |= 1u64 << (v % 64);
                }
            }
        }
        let (component, component_count) = label_components(&nbrs);
        Graph { n, words, rows, nbrs, component, component_count, dist: OnceLock::new() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` and then `u`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 0..self.n {
            for &u in &self.nbrs[v] {
                if (u as usize) < v {
                    out.push((u as usize, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.nbrs.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        if self.rows.is_empty() {
            self.nbrs[u].binary_search(&(v as u32)).is_ok()
        } else {
            self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
        }
    }

    /// Bitset row of `v`; only available up to [`DENSE_LIMIT`] vertices.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Single-word neighbourhood mask; requires order ≤ [`WORD_ORDER`].
    #[inline]
    pub fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= WORD_ORDER);
        self.rows[v]
    }

    /// Mask with one bit per vertex; requires order ≤ [`WORD_ORDER`].
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn fits_word(&self) -> bool {
        self.n <= WORD_ORDER
    }

    /// Number of isolated vertices.
    pub fn isolated_count(&self) -> usize {
        self.nbrs.iter().filter(|l| l.is_empty()).count()
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Component index of `v`; components are numbered by their smallest vertex.
    pub fn component_of(&self, v: usize) -> usize {
        self.component[v] as usize
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.component_count];
        for v in 0..self.n {
            out[self.component[v] as usize].push(v);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// Row-major all-pairs distance matrix, [`UNREACHABLE`] across components.
    /// Computed by breadth-first search on first use.
    pub fn distances(&self) -> &[u32] {
        self.dist.get_or_init(|| Arc::new(all_pairs_bfs(&self.nbrs)))
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.distances()[u * self.n + v];
        (d != UNREACHABLE).then_some(d)
    }

    /// Breadth-first distances from one source.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        bfs_from(&self.nbrs, source)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut nbrs = vec![Vec::new(); self.n];
        for v in 0..self.n {
            nbrs[perm[v]] = self.nbrs[v].iter().map(|&u| perm[u as usize] as u32).collect();
        }
        Self::from_neighbour_lists(nbrs)
    }

    /// Subgraph induced on `vertices`, which become `0..vertices.len()` in order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![u32::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i as u32;
        }
        let nbrs = vertices
            .iter()
            .map(|&v| {
                self.nbrs[v]
                    .iter()
                    .filter_map(|&u| {
                        let i = index[u as usize];
                        (i != u32::MAX).then_some(i)
                    })
                    .collect()
            })
            .collect();
        Self::from_neighbour_lists(nbrs)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n;
        let nbrs = (0..n)
            .map(|v| {
                let mut it = self.nbrs[v].iter().peekable();
                let mut out = Vec::with_capacity(n - 1 - self.nbrs[v].len());
                for u in 0..n as u32 {
                    if it.peek() == Some(&&u) {
                        it.next();
                    } else if u as usize != v {
                        out.push(u);
                    }
                }
                out
            })
            .collect();
        Self::from_neighbour_lists(nbrs)
    }

    /// Vertex-disjoint union; vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n as u32;
        let mut nbrs = self.nbrs.clone();
        nbrs.extend(other.nbrs.iter().map(|l| l.iter().map(|&u| u + shift).collect()));
        Self::from_neighbour_lists(nbrs)
    }

    pub fn with_isolated(&self, extra: usize) -> Graph {
        let mut nbrs = self.nbrs.clone();
        nbrs.extend(std::iter::repeat_with(Vec::new).take(extra));
        Self::from_neighbour_lists(nbrs)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.nbrs == other.nbrs
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nbrs.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn label_components(nbrs: &[Vec<u32>]) -> (Vec<u32>, usize) {
    let n = nbrs.len();
    let mut comp = vec![u32::MAX; n];
    let mut count = 0u32;
    let mut stack = Vec::new();
    for s in 0..n {
        if comp[s] != u32::MAX {
            continue;
        }
        comp[s] = count;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &u in &nbrs[v] {
                if comp[u as usize] == u32::MAX {
                    comp[u as usize] = count;
                    stack.push(u as usize);
                }
            }
        }
        count += 1;
    }
    (comp, count as usize)
}

fn bfs_from(nbrs: &[Vec<u32>], source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; nbrs.len()];
    let mut queue = std::collections::VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        for &u in &nbrs[v] {
            if dist[u as usize] == UNREACHABLE {
                dist[u as usize] = dist[v] + 1;
                queue.push_back(u as usize);
            }
        }
    }
    dist
}

fn all_pairs_bfs(nbrs: &[Vec<u32>]) -> Vec<u32> {
    let mut out = Vec::with_capacity(nbrs.len() * nbrs.len());
    for s in 0..nbrs.len() {
        out.extend(bfs_from(nbrs, s));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_empty_order() {
        assert!(matches!(Graph::new(0, []), Err(Error::Parameter(_))));
        assert!(matches!(Graph::new(2, [(1, 1)]), Err(Error::Parameter(_))));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::Parameter(_))));
    }

    #[test]
    fn adjacency_is_symmetric_and_deduplicated() {
        let g = Graph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.adjacent(0, 1) && g.adjacent(1, 0));
        assert!(!g.adjacent(0, 2));
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn sparse_path_matches_dense_path() {
        let n = DENSE_LIMIT + 5;
        let g = Graph::new(n, (1..n).map(|v| (v - 1, v))).unwrap();
        assert!(g.rows.is_empty());
        assert!(g.adjacent(n - 2, n - 1));
        assert!(!g.adjacent(0, n - 1));
        assert_eq!(g.bfs(0)[n - 1], (n - 1) as u32);
    }

    #[test]
    fn components_and_isolated_vertices() {
        let g = Graph::new(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.component_count(), 3);
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert_eq!(g.isolated_count(), 1);
        assert_eq!(g.distance(0, 1), Some(1));
        assert_eq!(g.distance(0, 3), None);
    }

    #[test]
    fn induced_and_union() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let sub = p4.induced(&[3, 2, 0]);
        assert_eq!(sub.edges(), vec![(0, 1)]);
        let u = p4.disjoint_union(&sub);
        assert_eq!(u.order(), 7);
        assert_eq!(u.edge_count(), 4);
        assert!(u.adjacent(4, 5));
    }
}
