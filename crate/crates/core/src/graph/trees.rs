//! Tree utilities: rooted canonical codes, separators and asymmetric rooted
//! trees.

use super::Graph;
use crate::error::{Error, Result};

/// Canonical parenthesis code of the subtree hanging from `root` when the
/// edge to `parent` is removed. Equal codes iff isomorphic rooted trees.
pub fn rooted_code(g: &Graph, root: usize, parent: Option<usize>) -> Vec<u8> {
    // Iterative post-order so that long paths do not exhaust the stack.
    let mut order = Vec::new();
    let mut stack = vec![(root, parent)];
    while let Some((v, p)) = stack.pop() {
        order.push((v, p));
        for &u in g.neighbors(v) {
            if Some(u as usize) != p {
                stack.push((u as usize, Some(v)));
            }
        }
    }
    let mut codes: std::collections::HashMap<usize, Vec<u8>> = Default::default();
    for &(v, p) in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| Some(u as usize) != p)
            .map(|&u| codes.remove(&(u as usize)).expect("children are coded first"))
            .collect();
        children.sort_unstable();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        children.iter().for_each(|c| code.extend_from_slice(c));
        code.push(b')');
        codes.insert(v, code);
    }
    codes.remove(&root).expect("root is coded")
}

/// Vertices of minimum eccentricity (one or two for a tree).
pub fn tree_centers(g: &Graph) -> Vec<usize> {
    let ecc: Vec<u32> = (0..g.order()).map(|v| g.bfs(v).into_iter().max().unwrap_or(0)).collect();
    let radius = *ecc.iter().min().expect("graphs are non-empty");
    (0..g.order()).filter(|&v| ecc[v] == radius).collect()
}

/// Unrooted canonical code: the least rooted code over the centres.
pub fn tree_code(g: &Graph) -> Result<Vec<u8>> {
    require_tree(g)?;
    Ok(tree_centers(g).into_iter().map(|c| rooted_code(g, c, None)).min().expect("a tree has a centre"))
}

pub(crate) fn require_tree(g: &Graph) -> Result<()> {
    if g.is_tree() {
        Ok(())
    } else {
        Err(Error::Domain("input is not a tree".into()))
    }
}

/// A vertex whose removal leaves components of at most ⌊n/2⌋ vertices
/// (the smallest such index).
pub fn tree_separator(g: &Graph) -> Result<usize> {
    require_tree(g)?;
    let n = g.order();
    let (order, parent) = dfs_order(g, 0);
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            size[p] += size[v];
        }
    }
    let largest_branch = |v: usize| {
        let below = g
            .neighbors(v)
            .iter()
            .filter(|&&u| parent[u as usize] == Some(v))
            .map(|&u| size[u as usize])
            .max()
            .unwrap_or(0);
        below.max(n - size[v])
    };
    Ok((0..n).find(|&v| largest_branch(v) <= n / 2).expect("every tree has a centroid"))
}

fn dfs_order(g: &Graph, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut parent = vec![None; g.order()];
    let mut seen = vec![false; g.order()];
    let mut order = Vec::with_capacity(g.order());
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in g.neighbors(v) {
            let u = u as usize;
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(v);
                stack.push(u);
            }
        }
    }
    (order, parent)
}

/// A rooted tree on `0..size`, rooted at 0, stored as a parent array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
}

impl RootedTree {
    pub fn single() -> Self {
        RootedTree { parent: vec![None] }
    }

    /// A new root whose children are the roots of `branches`.
    pub fn join(branches: &[&RootedTree]) -> Self {
        let mut parent = vec![None];
        for b in branches {
            let shift = parent.len();
            parent.extend(b.parent.iter().map(|p| Some(p.map_or(0, |q| q + shift))));
        }
        RootedTree { parent }
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Length of the longest root-to-leaf path.
    pub fn height(&self) -> usize {
        let mut depth = vec![0usize; self.size()];
        for v in 1..self.size() {
            // Parents always precede their children.
            depth[v] = depth[self.parent[v].expect("non-root has a parent")] + 1;
        }
        depth.into_iter().max().unwrap_or(0)
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.size(), (1..self.size()).map(|v| (self.parent[v].expect("non-root"), v)))
            .expect("a parent array describes a valid tree")
    }

    pub fn code(&self) -> Vec<u8> {
        rooted_code(&self.to_graph(), 0, None)
    }
}

/// All asymmetric rooted trees of height at most `k`, built as sets of
/// distinct smaller ones. Heights up to 3 are always allowed; height 4
/// (65 536 trees) needs `allow_large`.
pub fn enumerate_asym_rooted_trees(k: usize, allow_large: bool) -> Result<Vec<RootedTree>> {
    if k >= 5 || (k == 4 && !allow_large) {
        return Err(Error::Resource(format!(
            "asymmetric rooted trees of height ≤ {k} are too many to list{}",
            if k == 4 { " without the large-output flag" } else { "" }
        )));
    }
    let mut level = vec![RootedTree::single()];
    for _ in 0..k {
        let m = level.len();
        level = (0u64..1 << m)
            .map(|mask| {
                let branches: Vec<&RootedTree> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| &level[i]).collect();
                RootedTree::join(&branches)
            })
            .collect();
    }
    Ok(level)
}
