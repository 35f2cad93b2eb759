//! Graph families with unusually short defining sentences: padding,
//! unite-and-conquer and universal asymmetric trees, plus the diverging-tree
//! predicate.

use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, disjoint_union, enumerate_asym_rooted_trees, from_graph6, rooted_code, to_graph6, Graph, RootedTree,
};
use serde::{Deserialize, Serialize};

/// Largest base order accepted by [`pad`].
pub const PAD_MAX_ORDER: usize = 16;
/// Largest radius of a universal asymmetric tree built without opting in.
pub const TREE_DEFAULT_MAX_RADIUS: usize = 4;
/// Largest radius that can be built at all (with opt-in).
pub const TREE_MAX_RADIUS: usize = 5;

/// G*: G plus one vertex v_X for every subset X ⊆ V(G), adjacent exactly to
/// the members of X. Subset vertices are numbered n + (bitmask of X), i.e.
/// in binary-counter order.
pub fn pad(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n > PAD_MAX_ORDER {
        return Err(Error::Resource(format!("padding has 2^n extra vertices; limited to n ≤ {PAD_MAX_ORDER}")));
    }
    let mut edges = g.edges();
    for mask in 0usize..1 << n {
        edges.extend((0..n).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n + mask)));
    }
    Graph::new(n + (1 << n), edges)
}

/// G_S: the complement of the disjoint union of pairwise non-isomorphic
/// graphs.
pub fn unite_conquer(members: &[Graph]) -> Result<Graph> {
    if members.len() < 2 {
        return Err(Error::Precondition("unite-and-conquer needs at least two graphs".into()));
    }
    let mut codes: Vec<_> = members.iter().map(canonical_form).collect();
    codes.sort();
    if codes.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition("unite-and-conquer members must be pairwise non-isomorphic".into()));
    }
    Ok(disjoint_union(members)?.complement())
}

/// T_k: a central vertex joined to the roots of all asymmetric rooted trees
/// of height below k. Radius 3 and 4 are always available; radius 5 (about
/// 2^16 branches) needs `allow_large`.
pub fn universal_asymmetric_tree(k: usize, allow_large: bool) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Precondition(format!("the universal asymmetric tree needs radius k ≥ 3; got {k}")));
    }
    if k > TREE_MAX_RADIUS || (k > TREE_DEFAULT_MAX_RADIUS && !allow_large) {
        return Err(Error::Resource(format!(
            "radius {k} is too large{}",
            if k <= TREE_MAX_RADIUS { " without opting in to large constructions" } else { "" }
        )));
    }
    let branches = enumerate_asym_rooted_trees(k - 1, allow_large)?;
    let refs: Vec<&RootedTree> = branches.iter().collect();
    Ok(RootedTree::join(&refs).to_graph())
}

/// Whether every vertex splits the tree into pairwise non-isomorphic rooted
/// branches.
pub fn is_diverging(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::Precondition("diverging is defined for trees only".into()));
    }
    Ok((0..t.order()).all(|w| {
        let mut codes: Vec<Vec<u8>> = t.neighbors(w).iter().map(|&u| rooted_code(t, u as usize, Some(w))).collect();
        codes.sort_unstable();
        codes.windows(2).all(|p| p[0] != p[1])
    }))
}

/// The recipe of a construction; rebuilding it yields the same graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Construction {
    Pad { base: String },
    UniteConquer { members: Vec<String> },
    UniversalAsymmetricTree { radius: usize, allow_large: bool },
}

/// A constructed graph's recipe with derivation notes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: Construction,
    pub notes: Vec<String>,
}

impl Construction {
    /// Build the graph and its provenance record. Graphs inside the recipe
    /// are graph6 strings.
    pub fn build(&self) -> Result<(Graph, Provenance)> {
        let (graph, notes) = match self {
            Construction::Pad { base } => {
                let g = from_graph6(base)?;
                let n = g.order();
                let graph = pad(&g)?;
                let notes = vec![format!(
                    "vertices 0..{n} are the base graph; vertex {n} + m stands for the subset with bitmask m"
                )];
                (graph, notes)
            }
            Construction::UniteConquer { members } => {
                let graphs = members.iter().map(|m| from_graph6(m)).collect::<Result<Vec<_>>>()?;
                let graph = unite_conquer(&graphs)?;
                let mut offset = 0;
                let notes = graphs
                    .iter()
                    .zip(members)
                    .map(|(g, code)| {
                        let note = format!("member {code} occupies vertices {offset}..{}", offset + g.order());
                        offset += g.order();
                        note
                    })
                    .collect();
                (graph, notes)
            }
            Construction::UniversalAsymmetricTree { radius, allow_large } => {
                let graph = universal_asymmetric_tree(*radius, *allow_large)?;
                let notes =
                    vec![format!("vertex 0 is the centre; {} branches of height below {radius}", graph.degree(0))];
                (graph, notes)
            }
        };
        Ok((graph, Provenance { construction: self.clone(), notes }))
    }
}

/// Convenience: the recipe for padding `g`.
pub fn pad_recipe(g: &Graph) -> Construction {
    Construction::Pad { base: to_graph6(g) }
}

/// Convenience: the recipe for uniting `members`.
pub fn unite_conquer_recipe(members: &[Graph]) -> Construction {
    Construction::UniteConquer { members: members.iter().map(to_graph6).collect() }
}
