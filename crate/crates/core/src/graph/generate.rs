//! Deterministic graph families and seeded random models.

use super::Graph;
use crate::error::{Error, Result};
use crate::rng;
use rand::seq::SliceRandom;
use rand::Rng;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// `K_{1,m}` with `m` leaves.
    Star(usize),
    DisjointUnion(Vec<Graph>),
    Complement(Graph),
    Gnp {
        n: usize,
        p: f64,
    },
    RandomTree(usize),
}

impl Family {
    pub fn is_random(&self) -> bool {
        matches!(self, Family::Gnp { .. } | Family::RandomTree(_))
    }
}

pub fn generate(family: &Family, seed: Option<u64>) -> Result<Graph> {
    let need_seed = || seed.ok_or_else(|| Error::Parameter("random family requires a seed".into()));
    match family {
        Family::Path(n) => path(*n),
        Family::Cycle(n) => cycle(*n),
        Family::Complete(n) => complete(*n),
        Family::Empty(n) => empty(*n),
        Family::Star(m) => star(*m),
        Family::DisjointUnion(parts) => disjoint_union(parts),
        Family::Complement(g) => Ok(g.complement()),
        Family::Gnp { n, p } => gnp(*n, *p, need_seed()?),
        Family::RandomTree(n) => random_labeled_tree(*n, need_seed()?),
    }
}

fn positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Parameter("order must be at least 1".into()))
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    positive(n)?;
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    positive(n)?;
    Graph::from_fn(n, |_, _| true)
}

pub fn empty(n: usize) -> Result<Graph> {
    positive(n)?;
    Graph::new(n, [])
}

pub fn star(leaves: usize) -> Result<Graph> {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
    let (first, rest) = parts.split_first().ok_or_else(|| Error::Parameter("disjoint union of no graphs".into()))?;
    Ok(rest.iter().fold(first.clone(), |acc, g| acc.disjoint_union(g)))
}

/// `G(n, p)`: one uniform draw per vertex pair, pairs taken in
/// lexicographic order `(0,1), (0,2), …, (n−2,n−1)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    positive(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = rng::seeded(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Uniform labelled tree via a random Prüfer sequence.
pub fn random_labeled_tree(n: usize, seed: u64) -> Result<Graph> {
    positive(n)?;
    if n <= 2 {
        return path(n);
    }
    let mut rng = rng::seeded(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let a = leaves.pop_first().expect("two leaves remain");
    let b = leaves.pop_first().expect("two leaves remain");
    edges.push((a, b));
    Graph::new(n, edges)
}

pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng::seeded(seed));
    perm
}
