//! k-dimensional Weisfeiler-Lehman refinement.
//!
//! Tuples of `V(G)^k` (and of `V(H)^k` in a pairwise run) start with the
//! colour of their isomorphism type. In every round a tuple `ū` receives the
//! pair (old colour, signature), where for `k ≥ 2` the signature collects,
//! over all vertices `w`, the vector of colours of the `k` tuples obtained
//! by substituting `w` into each position of `ū`. For `k = 1` the signature
//! collects, over all `w`, the pair (relation of `u` to `w`, colour of `w`),
//! which is colour refinement. The standard version keeps signatures as
//! multisets, the count-free version as sets. After each round colours are
//! renamed by the rank of their pair in lexicographic order, jointly over
//! both graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::value::GameValue;
use serde::Serialize;

/// Total tuples (both graphs) a run may colour.
pub const MAX_TUPLES: usize = 1 << 21;
const COLOR_BITS: u32 = 21;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Version {
    Standard,
    CountFree,
}

#[derive(Debug, Clone)]
struct Snapshot {
    g: Vec<u32>,
    h: Vec<u32>,
    classes: usize,
    classes_g: usize,
}

#[derive(Debug, Clone)]
pub struct Coloring {
    k: usize,
    version: Version,
    n_g: usize,
    n_h: usize,
    paired: bool,
    snapshots: Vec<Snapshot>,
    stable: bool,
    stab_g: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    NonIsomorphic { round: usize },
    DeclaredIsomorphic { round: usize },
}

impl Verdict {
    pub fn separates(self) -> bool {
        matches!(self, Verdict::NonIsomorphic { .. })
    }
}

fn check_dimensions(g: &Graph, h: Option<&Graph>, k: usize, version: Version) -> Result<()> {
    if k == 0 {
        return Err(Error::Parameter("dimension must be at least 1".into()));
    }
    if version == Version::CountFree && k < 2 {
        return Err(Error::Parameter("the count-free version needs k ≥ 2".into()));
    }
    if k > 6 {
        return Err(Error::Resource("dimension above 6 is not supported".into()));
    }
    let orders = [Some(g.order()), h.map(Graph::order)];
    if k >= 4 && orders.iter().flatten().any(|&n| n > 20) {
        return Err(Error::Resource(format!("{k}-dimensional refinement is limited to order 20")));
    }
    let tuples: Option<usize> =
        orders.iter().flatten().try_fold(0usize, |acc, &n| n.checked_pow(k as u32).and_then(|t| acc.checked_add(t)));
    match tuples {
        Some(t) if t <= MAX_TUPLES => Ok(()),
        _ => Err(Error::Resource(format!("tuple space exceeds {MAX_TUPLES} tuples"))),
    }
}

struct Space<'a> {
    graph: &'a Graph,
    k: usize,
    n: usize,
    powers: Vec<usize>,
}

impl<'a> Space<'a> {
    fn new(graph: &'a Graph, k: usize) -> Self {
        let n = graph.order();
        let powers = (0..k).map(|i| n.pow((k - 1 - i) as u32)).collect();
        Space { graph, k, n, powers }
    }

    fn size(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    fn coord(&self, t: usize, i: usize) -> usize {
        t / self.powers[i] % self.n
    }

    fn isotype(&self, t: usize) -> u64 {
        let mut code = 0u64;
        for j in 1..self.k {
            for i in 0..j {
                let (a, b) = (self.coord(t, i), self.coord(t, j));
                let rel = if a == b {
                    0
                } else if self.graph.adjacent(a, b) {
                    1
                } else {
                    2
                };
                code = code * 3 + rel;
            }
        }
        code
    }

    fn signature(&self, t: usize, colors: &[u32], version: Version) -> Vec<u128> {
        let mut sig: Vec<u128> = (0..self.n)
            .map(|w| {
                if self.k == 1 {
                    let rel = if w == t {
                        0u128
                    } else if self.graph.adjacent(t, w) {
                        1
                    } else {
                        2
                    };
                    (rel << COLOR_BITS) | colors[w] as u128
                } else {
                    (0..self.k).fold(0u128, |acc, i| {
                        let sub = t - self.coord(t, i) * self.powers[i] + w * self.powers[i];
                        (acc << COLOR_BITS) | colors[sub] as u128
                    })
                }
            })
            .collect();
        sig.sort_unstable();
        if version == Version::CountFree {
            sig.dedup();
        }
        sig
    }
}

/// Dense ranks of `keys`, jointly over the concatenation.
fn rank<K: Ord>(keys: &[K]) -> (Vec<u32>, usize) {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut out = vec![0u32; keys.len()];
    let mut r = 0u32;
    for (i, &idx) in order.iter().enumerate() {
        if i > 0 && keys[idx] != keys[order[i - 1]] {
            r += 1;
        }
        out[idx] = r;
    }
    (out, if keys.is_empty() { 0 } else { r as usize + 1 })
}

fn distinct_count(colors: &[u32]) -> usize {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Runs the refinement until the joint partition stops changing or
/// `max_rounds` rounds have been performed.
pub fn refine(g: &Graph, h: Option<&Graph>, k: usize, version: Version, max_rounds: Option<usize>) -> Result<Coloring> {
    check_dimensions(g, h, k, version)?;
    let sg = Space::new(g, k);
    let sh = h.map(|h| Space::new(h, k));
    let size_g = sg.size();
    let iso: Vec<u64> =
        (0..size_g).map(|t| sg.isotype(t)).chain(sh.iter().flat_map(|s| (0..s.size()).map(|t| s.isotype(t)))).collect();
    let (joint, classes) = rank(&iso);
    let split = |joint: Vec<u32>| {
        let mut g = joint;
        let h = g.split_off(size_g);
        (g, h)
    };
    let (cg, ch) = split(joint);
    let classes_g = distinct_count(&cg);
    let mut coloring = Coloring {
        k,
        version,
        n_g: g.order(),
        n_h: h.map_or(0, Graph::order),
        paired: h.is_some(),
        snapshots: vec![Snapshot { g: cg, h: ch, classes, classes_g }],
        stable: false,
        stab_g: None,
    };
    loop {
        let round = coloring.snapshots.len();
        if max_rounds.is_some_and(|m| round > m) {
            break;
        }
        let last = coloring.snapshots.last().expect("round 0 exists");
        let mut keys: Vec<(u32, Vec<u128>)> =
            (0..size_g).map(|t| (last.g[t], sg.signature(t, &last.g, version))).collect();
        if let Some(sh) = &sh {
            keys.extend((0..sh.size()).map(|t| (last.h[t], sh.signature(t, &last.h, version))));
        }
        let (joint, classes) = rank(&keys);
        let (cg, ch) = split(joint);
        let classes_g = distinct_count(&cg);
        if coloring.stab_g.is_none() && classes_g == last.classes_g {
            coloring.stab_g = Some(round);
        }
        let settled = classes == last.classes;
        coloring.snapshots.push(Snapshot { g: cg, h: ch, classes, classes_g });
        if settled {
            coloring.stable = true;
            break;
        }
    }
    Ok(coloring)
}

impl Coloring {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn version(&self) -> Version {
        self.version
    }

    /// Index of the last computed round.
    pub fn last_round(&self) -> usize {
        self.snapshots.len() - 1
    }

    /// True when the joint partition has stopped changing.
    pub fn is_stable(&self) -> bool {
        self.stable
    }

    /// First round whose partition of `V(G)^k` equals the previous one.
    pub fn stab_g(&self) -> Option<usize> {
        self.stab_g
    }

    fn snapshot(&self, r: usize) -> &Snapshot {
        assert!(r <= self.last_round() || self.stable, "round {r} was not computed");
        &self.snapshots[r.min(self.last_round())]
    }

    /// Colours of `V(G)^k` after round `r` (a stable run repeats its last
    /// round).
    pub fn colors_g(&self, r: usize) -> &[u32] {
        &self.snapshot(r).g
    }

    pub fn colors_h(&self, r: usize) -> &[u32] {
        &self.snapshot(r).h
    }

    pub fn class_count(&self, r: usize) -> usize {
        self.snapshot(r).classes
    }

    pub fn class_counts(&self) -> Vec<usize> {
        self.snapshots.iter().map(|s| s.classes).collect()
    }

    fn compare(&self, a: Vec<u32>, b: Vec<u32>) -> bool {
        let (mut a, mut b) = (a, b);
        a.sort_unstable();
        b.sort_unstable();
        if self.version == Version::CountFree {
            a.dedup();
            b.dedup();
        }
        a == b
    }

    /// Whether `G` and `H` have equal colour multisets (sets, count-free)
    /// after round `r`.
    pub fn full_equal(&self, r: usize) -> bool {
        assert!(self.paired, "comparison needs a pairwise run");
        let s = self.snapshot(r);
        self.compare(s.g.clone(), s.h.clone())
    }

    fn diagonal(&self, colors: &[u32], n: usize) -> Vec<u32> {
        (0..n).map(|u| colors[(0..self.k).map(|i| u * n.pow((self.k - 1 - i) as u32)).sum::<usize>()]).collect()
    }

    /// Colours of the diagonal tuples `(u, …, u)` of `G` after round `r`.
    pub fn diag_g(&self, r: usize) -> Vec<u32> {
        self.diagonal(&self.snapshot(r).g, self.n_g)
    }

    pub fn diag_h(&self, r: usize) -> Vec<u32> {
        self.diagonal(&self.snapshot(r).h, self.n_h)
    }

    /// Whether the diagonal colourings agree after round `r`.
    pub fn diag_equal(&self, r: usize) -> bool {
        assert!(self.paired, "comparison needs a pairwise run");
        self.compare(self.diag_g(r), self.diag_h(r))
    }
}

/// Decision with early termination: report non-isomorphism as soon as the
/// colourings differ; report isomorphism once `G`'s own partition has
/// stabilised with the colourings still equal.
pub fn verdict(g: &Graph, h: &Graph, k: usize, version: Version) -> Result<Verdict> {
    let c = refine(g, Some(h), k, version, None)?;
    let stab = c.stab_g().expect("a run to joint stability stabilises G");
    for r in 0..=stab {
        if !c.full_equal(r) {
            return Ok(Verdict::NonIsomorphic { round: r });
        }
    }
    Ok(Verdict::DeclaredIsomorphic { round: stab })
}

/// Whether the diagonal colourings agree after round `r`.
pub fn diag_compare(g: &Graph, h: &Graph, k: usize, version: Version, r: usize) -> Result<bool> {
    Ok(refine(g, Some(h), k, version, Some(r))?.diag_equal(r))
}

/// First round after which colour refinement makes every class a singleton.
pub fn discrete_rounds(g: &Graph) -> GameValue {
    let c = refine(g, None, 1, Version::Standard, None).expect("colour refinement fits any desk-scale graph");
    (0..=c.last_round())
        .find(|&r| distinct_count(c.colors_g(r)) == g.order())
        .map_or(GameValue::Infinite, |r| GameValue::Finite(r as u32))
}
