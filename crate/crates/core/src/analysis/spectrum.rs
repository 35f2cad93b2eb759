//! Finite spectra of Bernays-Schönfinkel sentences ∃x̄ ∀ȳ ψ and twin
//! cloning.

use crate::error::{Error, Result};
use crate::graph::{are_twins, enumerate_graphs, Graph};
use crate::logic::{free_vars, holds, Formula, Node, Var};
use crate::rng::Rng;
use rand::Rng as _;
use serde::Serialize;
use std::collections::HashMap;

/// Orders up to which spectra are decided from the list of all graphs.
pub const SPECTRUM_ENUMERATION_ORDER: usize = 5;
/// Largest order decided by labelled backtracking.
pub const SPECTRUM_MAX_ORDER: usize = 8;

/// A sentence split into its existential block, universal block and
/// quantifier-free matrix.
#[derive(Debug, Clone)]
pub struct BsSentence {
    pub existential: Vec<Var>,
    pub universal: Vec<Var>,
    pub matrix: Formula,
}

impl BsSentence {
    pub fn parse(phi: &Formula) -> Result<BsSentence> {
        let not_bs = || Error::Precondition(format!("not a Bernays-Schönfinkel sentence: {phi}"));
        if !free_vars(phi).is_empty() {
            return Err(not_bs());
        }
        let mut existential = Vec::new();
        let mut universal = Vec::new();
        let mut cur = phi.clone();
        loop {
            let next = match cur.node() {
                Node::Exists(x, body) if universal.is_empty() => {
                    existential.push(x.clone());
                    body.clone()
                }
                Node::Forall(x, body) => {
                    universal.push(x.clone());
                    body.clone()
                }
                _ => break,
            };
            cur = next;
        }
        if !quantifier_free(&cur) {
            return Err(not_bs());
        }
        Ok(BsSentence { existential, universal, matrix: cur })
    }

    pub fn formula(&self) -> Formula {
        Formula::exists_all(&self.existential, Formula::forall_all(&self.universal, self.matrix.clone()))
    }

    /// Variable → slot in the combined (existential, universal) tuple; a
    /// rebound name refers to its innermost binding.
    fn slots(&self) -> HashMap<Var, usize> {
        self.existential.iter().chain(&self.universal).cloned().enumerate().map(|(i, v)| (v, i)).collect()
    }
}

fn quantifier_free(f: &Formula) -> bool {
    match f.node() {
        Node::Eq(..) | Node::Adj(..) => true,
        Node::Not(a) => quantifier_free(a),
        Node::And(parts) | Node::Or(parts) => parts.iter().all(quantifier_free),
        _ => false,
    }
}

/// Quantifier-free matrix compiled to slot indices.
enum Matrix {
    Eq(usize, usize),
    Adj(usize, usize),
    Not(Box<Matrix>),
    And(Vec<Matrix>),
    Or(Vec<Matrix>),
}

impl Matrix {
    fn compile(f: &Formula, slots: &HashMap<Var, usize>) -> Matrix {
        match f.node() {
            Node::Eq(x, y) => Matrix::Eq(slots[x], slots[y]),
            Node::Adj(x, y) => Matrix::Adj(slots[x], slots[y]),
            Node::Not(a) => Matrix::Not(Box::new(Matrix::compile(a, slots))),
            Node::And(p) => Matrix::And(p.iter().map(|a| Matrix::compile(a, slots)).collect()),
            Node::Or(p) => Matrix::Or(p.iter().map(|a| Matrix::compile(a, slots)).collect()),
            _ => unreachable!("matrix is quantifier-free"),
        }
    }

    fn eval(&self, vals: &[usize], adj: &impl Fn(usize, usize) -> bool) -> bool {
        match self {
            Matrix::Eq(a, b) => vals[*a] == vals[*b],
            Matrix::Adj(a, b) => adj(vals[*a], vals[*b]),
            Matrix::Not(m) => !m.eval(vals, adj),
            Matrix::And(p) => p.iter().all(|m| m.eval(vals, adj)),
            Matrix::Or(p) => p.iter().any(|m| m.eval(vals, adj)),
        }
    }
}

/// Membership of each order in the spectrum of a sentence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub sentence: String,
    pub existential: usize,
    pub universal: usize,
    /// `(n, has a model of order n)` for n = 1..=N.
    pub orders: Vec<(usize, bool)>,
    /// k + l.
    pub threshold_sum: u64,
    /// 2^k · 4^l.
    pub threshold_ramsey: f64,
}

impl SpectrumReport {
    pub fn members(&self) -> Vec<usize> {
        self.orders.iter().filter(|o| o.1).map(|o| o.0).collect()
    }
}

/// Spectrum of a Bernays-Schönfinkel sentence over orders 1..=max_order.
pub fn bs_spectrum(phi: &Formula, max_order: usize) -> Result<SpectrumReport> {
    let bs = BsSentence::parse(phi)?;
    if max_order > SPECTRUM_MAX_ORDER {
        return Err(Error::Resource(format!("spectra are decided up to order {SPECTRUM_MAX_ORDER}")));
    }
    let mut orders = Vec::new();
    for n in 1..=max_order {
        let member = if n <= SPECTRUM_ENUMERATION_ORDER {
            let sentence = bs.formula();
            let mut found = false;
            for g in enumerate_graphs(n)? {
                if holds(&g, &sentence)? {
                    found = true;
                    break;
                }
            }
            found
        } else {
            has_model_of_order(&bs, n)
        };
        orders.push((n, member));
    }
    let (k, l) = (bs.existential.len(), bs.universal.len());
    Ok(SpectrumReport {
        sentence: phi.to_string(),
        existential: k,
        universal: l,
        orders,
        threshold_sum: (k + l) as u64,
        threshold_ramsey: 2f64.powi(k as i32) * 4f64.powi(l as i32),
    })
}

/// Finite satisfiability, deciding only orders up to max(k, 1): a model's
/// substructure induced by the existential witnesses is again a model.
pub fn bs_satisfiable(phi: &Formula) -> Result<bool> {
    let bs = BsSentence::parse(phi)?;
    let bound = bs.existential.len().max(1);
    Ok((1..=bound).any(|n| has_model_of_order(&bs, n)))
}

/// Whether some graph of order `n` satisfies the sentence, by labelled
/// backtracking: the existential witnesses are the first vertices (in
/// first-occurrence order), edges are decided vertex by vertex, universal
/// tuples are checked as soon as all their vertices are decided, and the
/// remaining vertices are ordered by their adjacency to the witnesses.
pub fn has_model_of_order(bs: &BsSentence, n: usize) -> bool {
    let slots = bs.slots();
    let matrix = Matrix::compile(&bs.matrix, &slots);
    let k = bs.existential.len();
    let l = bs.universal.len();
    let mut witness = vec![0usize; k];
    // Restricted growth strings: witness i takes a value at most one larger
    // than the largest earlier value.
    fn assignments(
        i: usize,
        used: usize,
        n: usize,
        witness: &mut Vec<usize>,
        found: &mut dyn FnMut(&[usize], usize) -> bool,
    ) -> bool {
        if i == witness.len() {
            return found(witness, used);
        }
        for v in 0..(used + 1).min(n) {
            witness[i] = v;
            if assignments(i + 1, used.max(v + 1), n, witness, found) {
                return true;
            }
        }
        false
    }
    let mut search = |witness: &[usize], used: usize| {
        let mut state = Search { n, k, l, witness, distinct: used.max(1), matrix: &matrix, adj: vec![false; n * n] };
        state.vertex(1)
    };
    assignments(0, 0, n, &mut witness, &mut search)
}

struct Search<'a> {
    n: usize,
    k: usize,
    l: usize,
    witness: &'a [usize],
    /// Vertices 0..distinct carry the witnesses.
    distinct: usize,
    matrix: &'a Matrix,
    adj: Vec<bool>,
}

impl Search<'_> {
    /// Check all universal tuples over vertices 0..=v that use v (all tuples
    /// when v closes the witness block).
    fn universal_ok(&self, v: usize) -> bool {
        if v + 1 < self.distinct {
            return true;
        }
        let all = v + 1 == self.distinct;
        let adj = |a: usize, b: usize| self.adj[a * self.n + b];
        let mut vals: Vec<usize> = self.witness.to_vec();
        vals.resize(self.k + self.l, 0);
        let mut tuple = vec![0usize; self.l];
        loop {
            if all || tuple.contains(&v) {
                vals[self.k..].copy_from_slice(&tuple);
                if !self.matrix.eval(&vals, &adj) {
                    return false;
                }
            }
            // Next tuple over 0..=v.
            let mut i = 0;
            loop {
                if i == self.l {
                    return true;
                }
                tuple[i] += 1;
                if tuple[i] <= v {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
        }
    }

    fn pattern(&self, v: usize) -> u32 {
        (0..self.distinct).fold(0, |acc, w| acc << 1 | self.adj[v * self.n + w] as u32)
    }

    fn vertex(&mut self, v: usize) -> bool {
        if v == 1 && !self.universal_ok(0) {
            return false;
        }
        if v == self.n {
            return true;
        }
        for mask in 0u64..1 << v {
            for u in 0..v {
                let e = mask >> u & 1 == 1;
                self.adj[u * self.n + v] = e;
                self.adj[v * self.n + u] = e;
            }
            if v > self.distinct && self.pattern(v) < self.pattern(v - 1) {
                continue;
            }
            if self.universal_ok(v) && self.vertex(v + 1) {
                return true;
            }
        }
        false
    }
}

/// All existential witness tuples ā with G ⊨ ∀ȳ ψ(ā, ȳ).
pub fn bs_witnesses(phi: &Formula, g: &Graph) -> Result<Vec<Vec<usize>>> {
    let bs = BsSentence::parse(phi)?;
    let matrix = Matrix::compile(&bs.matrix, &bs.slots());
    let (k, l, n) = (bs.existential.len(), bs.universal.len(), g.order());
    let adj = |a: usize, b: usize| g.adjacent(a, b);
    let tuples = |len: usize| -> Vec<Vec<usize>> {
        (0..n.pow(len as u32))
            .map(|mut code| {
                (0..len)
                    .map(|_| {
                        let d = code % n;
                        code /= n;
                        d
                    })
                    .collect()
            })
            .collect()
    };
    let universal = tuples(l);
    Ok(tuples(k)
        .into_iter()
        .filter(|a| {
            universal.iter().all(|b| {
                let vals: Vec<usize> = a.iter().chain(b).copied().collect();
                matrix.eval(&vals, &adj)
            })
        })
        .collect())
}

/// Add `m` copies of a class of pairwise twins: each copy is a twin of the
/// class members (adjacent to the class and to the other copies exactly when
/// the class members are mutually adjacent). A singleton class is cloned
/// into non-adjacent twins.
pub fn clone_twin(g: &Graph, class: &[usize], m: usize) -> Result<Graph> {
    let n = g.order();
    if class.is_empty() || class.iter().any(|&v| v >= n) {
        return Err(Error::Precondition("twin class must be a non-empty set of vertices".into()));
    }
    let mut sorted = class.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != class.len() {
        return Err(Error::Precondition("twin class contains repeated vertices".into()));
    }
    let mutual = class.len() >= 2 && g.adjacent(class[0], class[1]);
    for (i, &u) in class.iter().enumerate() {
        for &v in &class[i + 1..] {
            if !are_twins(g, u, v) || g.adjacent(u, v) != mutual {
                return Err(Error::Precondition(format!("vertices {u} and {v} are not twins of the class")));
            }
        }
    }
    let rep = class[0];
    let mut edges = g.edges();
    for c in n..n + m {
        for v in 0..n {
            let inside = class.contains(&v);
            if (inside && mutual) || (!inside && g.adjacent(rep, v)) {
                edges.push((v, c));
            }
        }
        if mutual {
            edges.extend((n..c).map(|d| (d, c)));
        }
    }
    Graph::new(n + m, edges)
}

/// A random sentence ∃x1…∃xk ∀y1…∀yl ψ with 1 ≤ k ≤ `max_existential`,
/// 0 ≤ l ≤ `max_universal` and ψ a conjunction of `clauses` disjunctions of
/// one to three (possibly negated) equality or adjacency atoms.
pub fn random_bs_sentence(rng: &mut Rng, max_existential: usize, max_universal: usize, clauses: usize) -> Formula {
    let k = rng.gen_range(1..=max_existential.max(1));
    let l = rng.gen_range(0..=max_universal);
    let ex: Vec<Var> = (1..=k).map(|i| crate::emit::indexed("x", i)).collect();
    let un: Vec<Var> = (1..=l).map(|i| crate::emit::indexed("y", i)).collect();
    let vars: Vec<Var> = ex.iter().chain(&un).cloned().collect();
    let pick_two = |rng: &mut Rng| {
        let a = rng.gen_range(0..vars.len());
        let mut b = rng.gen_range(0..vars.len());
        if vars.len() > 1 {
            while b == a {
                b = rng.gen_range(0..vars.len());
            }
        }
        (vars[a].clone(), vars[b].clone())
    };
    let matrix = Formula::and(
        (0..clauses.max(1))
            .map(|_| {
                let width = rng.gen_range(1..=3);
                Formula::or(
                    (0..width)
                        .map(|_| {
                            let (a, b) = pick_two(rng);
                            let atom = if rng.gen_bool(0.5) { Formula::eq_atom(&a, &b) } else { Formula::adj(&a, &b) };
                            if rng.gen_bool(0.5) {
                                Formula::not(atom)
                            } else {
                                atom
                            }
                        })
                        .collect(),
                )
            })
            .collect(),
    );
    Formula::exists_all(&ex, Formula::forall_all(&un, matrix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;
    use crate::logic::parse;
    use crate::rng::seeded;

    #[test]
    fn singleton_spectrum() {
        let phi = parse("Ex.Ay.(y=x)").unwrap();
        assert_eq!(bs_spectrum(&phi, 8).unwrap().members(), vec![1]);
        assert!(bs_satisfiable(&phi).unwrap());
    }

    #[test]
    fn edge_spectrum() {
        let phi = parse("Ex.Ey.(!(x=y) & x~y)").unwrap();
        assert_eq!(bs_spectrum(&phi, 8).unwrap().members(), (2..=8).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_other_prefixes() {
        let phi = parse("Ax.Ey.(x~y)").unwrap();
        assert!(matches!(bs_spectrum(&phi, 4), Err(Error::Precondition(_))));
    }

    #[test]
    fn backtracking_agrees_with_enumeration() {
        let mut rng = seeded(11);
        for _ in 0..40 {
            let phi = random_bs_sentence(&mut rng, 3, 2, 3);
            let bs = BsSentence::parse(&phi).unwrap();
            let report = bs_spectrum(&phi, 5).unwrap();
            for (n, member) in report.orders {
                assert_eq!(has_model_of_order(&bs, n), member, "{phi} at order {n}");
            }
        }
    }

    #[test]
    fn cloning_the_square_gives_k23() {
        let k23 = clone_twin(&cycle(4).unwrap(), &[0, 2], 1).unwrap();
        assert_eq!(k23.order(), 5);
        assert_eq!(k23.edge_count(), 6);
        assert!(crate::graph::iso(&k23, &Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()));
        assert!(clone_twin(&cycle(4).unwrap(), &[0, 1], 1).is_err());
    }

    #[test]
    fn witnesses_of_an_edge() {
        let phi = parse("Ex.Ey.(x~y)").unwrap();
        assert_eq!(bs_witnesses(&phi, &cycle(3).unwrap()).unwrap().len(), 6);
    }
}
