//! Formula metrics: length, depth, width, alternation, prefix shape.

use super::transform::nnf;
use super::{Formula, Node, Var};
use serde::Serialize;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaMetrics {
    pub length: u64,
    pub depth: u32,
    pub width: usize,
    /// Present only for negation-normal-form input without counting
    /// quantifiers.
    pub alternation: Option<u32>,
    pub prenex: bool,
    /// `(existentials, universals)` for a prenex `∃*∀*` sentence.
    pub bernays_schonfinkel: Option<(usize, usize)>,
}

pub fn measure(f: &Formula) -> FormulaMetrics {
    let alternation = if is_nnf(f) { alternation_nnf(f) } else { None };
    let (prefix, matrix) = prefix(f);
    let prenex = matrix.depth() == 0;
    let bernays_schonfinkel = bs_shape(&prefix).filter(|_| prenex && free_vars(f).is_empty());
    FormulaMetrics { length: f.length(), depth: f.depth(), width: f.width(), alternation, prenex, bernays_schonfinkel }
}

/// Alternation number after normalising to negation normal form; `None`
/// when counting quantifiers occur.
pub fn alternation(f: &Formula) -> Option<u32> {
    alternation_nnf(&nnf(f))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum QuantKind {
    Exists,
    Forall,
}

/// Leading quantifiers (kind, variable, counting threshold) and the rest.
pub(crate) fn prefix(f: &Formula) -> (Vec<(QuantKind, Var, Option<u32>)>, Formula) {
    let mut out = Vec::new();
    let mut cur = f.clone();
    loop {
        let next = match cur.node() {
            Node::Exists(x, b) => (QuantKind::Exists, x.clone(), None, b.clone()),
            Node::Forall(x, b) => (QuantKind::Forall, x.clone(), None, b.clone()),
            Node::CountExists(m, x, b) => (QuantKind::Exists, x.clone(), Some(*m), b.clone()),
            _ => return (out, cur),
        };
        out.push((next.0, next.1, next.2));
        cur = next.3;
    }
}

fn bs_shape(prefix: &[(QuantKind, Var, Option<u32>)]) -> Option<(usize, usize)> {
    if prefix.iter().any(|q| q.2.is_some()) {
        return None;
    }
    let k = prefix.iter().take_while(|q| q.0 == QuantKind::Exists).count();
    prefix[k..].iter().all(|q| q.0 == QuantKind::Forall).then_some((k, prefix.len() - k))
}

/// Whether negations sit only on atoms or on counting quantifiers.
pub fn is_nnf(f: &Formula) -> bool {
    let mut memo = HashMap::new();
    nnf_check(f, &mut memo)
}

fn nnf_check(f: &Formula, memo: &mut HashMap<usize, bool>) -> bool {
    if let Some(&b) = memo.get(&f.id()) {
        return b;
    }
    let ok = match f.node() {
        Node::Not(g) => match g.node() {
            Node::Eq(..) | Node::Adj(..) => true,
            // No dual of ∃^m exists, so a negated counting quantifier stays.
            Node::CountExists(..) => nnf_check(g, memo),
            _ => false,
        },
        _ => f.children().into_iter().all(|c| nnf_check(c, memo)),
    };
    memo.insert(f.id(), ok);
    ok
}

fn alternation_nnf(f: &Formula) -> Option<u32> {
    let mut memo = HashMap::new();
    alt(f, None, &mut memo)
}

fn alt(
    f: &Formula,
    last: Option<QuantKind>,
    memo: &mut HashMap<(usize, Option<QuantKind>), Option<u32>>,
) -> Option<u32> {
    if let Some(&r) = memo.get(&(f.id(), last)) {
        return r;
    }
    let step = |kind: QuantKind| u32::from(last.is_some_and(|l| l != kind));
    let r = match f.node() {
        Node::Eq(..) | Node::Adj(..) => Some(0),
        Node::CountExists(..) => None,
        Node::Exists(_, b) => alt(b, Some(QuantKind::Exists), memo).map(|a| a + step(QuantKind::Exists)),
        Node::Forall(_, b) => alt(b, Some(QuantKind::Forall), memo).map(|a| a + step(QuantKind::Forall)),
        Node::Not(b) => alt(b, last, memo),
        Node::And(cs) | Node::Or(cs) => {
            let mut best = 0;
            for c in cs {
                best = best.max(alt(c, last, memo)?);
            }
            Some(best)
        }
    };
    memo.insert((f.id(), last), r);
    r
}

/// Free variables in sorted order.
pub fn free_vars(f: &Formula) -> Vec<Var> {
    let mut memo = HashMap::new();
    free(f, &mut memo).as_ref().clone()
}

fn free(f: &Formula, memo: &mut HashMap<usize, std::sync::Arc<Vec<Var>>>) -> std::sync::Arc<Vec<Var>> {
    if let Some(r) = memo.get(&f.id()) {
        return r.clone();
    }
    let mut out: Vec<Var> = match f.node() {
        Node::Eq(a, b) | Node::Adj(a, b) => vec![a.clone(), b.clone()],
        Node::Exists(x, b) | Node::Forall(x, b) | Node::CountExists(_, x, b) => {
            free(b, memo).iter().filter(|v| *v != x).cloned().collect()
        }
        _ => f.children().into_iter().flat_map(|c| free(c, memo).as_ref().clone()).collect(),
    };
    out.sort();
    out.dedup();
    let r = std::sync::Arc::new(out);
    memo.insert(f.id(), r.clone());
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse;

    #[test]
    fn alternation_counts_adjacent_switches() {
        let f = parse("Ax.Ey.Az.(x~y & y~z)").unwrap();
        assert_eq!(measure(&f).alternation, Some(2));
        let g = parse("Ax.Ay.(x~y) & Ex.(x=x)").unwrap();
        assert_eq!(measure(&g).alternation, Some(0));
        // Not in NNF: absent from `measure`, available after normalisation.
        let h = parse("!Ex.Ay.(x~y)").unwrap();
        assert_eq!(measure(&h).alternation, None);
        assert_eq!(alternation(&h), Some(1));
        assert_eq!(alternation(&parse("E^2 x.(x=x)").unwrap()), None);
    }

    #[test]
    fn prefix_shapes() {
        let bs = measure(&parse("Ex.Ey.Az.(z=x | z=y)").unwrap());
        assert!(bs.prenex);
        assert_eq!(bs.bernays_schonfinkel, Some((2, 1)));
        let not_bs = measure(&parse("Ax.Ey.(x~y)").unwrap());
        assert!(not_bs.prenex);
        assert_eq!(not_bs.bernays_schonfinkel, None);
        let not_prenex = measure(&parse("Ex.(x=x) & Ay.(y=y)").unwrap());
        assert!(!not_prenex.prenex);
        let open = measure(&parse("Ex.(x~y)").unwrap());
        assert_eq!(open.bernays_schonfinkel, None);
    }

    #[test]
    fn free_variables() {
        let f = parse("Ex.(x~y & Ay.(y=z))").unwrap();
        let names: Vec<String> = free_vars(&f).iter().map(|v| v.to_string()).collect();
        assert_eq!(names, vec!["y", "z"]);
    }
}
