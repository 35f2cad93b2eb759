//! Negation normal form and relativisation.

use super::measure::free_vars;
use super::{Formula, Node, Var};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Pushes negations onto atoms. Negated counting quantifiers keep their
/// negation (the language has no dual "at most" quantifier); their bodies
/// are normalised.
pub fn nnf(f: &Formula) -> Formula {
    let mut memo = HashMap::new();
    push(f, false, &mut memo)
}

fn push(f: &Formula, negate: bool, memo: &mut HashMap<(usize, bool), Formula>) -> Formula {
    if let Some(r) = memo.get(&(f.id(), negate)) {
        return r.clone();
    }
    let r = match f.node() {
        Node::Eq(..) | Node::Adj(..) => {
            if negate {
                Formula::not(f.clone())
            } else {
                f.clone()
            }
        }
        Node::Not(g) => push(g, !negate, memo),
        Node::And(cs) | Node::Or(cs) => {
            let parts = cs.iter().map(|c| push(c, negate, memo)).collect();
            if matches!(f.node(), Node::And(_)) != negate {
                Formula::and(parts)
            } else {
                Formula::or(parts)
            }
        }
        Node::Exists(x, b) => {
            let body = push(b, negate, memo);
            if negate {
                Formula::forall(x, body)
            } else {
                Formula::exists(x, body)
            }
        }
        Node::Forall(x, b) => {
            let body = push(b, negate, memo);
            if negate {
                Formula::exists(x, body)
            } else {
                Formula::forall(x, body)
            }
        }
        Node::CountExists(m, x, b) => {
            let inner = Formula::count_exists(*m, x, push(b, false, memo)).expect("threshold already valid");
            if negate {
                Formula::not(inner)
            } else {
                inner
            }
        }
    };
    memo.insert((f.id(), negate), r.clone());
    r
}

/// Restricts every quantifier to the neighbourhood of `guard`:
/// `∃x ψ ↦ ∃x (x~c ∧ ψ)` and `∀x ψ ↦ ∀x (¬x~c ∨ ψ)`.
pub fn relativize(f: &Formula, guard: &Var) -> Result<Formula> {
    if f.variables().contains(guard) {
        let role = if free_vars(f).contains(guard) { "free" } else { "bound" };
        return Err(Error::WellFormed(format!("guard `{guard}` already occurs {role} in the formula")));
    }
    let mut memo = HashMap::new();
    Ok(guarded(f, guard, &mut memo))
}

fn guarded(f: &Formula, c: &Var, memo: &mut HashMap<usize, Formula>) -> Formula {
    if let Some(r) = memo.get(&f.id()) {
        return r.clone();
    }
    let r = match f.node() {
        Node::Eq(..) | Node::Adj(..) => f.clone(),
        Node::Not(g) => Formula::not(guarded(g, c, memo)),
        Node::And(cs) => Formula::and(cs.iter().map(|g| guarded(g, c, memo)).collect()),
        Node::Or(cs) => Formula::or(cs.iter().map(|g| guarded(g, c, memo)).collect()),
        Node::Exists(x, b) => Formula::exists(x, Formula::and(vec![Formula::adj(x, c), guarded(b, c, memo)])),
        Node::Forall(x, b) => Formula::forall(x, Formula::implies(Formula::adj(x, c), guarded(b, c, memo))),
        Node::CountExists(m, x, b) => {
            Formula::count_exists(*m, x, Formula::and(vec![Formula::adj(x, c), guarded(b, c, memo)]))
                .expect("threshold already valid")
        }
    };
    memo.insert(f.id(), r.clone());
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{is_nnf, parse, var};

    #[test]
    fn de_morgan_and_quantifier_duality() {
        assert_eq!(nnf(&parse("!(x~y & x=y)").unwrap()), parse("!x~y | !x=y").unwrap());
        assert_eq!(nnf(&parse("!Ex.(x~y)").unwrap()), parse("Ax.!(x~y)").unwrap());
        assert_eq!(nnf(&parse("!!(x=y)").unwrap()), parse("x=y").unwrap());
        let counted = nnf(&parse("!E^2 x.!!(x~y)").unwrap());
        assert_eq!(counted, parse("!E^2 x.(x~y)").unwrap());
        assert!(is_nnf(&counted), "a negated counting quantifier over an NNF body is in NNF");
    }

    #[test]
    fn relativised_universal() {
        let r = relativize(&parse("Ax.(x=x)").unwrap(), &var("c")).unwrap();
        assert_eq!(r, parse("Ax.(!(x~c) | x=x)").unwrap());
        assert_eq!(r.depth(), 1);
        assert!(matches!(relativize(&parse("Ac.(c=c)").unwrap(), &var("c")), Err(Error::WellFormed(_))));
        assert!(matches!(relativize(&parse("c~c").unwrap(), &var("c")), Err(Error::WellFormed(_))));
    }
}
