//! First-order formulas over adjacency `~` and equality `=`, with counting
//! quantifiers `∃^m`.
//!
//! Formulas are immutable DAGs behind `Arc`s. Every node caches its
//! structural hash, quantifier depth, symbol length and variable set, so
//! exponentially shared structures (Hintikka sentences) stay cheap to
//! measure and compare.

mod eval;
mod measure;
mod parse;
pub mod random;
mod transform;

pub use eval::{evaluate, holds, Compiled};
pub use measure::{alternation, free_vars, is_nnf, measure, FormulaMetrics};
pub use parse::parse;
pub use transform::{nnf, relativize};

use crate::error::{Error, Result};
use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(Arc<str>);

impl Var {
    /// Variable names match `[a-z][a-z0-9_]*`.
    pub fn new(name: &str) -> Result<Var> {
        if is_valid_name(name) {
            Ok(Var(name.into()))
        } else {
            Err(Error::WellFormed(format!("`{name}` is not a valid variable name")))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

/// Panicking shorthand for names known to be valid.
pub fn var(name: &str) -> Var {
    Var::new(name).expect("literal variable name")
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z')) && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Node {
    Eq(Var, Var),
    Adj(Var, Var),
    Not(Formula),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Exists(Var, Formula),
    Forall(Var, Formula),
    CountExists(u32, Var, Formula),
}

struct Inner {
    node: Node,
    hash: u64,
    depth: u32,
    length: u64,
    vars: Arc<[Var]>,
}

#[derive(Clone)]
pub struct Formula(Arc<Inner>);

impl Formula {
    fn build(node: Node) -> Formula {
        let mut hasher = DefaultHasher::new();
        std::mem::discriminant(&node).hash(&mut hasher);
        let children: Vec<&Formula> = match &node {
            Node::Eq(a, b) | Node::Adj(a, b) => {
                a.hash(&mut hasher);
                b.hash(&mut hasher);
                Vec::new()
            }
            Node::Not(f) => vec![f],
            Node::And(fs) | Node::Or(fs) => fs.iter().collect(),
            Node::Exists(x, f) | Node::Forall(x, f) => {
                x.hash(&mut hasher);
                vec![f]
            }
            Node::CountExists(m, x, f) => {
                m.hash(&mut hasher);
                x.hash(&mut hasher);
                vec![f]
            }
        };
        for c in &children {
            c.0.hash.hash(&mut hasher);
        }
        let child_depth = children.iter().map(|c| c.0.depth).max().unwrap_or(0);
        let child_length = children.iter().fold(0u64, |acc, c| acc.saturating_add(c.0.length));
        let (depth, length) = match &node {
            Node::Eq(..) | Node::Adj(..) => (0, 3),
            Node::Not(_) => (child_depth, child_length.saturating_add(1)),
            Node::And(fs) | Node::Or(fs) => (child_depth, child_length.saturating_add(fs.len() as u64 + 1)),
            Node::Exists(..) | Node::Forall(..) | Node::CountExists(..) => {
                (child_depth + 1, child_length.saturating_add(2))
            }
        };
        let mut vars: Vec<Var> = children.iter().flat_map(|c| c.0.vars.iter().cloned()).collect();
        match &node {
            Node::Eq(a, b) | Node::Adj(a, b) => vars.extend([a.clone(), b.clone()]),
            Node::Exists(x, _) | Node::Forall(x, _) | Node::CountExists(_, x, _) => vars.push(x.clone()),
            _ => {}
        }
        vars.sort();
        vars.dedup();
        Formula(Arc::new(Inner { hash: hasher.finish(), depth, length, vars: vars.into(), node }))
    }

    pub fn node(&self) -> &Node {
        &self.0.node
    }

    pub fn eq_atom(x: &Var, y: &Var) -> Formula {
        Formula::build(Node::Eq(x.clone(), y.clone()))
    }

    pub fn adj(x: &Var, y: &Var) -> Formula {
        Formula::build(Node::Adj(x.clone(), y.clone()))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::build(Node::Not(f))
    }

    /// Conjunction; a single part is returned unchanged.
    ///
    /// # Panics
    /// On an empty list: there is no variable-free truth constant.
    pub fn and(mut parts: Vec<Formula>) -> Formula {
        assert!(!parts.is_empty(), "empty conjunction");
        if parts.len() == 1 {
            return parts.pop().expect("one part");
        }
        Formula::build(Node::And(parts))
    }

    /// Disjunction; a single part is returned unchanged.
    ///
    /// # Panics
    /// On an empty list.
    pub fn or(mut parts: Vec<Formula>) -> Formula {
        assert!(!parts.is_empty(), "empty disjunction");
        if parts.len() == 1 {
            return parts.pop().expect("one part");
        }
        Formula::build(Node::Or(parts))
    }

    /// `¬a ∨ b`.
    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::or(vec![Formula::not(a), b])
    }

    /// `(a ∧ b) ∨ (¬a ∧ ¬b)`.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::or(vec![
            Formula::and(vec![a.clone(), b.clone()]),
            Formula::and(vec![Formula::not(a), Formula::not(b)]),
        ])
    }

    pub fn exists(x: &Var, body: Formula) -> Formula {
        Formula::build(Node::Exists(x.clone(), body))
    }

    pub fn forall(x: &Var, body: Formula) -> Formula {
        Formula::build(Node::Forall(x.clone(), body))
    }

    pub fn count_exists(m: u32, x: &Var, body: Formula) -> Result<Formula> {
        if m == 0 {
            return Err(Error::WellFormed("counting quantifier needs m ≥ 1".into()));
        }
        Ok(Formula::build(Node::CountExists(m, x.clone(), body)))
    }

    /// `∃x1 … ∃xk body`, innermost last.
    pub fn exists_all(xs: &[Var], body: Formula) -> Formula {
        xs.iter().rev().fold(body, |acc, x| Formula::exists(x, acc))
    }

    pub fn forall_all(xs: &[Var], body: Formula) -> Formula {
        xs.iter().rev().fold(body, |acc, x| Formula::forall(x, acc))
    }

    /// Quantifier depth.
    pub fn depth(&self) -> u32 {
        self.0.depth
    }

    /// Symbol count: an atom is 3 symbols, `¬` one, an n-ary `∧`/`∨` adds
    /// n−1 connectives and a pair of parentheses, a quantifier with its
    /// variable two. Saturates at `u64::MAX`.
    pub fn length(&self) -> u64 {
        self.0.length
    }

    /// Distinct variable names, free or bound, in sorted order.
    pub fn variables(&self) -> &[Var] {
        &self.0.vars
    }

    pub fn width(&self) -> usize {
        self.0.vars.len()
    }

    pub fn ptr_eq(&self, other: &Formula) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub(crate) fn id(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self.node() {
            Node::Eq(..) | Node::Adj(..) => Vec::new(),
            Node::Not(f) | Node::Exists(_, f) | Node::Forall(_, f) | Node::CountExists(_, _, f) => vec![f],
            Node::And(fs) | Node::Or(fs) => fs.iter().collect(),
        }
    }

    /// Checks names, counting thresholds and rejects a quantifier whose body
    /// immediately rebinds the same variable (the outer binding would be
    /// vacuous). Rebinding deeper down is allowed: variable recycling is how
    /// few-variable formulas are written.
    pub fn check_well_formed(&self) -> Result<()> {
        let mut seen = HashSet::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            if !seen.insert(f.id()) {
                continue;
            }
            match f.node() {
                Node::Exists(x, body) | Node::Forall(x, body) | Node::CountExists(_, x, body) => {
                    if let Node::CountExists(0, ..) = f.node() {
                        return Err(Error::WellFormed("counting quantifier needs m ≥ 1".into()));
                    }
                    if let Node::Exists(y, _) | Node::Forall(y, _) | Node::CountExists(_, y, _) = body.node() {
                        if x == y {
                            return Err(Error::WellFormed(format!("`{x}` is quantified twice in a row")));
                        }
                    }
                }
                Node::And(fs) | Node::Or(fs) if fs.len() < 2 => {
                    return Err(Error::WellFormed("connective with fewer than two operands".into()));
                }
                _ => {}
            }
            stack.extend(f.children());
        }
        Ok(())
    }
}

impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || (self.0.hash == other.0.hash && self.0.node == other.0.node)
    }
}

impl Eq for Formula {}

impl Hash for Formula {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash.hash(state);
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::Eq(a, b) => write!(f, "({a}={b})"),
            Node::Adj(a, b) => write!(f, "({a}~{b})"),
            Node::Not(g) => write!(f, "!{g}"),
            Node::And(gs) | Node::Or(gs) => {
                let sep = if matches!(self.node(), Node::And(_)) { " & " } else { " | " };
                f.write_str("(")?;
                for (i, g) in gs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(sep)?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str(")")
            }
            Node::Exists(x, g) => write!(f, "E{x}.{g}"),
            Node::Forall(x, g) => write!(f, "A{x}.{g}"),
            Node::CountExists(m, x, g) => write!(f, "E^{m} {x}.{g}"),
        }
    }
}

/// Hash-consing table: structurally equal formulas come back as one shared
/// node.
#[derive(Default)]
pub struct Interner {
    table: HashSet<Formula>,
}

impl Interner {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, f: Formula) -> Formula {
        if let Some(existing) = self.table.get(&f) {
            return existing.clone();
        }
        self.table.insert(f.clone());
        f
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cached_metrics() {
        let (x, y) = (var("x"), var("y"));
        let f = Formula::forall(&x, Formula::forall(&y, Formula::eq_atom(&x, &y)));
        assert_eq!(f.depth(), 2);
        assert_eq!(f.length(), 7);
        assert_eq!(f.width(), 2);
        let g = Formula::and(vec![Formula::adj(&x, &y), Formula::not(Formula::eq_atom(&x, &y))]);
        assert_eq!(g.length(), 3 + 4 + 3);
    }

    #[test]
    fn structural_equality_and_interning() {
        let (x, y) = (var("x"), var("y"));
        let a = Formula::exists(&x, Formula::adj(&x, &y));
        let b = Formula::exists(&x, Formula::adj(&x, &y));
        assert!(!a.ptr_eq(&b));
        assert_eq!(a, b);
        let mut table = Interner::new();
        let a1 = table.intern(a);
        let b1 = table.intern(b);
        assert!(a1.ptr_eq(&b1));
        assert_eq!(table.len(), 1);
    }

    #[test]
    fn well_formedness() {
        let x = var("x");
        let vacuous = Formula::exists(&x, Formula::forall(&x, Formula::eq_atom(&x, &x)));
        assert!(vacuous.check_well_formed().is_err());
        assert!(Formula::count_exists(0, &x, Formula::eq_atom(&x, &x)).is_err());
        assert!(Var::new("X").is_err() && Var::new("1a").is_err() && Var::new("z_1").is_ok());
    }
}
