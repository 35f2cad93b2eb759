//! Model checking.
//!
//! A formula is first compiled into an arena in which every variable is a
//! slot index; shared subformulas stay shared. Evaluation then runs with a
//! flat assignment array, restoring a slot after each quantifier so that
//! rebinding a variable behaves like shadowing.

use super::measure::free_vars;
use super::{Formula, Node, Var};
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashMap;

enum Op {
    Eq(usize, usize),
    Adj(usize, usize),
    Not(usize),
    And(Vec<usize>),
    Or(Vec<usize>),
    Exists(usize, usize),
    Forall(usize, usize),
    Count(u32, usize, usize),
}

pub struct Compiled {
    ops: Vec<Op>,
    root: usize,
    slots: Vec<Var>,
    free: Vec<usize>,
}

impl Compiled {
    pub fn new(f: &Formula) -> Compiled {
        let slots: Vec<Var> = f.variables().to_vec();
        let slot_of: HashMap<&Var, usize> = slots.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut ops = Vec::new();
        let mut memo = HashMap::new();
        let root = compile(f, &slot_of, &mut ops, &mut memo);
        let free = free_vars(f).iter().map(|v| slot_of[v]).collect();
        Compiled { ops, root, slots, free }
    }

    /// Evaluates with the given variable assignment; every free variable
    /// must be assigned a vertex of `g`.
    pub fn eval(&self, g: &Graph, assignment: &[(Var, usize)]) -> Result<bool> {
        let mut env = vec![usize::MAX; self.slots.len()];
        for (x, v) in assignment {
            if *v >= g.order() {
                return Err(Error::Eval(format!("vertex {v} assigned to `{x}` is outside the graph")));
            }
            if let Some(i) = self.slots.iter().position(|s| s == x) {
                env[i] = *v;
            }
        }
        if let Some(&missing) = self.free.iter().find(|&&i| env[i] == usize::MAX) {
            return Err(Error::Eval(format!("free variable `{}` is unassigned", self.slots[missing])));
        }
        Ok(self.run(self.root, g, &mut env))
    }

    /// Evaluates a sentence.
    pub fn holds(&self, g: &Graph) -> Result<bool> {
        self.eval(g, &[])
    }

    fn run(&self, i: usize, g: &Graph, env: &mut [usize]) -> bool {
        match &self.ops[i] {
            Op::Eq(a, b) => env[*a] == env[*b],
            Op::Adj(a, b) => g.adjacent(env[*a], env[*b]),
            Op::Not(c) => !self.run(*c, g, env),
            Op::And(cs) => cs.iter().all(|&c| self.run(c, g, env)),
            Op::Or(cs) => cs.iter().any(|&c| self.run(c, g, env)),
            Op::Exists(s, c) => self.some_vertex(*s, g, env, |this, env| this.run(*c, g, env)),
            Op::Forall(s, c) => !self.some_vertex(*s, g, env, |this, env| !this.run(*c, g, env)),
            Op::Count(m, s, c) => {
                let saved = env[*s];
                let mut count = 0;
                for v in 0..g.order() {
                    env[*s] = v;
                    if self.run(*c, g, env) {
                        count += 1;
                        if count >= *m {
                            break;
                        }
                    }
                }
                env[*s] = saved;
                count >= *m
            }
        }
    }

    /// Whether some vertex makes `test` true, scanning vertices in index order.
    fn some_vertex(
        &self,
        slot: usize,
        g: &Graph,
        env: &mut [usize],
        test: impl Fn(&Self, &mut [usize]) -> bool,
    ) -> bool {
        let saved = env[slot];
        let mut found = false;
        for v in 0..g.order() {
            env[slot] = v;
            if test(self, env) {
                found = true;
                break;
            }
        }
        env[slot] = saved;
        found
    }
}

fn compile(f: &Formula, slot_of: &HashMap<&Var, usize>, ops: &mut Vec<Op>, memo: &mut HashMap<usize, usize>) -> usize {
    if let Some(&i) = memo.get(&f.id()) {
        return i;
    }
    let op = match f.node() {
        Node::Eq(a, b) => Op::Eq(slot_of[a], slot_of[b]),
        Node::Adj(a, b) => Op::Adj(slot_of[a], slot_of[b]),
        Node::Not(c) => Op::Not(compile(c, slot_of, ops, memo)),
        Node::And(cs) => Op::And(cs.iter().map(|c| compile(c, slot_of, ops, memo)).collect()),
        Node::Or(cs) => Op::Or(cs.iter().map(|c| compile(c, slot_of, ops, memo)).collect()),
        Node::Exists(x, c) => Op::Exists(slot_of[x], compile(c, slot_of, ops, memo)),
        Node::Forall(x, c) => Op::Forall(slot_of[x], compile(c, slot_of, ops, memo)),
        Node::CountExists(m, x, c) => Op::Count(*m, slot_of[x], compile(c, slot_of, ops, memo)),
    };
    ops.push(op);
    let i = ops.len() - 1;
    memo.insert(f.id(), i);
    i
}

pub fn evaluate(g: &Graph, f: &Formula, assignment: &[(Var, usize)]) -> Result<bool> {
    Compiled::new(f).eval(g, assignment)
}

pub fn holds(g: &Graph, sentence: &Formula) -> Result<bool> {
    evaluate(g, sentence, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, generate::complete, generate::path};
    use crate::logic::{parse, var};

    #[test]
    fn complete_graph_sentence() {
        let f = parse("Ax.Ay.(x~y | x=y)").unwrap();
        assert!(holds(&complete(3).unwrap(), &f).unwrap());
        assert!(!holds(&path(3).unwrap(), &f).unwrap());
    }

    #[test]
    fn order_sentences() {
        for n in 1..=5u32 {
            let f = parse(&format!("E^{n} x.(x=x) & !E^{} x.(x=x)", n + 1)).unwrap();
            for m in 1..=5 {
                for g in enumerate_graphs(m).unwrap() {
                    assert_eq!(holds(&g, &f).unwrap(), m as u32 == n);
                }
            }
        }
    }

    #[test]
    fn free_variables_need_values() {
        let f = parse("Ey.(x~y)").unwrap();
        let p3 = path(3).unwrap();
        assert!(matches!(evaluate(&p3, &f, &[]), Err(Error::Eval(_))));
        assert!(evaluate(&p3, &f, &[(var("x"), 0)]).unwrap());
        assert!(matches!(evaluate(&p3, &f, &[(var("x"), 7)]), Err(Error::Eval(_))));
    }

    #[test]
    fn quantified_slot_is_restored() {
        // The first disjunct scans every vertex; `x` must be 0 again afterwards.
        let f = parse("Ex.!(x=x) | Ey.(x~y)").unwrap();
        let g = Graph::new(3, [(1, 2)]).unwrap();
        assert!(!evaluate(&g, &f, &[(var("x"), 0)]).unwrap());
        assert!(evaluate(&g, &f, &[(var("x"), 1)]).unwrap());
    }
}
