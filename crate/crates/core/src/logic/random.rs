//! Seeded random formulas for property tests and experiment corpora.

use super::{var, Formula, Var};
use crate::rng::Rng;
use rand::Rng as _;

/// A random formula over the given variable pool with quantifier depth at
/// most `depth`. Quantifiers never immediately rebind their own variable.
pub fn random_formula(rng: &mut Rng, pool: &[Var], depth: u32, counting: bool) -> Formula {
    build(rng, pool, depth, counting, None)
}

fn build(rng: &mut Rng, pool: &[Var], depth: u32, counting: bool, bound_here: Option<&Var>) -> Formula {
    let pick = |rng: &mut Rng| pool[rng.gen_range(0..pool.len())].clone();
    let choice = if depth == 0 { rng.gen_range(0..4) } else { rng.gen_range(0..8) };
    match choice {
        0 | 1 => {
            let (a, b) = (pick(rng), pick(rng));
            if choice == 0 {
                Formula::eq_atom(&a, &b)
            } else {
                Formula::adj(&a, &b)
            }
        }
        2 => Formula::not(build(rng, pool, depth, counting, None)),
        3 => {
            let parts = (0..rng.gen_range(2..=3)).map(|_| build(rng, pool, depth.saturating_sub(1), counting, None));
            let parts: Vec<Formula> = parts.collect();
            if rng.gen_bool(0.5) {
                Formula::and(parts)
            } else {
                Formula::or(parts)
            }
        }
        _ => {
            let mut x = pick(rng);
            if Some(&x) == bound_here {
                x = pool.iter().find(|v| Some(*v) != bound_here).cloned().unwrap_or_else(|| var("q"));
            }
            let body = build(rng, pool, depth - 1, counting, Some(&x));
            match rng.gen_range(0..if counting { 3 } else { 2 }) {
                0 => Formula::exists(&x, body),
                1 => Formula::forall(&x, body),
                _ => Formula::count_exists(rng.gen_range(1..=3), &x, body).expect("m ≥ 1"),
            }
        }
    }
}

/// A random sentence: `random_formula` closed by existential quantifiers
/// over its free variables.
pub fn random_sentence(rng: &mut Rng, pool: &[Var], depth: u32, counting: bool) -> Formula {
    let f = random_formula(rng, pool, depth, counting);
    let free = super::free_vars(&f);
    let closed = Formula::exists_all(&free, f);
    if closed.check_well_formed().is_ok() {
        closed
    } else {
        random_sentence(rng, pool, depth, counting)
    }
}

pub fn pool(names: &[&str]) -> Vec<Var> {
    names.iter().map(|n| var(n)).collect()
}
