//! Emitters for concrete defining formulas.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::logic::{free_vars, relativize, var, Formula, Interner, Var};

/// Largest order accepted by [`generic_defining`]; the sentence has
/// quadratic size.
pub const GENERIC_MAX_ORDER: usize = 16;
pub const HINTIKKA_MAX_ORDER: usize = 6;
pub const HINTIKKA_MAX_DEPTH: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaStyle {
    /// A chain of `n−1` intermediate vertices.
    Naive,
    /// Recursive halving with one fresh variable per recursion level.
    Halving,
    /// Recursive halving recycling the three variables `x`, `y`, `z`.
    ThreeVar,
}

pub fn indexed(prefix: &str, i: usize) -> Var {
    var(&format!("{prefix}{i}"))
}

/// `⋀_{i<j} ¬(x_i = x_j)` over the given variables, if there are at least two.
fn distinct(xs: &[Var]) -> Vec<Formula> {
    let mut out = Vec::new();
    for j in 1..xs.len() {
        for i in 0..j {
            out.push(Formula::not(Formula::eq_atom(&xs[i], &xs[j])));
        }
    }
    out
}

/// Sentence true exactly on the graphs isomorphic to `g`: there are `n`
/// distinct vertices spanning `g`, and there are no `n+1` distinct vertices.
pub fn generic_defining(g: &Graph) -> Result<Formula> {
    let n = g.order();
    if n > GENERIC_MAX_ORDER {
        return Err(Error::Resource(format!("generic defining sentence limited to order {GENERIC_MAX_ORDER}")));
    }
    let xs: Vec<Var> = (1..=n + 1).map(|i| indexed("x", i)).collect();
    let mut body = distinct(&xs[..n]);
    for j in 1..n {
        for i in 0..j {
            let atom = Formula::adj(&xs[i], &xs[j]);
            body.push(if g.adjacent(i, j) { atom } else { Formula::not(atom) });
        }
    }
    if body.is_empty() {
        body.push(Formula::eq_atom(&xs[0], &xs[0]));
    }
    let spans = Formula::exists_all(&xs[..n], Formula::and(body));
    let no_more = Formula::forall_all(&xs, Formula::not(Formula::and(distinct(&xs))));
    Ok(Formula::and(vec![spans, no_more]))
}

/// `dist(x, y) ≤ n` with free variables `x` and `y`.
pub fn delta(n: usize, style: DeltaStyle) -> Result<Formula> {
    if n == 0 {
        return Err(Error::Parameter("distance bound must be at least 1".into()));
    }
    Ok(delta_between(n, style, &var("x"), &var("y")))
}

fn within_one(a: &Var, b: &Var) -> Formula {
    Formula::or(vec![Formula::adj(a, b), Formula::eq_atom(a, b)])
}

/// Distance formula between arbitrary variables; bound 0 is equality.
pub(crate) fn delta_between(n: usize, style: DeltaStyle, a: &Var, b: &Var) -> Formula {
    match (n, style) {
        (0, _) => Formula::eq_atom(a, b),
        (1, _) => within_one(a, b),
        (_, DeltaStyle::Naive) => {
            let zs: Vec<Var> = (1..n).map(|i| indexed("z", i)).collect();
            let mut chain = vec![a.clone()];
            chain.extend(zs.iter().cloned());
            chain.push(b.clone());
            let links = chain.windows(2).map(|w| within_one(&w[0], &w[1])).collect();
            Formula::exists_all(&zs, Formula::and(links))
        }
        (_, DeltaStyle::Halving) => halving(n, a, b, 1),
        (_, DeltaStyle::ThreeVar) => three_var(n, a, b),
    }
}

fn halving(n: usize, a: &Var, b: &Var, level: usize) -> Formula {
    if n == 1 {
        return within_one(a, b);
    }
    let z = indexed("z", level);
    Formula::exists(&z, Formula::and(vec![halving(n / 2, a, &z, level + 1), halving(n.div_ceil(2), &z, b, level + 1)]))
}

fn three_var(n: usize, a: &Var, b: &Var) -> Formula {
    if n == 1 {
        return within_one(a, b);
    }
    let pool = [var("x"), var("y"), var("z")];
    let c = pool.iter().find(|v| *v != a && *v != b).expect("three names, two taken").clone();
    Formula::exists(&c, Formula::and(vec![three_var(n / 2, a, &c), three_var(n.div_ceil(2), &c, b)]))
}

/// Sentence true exactly on the path with `n` vertices: diameter `n−1`,
/// maximum degree at most 2 and some vertex of degree at most 1.
pub fn path_sentence(n: usize, style: DeltaStyle) -> Result<Formula> {
    if n < 2 {
        return Err(Error::Parameter("path sentence needs n ≥ 2".into()));
    }
    let (x, y) = (var("x"), var("y"));
    let ys: Vec<Var> = (1..=3).map(|i| indexed("y", i)).collect();
    let diameter_at_most = |d: usize| Formula::forall(&x, Formula::forall(&y, delta_between(d, style, &x, &y)));
    let neighbours = |k: usize| {
        let mut parts: Vec<Formula> = ys[..k].iter().map(|yi| Formula::adj(&x, yi)).collect();
        parts.extend(distinct(&ys[..k]));
        Formula::exists_all(&ys[..k], Formula::and(parts))
    };
    Ok(Formula::and(vec![
        diameter_at_most(n - 1),
        Formula::not(diameter_at_most(n - 2)),
        Formula::forall(&x, Formula::not(neighbours(3))),
        Formula::exists(&x, Formula::not(neighbours(2))),
    ]))
}

/// Depth-`k` sentence over `x1..xk` true exactly on the graphs that agree
/// with `g` on all sentences of quantifier depth at most `k`.
pub fn hintikka(g: &Graph, k: usize) -> Result<Formula> {
    if k == 0 {
        return Err(Error::Parameter("depth must be at least 1".into()));
    }
    if g.order() > HINTIKKA_MAX_ORDER || k > HINTIKKA_MAX_DEPTH {
        return Err(Error::Resource(format!(
            "Hintikka sentences limited to order {HINTIKKA_MAX_ORDER} and depth {HINTIKKA_MAX_DEPTH}"
        )));
    }
    let xs: Vec<Var> = (1..=k).map(|i| indexed("x", i)).collect();
    let mut table = Interner::new();
    let mut tuple = Vec::with_capacity(k);
    Ok(hintikka_rec(g, &xs, &mut tuple, &mut table))
}

fn hintikka_rec(g: &Graph, xs: &[Var], tuple: &mut Vec<usize>, table: &mut Interner) -> Formula {
    let s = tuple.len();
    if s == xs.len() {
        let mut literals = Vec::new();
        for j in 1..s {
            for i in 0..j {
                let eq = Formula::eq_atom(&xs[i], &xs[j]);
                literals.push(if tuple[i] == tuple[j] { eq } else { Formula::not(eq) });
                let adj = Formula::adj(&xs[i], &xs[j]);
                literals.push(if g.adjacent(tuple[i], tuple[j]) { adj } else { Formula::not(adj) });
            }
        }
        if literals.is_empty() {
            literals.push(Formula::eq_atom(&xs[0], &xs[0]));
        }
        let literals = literals.into_iter().map(|l| intern_tree(l, table)).collect();
        return table.intern(Formula::and(literals));
    }
    let mut children: Vec<Formula> = Vec::new();
    for a in 0..g.order() {
        tuple.push(a);
        let child = hintikka_rec(g, xs, tuple, table);
        tuple.pop();
        if !children.iter().any(|c| c.ptr_eq(&child)) {
            children.push(child);
        }
    }
    let x = &xs[s];
    let mut parts: Vec<Formula> = children.iter().map(|c| table.intern(Formula::exists(x, c.clone()))).collect();
    let covering = table.intern(Formula::or(children));
    parts.push(table.intern(Formula::forall(x, covering)));
    table.intern(Formula::and(parts))
}

fn intern_tree(f: Formula, table: &mut Interner) -> Formula {
    // Literals are at most `¬atom`; intern the atom first.
    match f.node() {
        crate::logic::Node::Not(inner) => {
            let atom = table.intern(inner.clone());
            table.intern(Formula::not(atom))
        }
        _ => table.intern(f),
    }
}

/// Depth-`k` sentence expressing the `(k−1)`-extension property.
pub fn extension_sentence(k: usize) -> Result<Formula> {
    if k < 2 {
        return Err(Error::Parameter("extension sentence needs k ≥ 2".into()));
    }
    if k > 12 {
        return Err(Error::Resource("extension sentence has 2^(k−1) conjuncts; k ≤ 12".into()));
    }
    let xs: Vec<Var> = (1..k).map(|i| indexed("x", i)).collect();
    let z = indexed("x", k);
    let mut conjuncts = Vec::new();
    for mask in 0u32..1 << (k - 1) {
        let inside = |i: usize| mask >> i & 1 == 1;
        let mut clash = Vec::new();
        for i in 0..k - 1 {
            for j in 0..k - 1 {
                if inside(i) && !inside(j) {
                    clash.push(Formula::eq_atom(&xs[i], &xs[j]));
                }
            }
        }
        let mut witness: Vec<Formula> = xs.iter().map(|x| Formula::not(Formula::eq_atom(&z, x))).collect();
        for (i, x) in xs.iter().enumerate() {
            let atom = Formula::adj(&z, x);
            witness.push(if inside(i) { atom } else { Formula::not(atom) });
        }
        clash.push(Formula::exists(&z, Formula::and(witness)));
        conjuncts.push(Formula::or(clash));
    }
    Ok(Formula::forall_all(&xs, Formula::and(conjuncts)))
}

fn fresh(base: &str, avoid: &[Var]) -> Var {
    let first = var(base);
    if !avoid.contains(&first) {
        return first;
    }
    (1..).map(|i| indexed(base, i)).find(|v| !avoid.contains(v)).expect("unbounded supply")
}

/// Given a sentence defining `G`, a sentence defining the padded graph:
/// some vertex `c` whose neighbourhood induces `G`, whose non-neighbours
/// have pairwise distinct neighbourhoods inside `N(c)`, closed under
/// removing one element.
pub fn padding_sentence(phi: &Formula) -> Result<Formula> {
    if !free_vars(phi).is_empty() {
        return Err(Error::Precondition("padding expects a sentence".into()));
    }
    let c = fresh("c", phi.variables());
    let taken = [c.clone()];
    let (x1, x2, y, z) = (fresh("u", &taken), fresh("w", &taken), fresh("y", &taken), fresh("z", &taken));
    let outside = |v: &Var| Formula::not(Formula::adj(v, &c));
    let inside_closed = Formula::forall(
        &x1,
        Formula::implies(
            outside(&x1),
            Formula::forall(&y, Formula::implies(Formula::adj(&y, &x1), Formula::adj(&y, &c))),
        ),
    );
    let separated = Formula::forall(
        &x1,
        Formula::implies(
            outside(&x1),
            Formula::forall(
                &x2,
                Formula::implies(
                    outside(&x2),
                    Formula::or(vec![
                        Formula::eq_atom(&x1, &x2),
                        Formula::exists(&y, Formula::not(Formula::iff(Formula::adj(&y, &x1), Formula::adj(&y, &x2)))),
                    ]),
                ),
            ),
        ),
    );
    let minus_one = Formula::iff(
        Formula::adj(&z, &x2),
        Formula::and(vec![Formula::adj(&z, &x1), Formula::not(Formula::eq_atom(&z, &y))]),
    );
    let downward = Formula::forall(
        &x1,
        Formula::implies(
            outside(&x1),
            Formula::forall(
                &y,
                Formula::implies(
                    Formula::adj(&y, &x1),
                    Formula::exists(&x2, Formula::and(vec![outside(&x2), Formula::forall(&z, minus_one)])),
                ),
            ),
        ),
    );
    Ok(Formula::exists(&c, Formula::and(vec![relativize(phi, &c)?, inside_closed, separated, downward])))
}
