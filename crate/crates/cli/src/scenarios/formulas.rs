//! Scenarios measuring emitted sentences.

use super::{sample, Context, Outcome};
use fodepth::constructions::pad;
use fodepth::emit::{delta, generic_defining, padding_sentence, path_sentence, DeltaStyle};
use fodepth::graph::{complete, enumerate_graphs, gnp, iso, path, random_permutation, to_graph6, Graph};
use fodepth::logic::{Compiled, Formula};
use fodepth::rng::child_seed;
use fodepth::Result;
use rayon::prelude::*;
use serde::Serialize;

/// Largest order at which the generic sentence is also model-checked; its
/// n + 1 nested quantifiers make evaluation cost n^(n+1).
const GENERIC_EVALUATION_ORDER: usize = 5;

fn ceil_log2(n: usize) -> u32 {
    usize::BITS - (n.max(1) - 1).leading_zeros()
}

#[derive(Serialize)]
struct EmittedRow {
    n: usize,
    naive_depth: u32,
    naive_width: usize,
    halving_depth: u32,
    three_var_depth: u32,
    three_var_width: usize,
    generic_depth: u32,
}

pub fn emitted_metrics(ctx: &Context) -> Result<Outcome> {
    let max = ctx.config.settings.emitted_metrics.max_order;
    let mut rows = Vec::new();
    let mut wrong = Vec::new();
    let mut generic_models = Vec::new();
    for n in 1..=max {
        let naive = delta(n, DeltaStyle::Naive)?;
        let halving = delta(n, DeltaStyle::Halving)?;
        let three = delta(n, DeltaStyle::ThreeVar)?;
        let base = gnp(n, 0.5, child_seed(ctx.seed, n as u64))?;
        let generic = generic_defining(&base)?;
        let generic_path = generic_defining(&path(n)?)?;
        let row = EmittedRow {
            n,
            naive_depth: naive.depth(),
            naive_width: naive.width(),
            halving_depth: halving.depth(),
            three_var_depth: three.depth(),
            three_var_width: three.width(),
            generic_depth: generic.depth(),
        };
        let expected_three_width = if n >= 2 { 3 } else { 2 };
        if row.naive_depth != n as u32 - 1
            || row.naive_width != n + 1
            || row.halving_depth != ceil_log2(n)
            || row.three_var_depth != ceil_log2(n)
            || row.three_var_width != expected_three_width
            || row.generic_depth != n as u32 + 1
            || generic_path.depth() != n as u32 + 1
        {
            wrong.push(n);
        }
        if n <= GENERIC_EVALUATION_ORDER {
            generic_models.push((n, defines_among_relatives(&generic, &base, ctx.seed)?));
        }
        rows.push(row);
    }
    let mut out = Outcome::default();
    out.check(
        "distance and defining sentence metrics",
        wrong.is_empty(),
        format!("orders 1..={max}; mismatches at {wrong:?}"),
    );
    let failed: Vec<usize> = generic_models.iter().filter(|m| !m.1).map(|m| m.0).collect();
    out.check(
        "generic sentences hold on relabellings and fail on edits",
        failed.is_empty(),
        format!("orders 1..={GENERIC_EVALUATION_ORDER}; failures at {failed:?}"),
    );
    out.observe("rows", &rows);
    Ok(out)
}

/// `phi` holds on a relabelled copy of `g`, and fails on every single-edge
/// edit of `g` that is not isomorphic to it and on `g` plus a vertex.
fn defines_among_relatives(phi: &Formula, g: &Graph, seed: u64) -> Result<bool> {
    let compiled = Compiled::new(phi);
    let n = g.order();
    if !compiled.holds(&g.relabel(&random_permutation(n, seed)))? {
        return Ok(false);
    }
    if compiled.holds(&g.with_isolated(1))? {
        return Ok(false);
    }
    for v in 1..n {
        for u in 0..v {
            let edited = Graph::from_fn(n, |a, b| g.adjacent(a, b) != ((a, b) == (u, v) || (a, b) == (v, u)))?;
            if !iso(g, &edited) && compiled.holds(&edited)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct PaddingRow {
    base: String,
    source: &'static str,
    base_depth: u32,
    padded_depth: u32,
    expected: u32,
}

pub fn padding(ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.config.settings.padding;
    let mut bases: Vec<(Graph, Formula, &'static str)> = Vec::new();
    for &n in &cfg.base_orders {
        for g in enumerate_graphs(n)? {
            let phi = generic_defining(&g)?;
            bases.push((g, phi, "generic"));
        }
        if n >= 2 {
            bases.push((path(n)?, path_sentence(n, DeltaStyle::Halving)?, "path"));
        }
    }
    let mut rows = Vec::new();
    for (g, phi, source) in &bases {
        let padded = padding_sentence(phi)?;
        rows.push(PaddingRow {
            base: to_graph6(g),
            source,
            base_depth: phi.depth(),
            padded_depth: padded.depth(),
            expected: phi.depth().max(4) + 1,
        });
    }
    let wrong: Vec<&String> = rows.iter().filter(|r| r.padded_depth != r.expected).map(|r| &r.base).collect();

    let mut definitions = Vec::new();
    for base in [complete(1)?, path(2)?] {
        let target = pad(&base)?;
        let sentence = Compiled::new(&padding_sentence(&generic_defining(&base)?)?);
        let limit = (target.order() + 1).min(cfg.model_check_max_order);
        let mut candidates = Vec::new();
        for n in 1..=limit {
            candidates.extend(enumerate_graphs(n)?);
        }
        let errors = candidates
            .par_iter()
            .map(|h| Ok((sentence.holds(h)? != iso(h, &target)).then(|| to_graph6(h))))
            .collect::<Result<Vec<_>>>()?;
        let errors: Vec<String> = errors.into_iter().flatten().collect();
        definitions.push((to_graph6(&base), limit, candidates.len(), errors));
    }

    let mut out = Outcome::default();
    out.check(
        "padded depth is max(depth, 4) + 1",
        wrong.is_empty(),
        format!("{} base sentences; mismatches {}", rows.len(), sample(&wrong, 3)),
    );
    for (base, limit, checked, errors) in &definitions {
        out.check(
            &format!("padding sentence of {base} defines its pad"),
            errors.is_empty(),
            format!("{checked} graphs up to order {limit}; wrong on {}", sample(errors, 3)),
        );
    }
    out.observe("rows", &rows);
    Ok(out)
}
