//! Scenarios that sweep every graph (or tree) up to a small order.

use super::{sample, Context, Outcome};
use fodepth::analysis::{cw_pair, CountingWidth};
use fodepth::emit::hintikka;
use fodepth::games::{depth, pebble_depth};
use fodepth::graph::{complete, enumerate_asym_rooted_trees, enumerate_graphs, enumerate_trees, to_graph6, Graph};
use fodepth::logic::Compiled;
use fodepth::wl::{verdict, Version};
use fodepth::{GameValue, Result};
use rayon::prelude::*;
use serde::Serialize;

/// Every isomorphism class of order 1..=`max_order`.
pub(crate) fn graphs_up_to(max_order: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=max_order {
        all.extend(enumerate_graphs(n)?);
    }
    Ok(all)
}

/// Index pairs `i < j` of a list, in lexicographic order.
pub(crate) fn unordered_pairs(len: usize) -> Vec<(usize, usize)> {
    (0..len).flat_map(|i| (i + 1..len).map(move |j| (i, j))).collect()
}

pub fn oracle_triangle(ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.config.settings.oracle_triangle_n4;
    let graphs = graphs_up_to(cfg.max_order)?;
    let sentences = graphs
        .iter()
        .map(|g| (1..=cfg.max_rounds).map(|k| hintikka(g, k)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let ordered: Vec<(usize, usize)> =
        (0..graphs.len()).flat_map(|i| (0..graphs.len()).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let rows = ordered
        .par_iter()
        .map(|&(i, j)| {
            let d = depth(&graphs[i], &graphs[j])?;
            let mut bad = Vec::new();
            for (k, phi) in (1..).zip(&sentences[i]) {
                let game = d > GameValue::Finite(k);
                let model = Compiled::new(phi).holds(&graphs[j])?;
                if game != model {
                    bad.push((to_graph6(&graphs[i]), to_graph6(&graphs[j]), k, d));
                }
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?;
    let discrepancies: Vec<_> = rows.into_iter().flatten().collect();
    let self_models = graphs
        .iter()
        .zip(&sentences)
        .map(|(g, phis)| phis.iter().map(|phi| Compiled::new(phi).holds(g)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;

    let mut out = Outcome::default();
    out.observe("classes", graphs.len());
    out.observe("ordered_pairs", ordered.len());
    out.observe("max_rounds", cfg.max_rounds);
    out.check(
        "no discrepancies",
        discrepancies.is_empty(),
        format!(
            "{} of {} (pair, k) cases disagree{}",
            discrepancies.len(),
            ordered.len() * cfg.max_rounds,
            if discrepancies.is_empty() { String::new() } else { format!(": {}", sample(&discrepancies, 5)) }
        ),
    );
    out.check(
        "each Hintikka sentence holds on its own graph",
        self_models.iter().flatten().all(|&b| b),
        format!("{} sentences checked", graphs.len() * cfg.max_rounds),
    );
    Ok(out)
}

#[derive(Serialize)]
struct OrderMaximum {
    order: usize,
    pairs: usize,
    max_depth: u32,
    bound: u32,
    witness: Option<(String, String)>,
}

pub fn pvv_bound(ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.config.settings.pvv_bound_n5;
    let mut maxima = Vec::new();
    for n in 1..=cfg.max_order {
        let graphs = enumerate_graphs(n)?;
        let pairs = unordered_pairs(graphs.len());
        let values = pairs.par_iter().map(|&(i, j)| depth(&graphs[i], &graphs[j])).collect::<Result<Vec<_>>>()?;
        let best = values.iter().zip(&pairs).max_by_key(|(v, _)| **v);
        let max_depth = match best {
            Some((GameValue::Finite(v), _)) => *v,
            Some((GameValue::Infinite, _)) => u32::MAX,
            None => 0,
        };
        maxima.push(OrderMaximum {
            order: n,
            pairs: pairs.len(),
            max_depth,
            bound: (n as u32 + 3) / 2,
            witness: best.map(|(_, &(i, j))| (to_graph6(&graphs[i]), to_graph6(&graphs[j]))),
        });
    }
    let mut out = Outcome::default();
    let over: Vec<usize> = maxima.iter().filter(|m| m.max_depth > m.bound).map(|m| m.order).collect();
    out.check(
        "every pair within ⌊(n+3)/2⌋ rounds",
        over.is_empty(),
        format!("realised maxima {:?}", maxima.iter().map(|m| (m.order, m.max_depth)).collect::<Vec<_>>()),
    );
    let top = maxima.last().map_or(0, |m| m.max_depth);
    out.check(
        "maximum at the largest order",
        top <= cfg.max_observed_at_max_order,
        format!("max D(G,H) = {top} at n = {} (limit {})", cfg.max_order, cfg.max_observed_at_max_order),
    );
    out.observe("per_order", &maxima);
    Ok(out)
}

pub fn clique_depth(ctx: &Context) -> Result<Outcome> {
    let max = ctx.config.settings.clique_depth.max_order;
    let mut table = Vec::new();
    let mut wrong = Vec::new();
    for n in 1..=max {
        for m in n + 1..=max {
            let (kn, km) = (complete(n)?, complete(m)?);
            let forward = depth(&kn, &km)?;
            let backward = depth(&km, &kn)?;
            let expected = GameValue::Finite(n as u32 + 1);
            if forward != expected || backward != expected {
                wrong.push((n, m, forward, backward));
            }
            table.push((n, m, forward));
        }
    }
    let mut out = Outcome::default();
    out.check(
        "D(Kn, Km) = n + 1 in both directions",
        wrong.is_empty(),
        format!(
            "{} pairs checked{}",
            table.len(),
            if wrong.is_empty() { String::new() } else { format!("; wrong: {wrong:?}") }
        ),
    );
    out.observe("values", &table);
    Ok(out)
}

pub fn pebble_wl(ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.config.settings.pebble_wl_n5;
    let graphs = graphs_up_to(cfg.max_order)?;
    let pairs = unordered_pairs(graphs.len());
    let pebbles = cfg.dimension + 1;
    let rows = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (g, h) = (&graphs[i], &graphs[j]);
            let separates = verdict(g, h, cfg.dimension, Version::CountFree)?.separates();
            let value = pebble_depth(g, h, pebbles)?;
            let n = g.order().max(h.order()) as u32;
            let bound = n.pow(cfg.dimension as u32) + pebbles as u32 - 2;
            Ok((i, j, separates, value, bound))
        })
        .collect::<Result<Vec<_>>>()?;
    let mismatched: Vec<_> = rows
        .iter()
        .filter(|r| r.2 != r.3.is_finite())
        .map(|r| (to_graph6(&graphs[r.0]), to_graph6(&graphs[r.1]), r.2, r.3))
        .collect();
    let overruns: Vec<_> = rows
        .iter()
        .filter(|r| r.3.finite().is_some_and(|v| v > r.4))
        .map(|r| (to_graph6(&graphs[r.0]), to_graph6(&graphs[r.1]), r.3, r.4))
        .collect();
    let equivalent = rows.iter().filter(|r| !r.2).count();
    let deepest = rows.iter().filter_map(|r| r.3.finite()).max().unwrap_or(0);

    let mut out = Outcome::default();
    out.check(
        "count-free WL separates iff the pebble game is won",
        mismatched.is_empty(),
        format!("{} pairs, {} mismatches {}", rows.len(), mismatched.len(), sample(&mismatched, 5)),
    );
    out.check(
        "pebble rounds within n^2 + 1",
        overruns.is_empty(),
        format!("deepest finite value {deepest}; {} overruns {}", overruns.len(), sample(&overruns, 5)),
    );
    out.observe("pairs", rows.len());
    out.observe("indistinguishable_pairs", equivalent);
    out.observe("deepest_finite_value", deepest);
    Ok(out)
}

pub fn tree_refinement(ctx: &Context) -> Result<Outcome> {
    let max = ctx.config.settings.tree_refinement_n8.max_order;
    let mut trees = Vec::new();
    for n in 1..=max {
        trees.extend(enumerate_trees(n)?);
    }
    let pairs = unordered_pairs(trees.len());
    let rows = pairs
        .par_iter()
        .map(|&(i, j)| {
            let separates = verdict(&trees[i], &trees[j], 1, Version::Standard)?.separates();
            let cw = cw_pair(&trees[i], &trees[j])?;
            Ok((i, j, separates, cw))
        })
        .collect::<Result<Vec<_>>>()?;
    let missed: Vec<_> =
        rows.iter().filter(|r| !r.2).map(|r| (to_graph6(&trees[r.0]), to_graph6(&trees[r.1]))).collect();
    let wide: Vec<_> = rows
        .iter()
        .filter(|r| !matches!(r.3, CountingWidth::Exact(w) if w <= 2))
        .map(|r| (to_graph6(&trees[r.0]), to_graph6(&trees[r.1]), r.3))
        .collect();
    let mut out = Outcome::default();
    out.check(
        "no false isomorphism verdicts",
        missed.is_empty(),
        format!("{} trees, {} pairs, {} missed {}", trees.len(), rows.len(), missed.len(), sample(&missed, 5)),
    );
    out.check("counting width at most 2", wide.is_empty(), format!("{} violations {}", wide.len(), sample(&wide, 5)));
    out.observe("trees", trees.len());
    out.observe("pairs", rows.len());
    Ok(out)
}

pub fn enumeration_counts(ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.config.settings.enumeration_counts;
    let trees = (0..cfg.asymmetric_rooted_trees.len())
        .map(|k| enumerate_asym_rooted_trees(k, false).map(|t| t.len()))
        .collect::<Result<Vec<_>>>()?;
    let graphs =
        (1..=cfg.graph_classes.len()).map(|n| enumerate_graphs(n).map(|g| g.len())).collect::<Result<Vec<_>>>()?;
    let mut out = Outcome::default();
    out.check(
        "asymmetric rooted trees by height",
        trees == cfg.asymmetric_rooted_trees,
        format!("counted {trees:?}, expected {:?}", cfg.asymmetric_rooted_trees),
    );
    out.check(
        "graph classes by order",
        graphs == cfg.graph_classes,
        format!("counted {graphs:?}, expected {:?}", cfg.graph_classes),
    );
    out.observe("asymmetric_rooted_trees", &trees);
    out.observe("graph_classes", &graphs);
    Ok(out)
}
