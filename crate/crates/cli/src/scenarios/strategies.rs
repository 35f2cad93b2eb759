//! Scenarios that play named Spoiler strategies against an exhaustive
//! Duplicator.

use super::exhaustive::graphs_up_to;
use super::{sample, Context, Outcome};
use fodepth::analysis::{strategy_sieve, weak_sieve as greedy_sieve};
use fodepth::games::{play, PlayOutcome, Strategy};
use fodepth::graph::{
    cycle, enumerate_graphs, has_twins, is_asymmetric, iso, metrics, path, random_labeled_tree, to_graph6, Graph,
};
use fodepth::rng::{child_seed, seeded};
use fodepth::Result;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

/// ⌈log2 d⌉ for d ≥ 1.
fn ceil_log2(d: u32) -> u32 {
    32 - (d.max(1) - 1).leading_zeros()
}

pub fn weak_sieve(ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.config.settings.weak_sieve;
    let mut out = Outcome::default();

    let exhaustive: Vec<Graph> =
        graphs_up_to(cfg.exhaustive_max_order)?.into_iter().filter(|g| !has_twins(g)).collect();
    let mut sampled: Vec<Graph> = enumerate_graphs(cfg.sampled_order)?.into_iter().filter(|g| !has_twins(g)).collect();
    let mut rng = seeded(ctx.seed);
    sampled.shuffle(&mut rng);
    sampled.truncate(cfg.samples);
    let sized = |graphs: &[Graph]| -> (Vec<(String, usize)>, usize) {
        let bad = graphs
            .par_iter()
            .filter_map(|g| {
                let report = greedy_sieve(g);
                let ok = report.is_weak_sieve && report.size <= (g.order().saturating_sub(1)) / 2;
                (!ok).then(|| (to_graph6(g), report.size))
            })
            .collect();
        let largest = graphs.iter().map(|g| greedy_sieve(g).size).max().unwrap_or(0);
        (bad, largest)
    };
    let (bad_exhaustive, largest_exhaustive) = sized(&exhaustive);
    out.check(
        "greedy weak sieve within ⌊(n−1)/2⌋, exhaustive",
        bad_exhaustive.is_empty(),
        format!(
            "{} twin-free graphs up to order {}; {} too large {}",
            exhaustive.len(),
            cfg.exhaustive_max_order,
            bad_exhaustive.len(),
            sample(&bad_exhaustive, 3)
        ),
    );
    let (bad_sampled, largest_sampled) = sized(&sampled);
    out.check(
        "greedy weak sieve within ⌊(n−1)/2⌋, sampled",
        sampled.len() == cfg.samples && bad_sampled.is_empty(),
        format!(
            "{} twin-free graphs of order {}; {} too large {}",
            sampled.len(),
            cfg.sampled_order,
            bad_sampled.len(),
            sample(&bad_sampled, 3)
        ),
    );

    let mut pairs = Vec::new();
    for n in 1..=cfg.play_max_order {
        let graphs = enumerate_graphs(n)?;
        for i in 0..graphs.len() {
            for j in 0..graphs.len() {
                if i != j {
                    pairs.push((graphs[i].clone(), graphs[j].clone()));
                }
            }
        }
    }
    let rows = pairs
        .par_iter()
        .map(|(g, h)| {
            let sieve = strategy_sieve(g)?;
            let cap = sieve.len() as u32 + cfg.endgame_rounds;
            let report = play(g, h, &Strategy::WeakSieve { sieve: sieve.clone() }, &[], cap)?;
            Ok((to_graph6(g), to_graph6(h), sieve.len(), report.outcome))
        })
        .collect::<Result<Vec<_>>>()?;
    let overruns: Vec<_> = rows.iter().filter(|r| matches!(r.3, PlayOutcome::Survived(_))).collect();
    let slowest = rows
        .iter()
        .filter_map(|r| match r.3 {
            PlayOutcome::WonIn(v) => Some(v as i64 - r.2 as i64),
            PlayOutcome::Survived(_) => None,
        })
        .max()
        .unwrap_or(0);
    out.check(
        "sieve strategy wins within |X| + 3 rounds",
        overruns.is_empty(),
        format!(
            "{} ordered pairs up to order {}; worst rounds beyond |X|: {slowest}; {} overruns {}",
            rows.len(),
            cfg.play_max_order,
            overruns.len(),
            sample(&overruns, 3)
        ),
    );
    out.observe("largest_greedy_sieve_exhaustive", largest_exhaustive);
    out.observe("largest_greedy_sieve_sampled", largest_sampled);
    out.observe("played_pairs", rows.len());
    out.observe("worst_rounds_beyond_sieve", slowest);
    Ok(out)
}

#[derive(Serialize)]
struct HalvingOrder {
    order: usize,
    seeds: usize,
    worst_extra: u32,
    overruns: usize,
}

pub fn halving(ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.config.settings.halving;
    let mut per_order = Vec::new();
    let mut overruns = Vec::new();
    for n in cfg.min_order..=cfg.max_order {
        let (p, c) = (path(n)?, cycle(n)?);
        // The cycle is vertex-transitive, so its first seed vertex is 0.
        let mut seeds = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for e in 1..n {
                    let (dp, dc) =
                        (p.distance(a, b).expect("paths are connected"), c.distance(0, e).expect("connected"));
                    if dp != dc && (dp == 1) == (dc == 1) {
                        seeds.push(([(a, 0), (b, e)], dp.min(dc)));
                    }
                }
            }
        }
        let rows = seeds
            .par_iter()
            .map(|(seed, d)| {
                let bound = ceil_log2(*d);
                let report = play(&p, &c, &Strategy::HalvingDistance, seed, bound + 2)?;
                Ok((*seed, *d, bound, report.outcome))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut worst = 0;
        let mut over = 0;
        for (seed, d, bound, outcome) in rows {
            match outcome {
                PlayOutcome::WonIn(r) if r <= bound => worst = worst.max(r),
                other => {
                    over += 1;
                    overruns.push((n, seed, d, other));
                }
            }
        }
        per_order.push(HalvingOrder { order: n, seeds: seeds.len(), worst_extra: worst, overruns: over });
    }
    let mut out = Outcome::default();
    out.check(
        "halving wins within ⌈log2 d⌉ extra moves",
        overruns.is_empty(),
        format!(
            "{} seeds over orders {}..={}; {} overruns {}",
            per_order.iter().map(|o| o.seeds).sum::<usize>(),
            cfg.min_order,
            cfg.max_order,
            overruns.len(),
            sample(&overruns, 3)
        ),
    );
    out.observe("per_order", &per_order);
    Ok(out)
}

/// A path on `order` vertices with one extra leaf hanging off `at`.
fn path_with_pendant(order: usize, at: usize) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = (1..order).map(|i| (i - 1, i)).collect();
    edges.push((at, order));
    Graph::new(order + 1, edges)
}

#[derive(Serialize)]
struct Match {
    opponent: String,
    kind: &'static str,
    outcome: PlayOutcome,
}

pub fn asymmetric_tree(ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.config.settings.asymmetric_tree;
    let tree = path_with_pendant(cfg.path_order, cfg.pendant_at)?;
    let radius = metrics(&tree).radius.unwrap_or(0);
    let diameter = metrics(&tree).diameter;
    let cap = radius + 2;

    let mut rng = seeded(ctx.seed);
    let mut opponents: Vec<(Graph, &'static str)> = Vec::new();
    let fresh = |opponents: &[(Graph, &str)], t: &Graph| !iso(&tree, t) && opponents.iter().all(|(o, _)| !iso(o, t));
    let mut draws = 0u64;
    while opponents.iter().filter(|o| o.1 == "random").count() < cfg.random_opponents && draws < 100_000 {
        let order = rng.gen_range(cfg.min_opponent_order..=cfg.max_opponent_order);
        let t = random_labeled_tree(order, child_seed(ctx.seed, draws))?;
        draws += 1;
        if fresh(&opponents, &t) {
            opponents.push((t, "random"));
        }
    }
    // Same diameter as the tree: extra leaves on inner path vertices.
    let spine = path(cfg.path_order)?;
    while opponents.iter().filter(|o| o.1 == "equal-diameter").count() < cfg.equal_diameter_opponents && draws < 200_000
    {
        draws += 1;
        let leaves = rng.gen_range(1..=cfg.max_extra_leaves);
        let mut edges = spine.edges();
        for l in 0..leaves {
            edges.push((rng.gen_range(1..cfg.path_order - 1), cfg.path_order + l));
        }
        let t = Graph::new(cfg.path_order + leaves, edges)?;
        if metrics(&t).diameter == diameter && fresh(&opponents, &t) {
            opponents.push((t, "equal-diameter"));
        }
    }

    let matches = opponents
        .par_iter()
        .map(|(t, kind)| {
            let report = play(&tree, t, &Strategy::TreeSeparator, &[], cap)?;
            Ok(Match { opponent: to_graph6(t), kind, outcome: report.outcome })
        })
        .collect::<Result<Vec<_>>>()?;
    let lost: Vec<&String> = matches
        .iter()
        .filter(|m| !matches!(m.outcome, PlayOutcome::WonIn(r) if r <= cap))
        .map(|m| &m.opponent)
        .collect();
    let worst = matches
        .iter()
        .filter_map(|m| match m.outcome {
            PlayOutcome::WonIn(r) => Some(r),
            PlayOutcome::Survived(_) => None,
        })
        .max()
        .unwrap_or(0);

    let mut out = Outcome::default();
    out.check(
        "the tree is asymmetric with the configured radius",
        is_asymmetric(&tree) && tree.is_tree() && radius as usize == (cfg.path_order - 1) / 2,
        format!("order {}, radius {radius}", tree.order()),
    );
    out.check(
        "enough opponents",
        opponents.len() >= cfg.random_opponents + cfg.equal_diameter_opponents,
        format!("{} opponents", opponents.len()),
    );
    out.check(
        "strategy wins within r + 2 rounds",
        lost.is_empty(),
        format!("worst {worst} of cap {cap}; {} failures {}", lost.len(), sample(&lost, 3)),
    );
    out.observe("tree", to_graph6(&tree));
    out.observe("matches", &matches);
    Ok(out)
}
