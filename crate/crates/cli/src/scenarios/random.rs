//! Scenarios over seeded random graphs and random sentences.

use super::{sample, Context, Outcome};
use fodepth::analysis::{
    bs_spectrum, bs_witnesses, cd_pair, clone_twin, extension_property, random_bs_sentence, two_switch_witness,
    BsSentence,
};
use fodepth::games::pebble_depth;
use fodepth::graph::{are_twins, enumerate_graphs, gnp, iso, to_graph6, Graph};
use fodepth::logic::{holds, Formula};
use fodepth::rng::{child_seed, seeded};
use fodepth::wl::{discrete_rounds, refine, Version};
use fodepth::{GameValue, Result};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Serialize)]
struct ChainRow {
    order: usize,
    switched: bool,
    first_full: Option<usize>,
    first_diag: Option<usize>,
    violations: Vec<String>,
}

pub fn diag_chain(ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.config.settings.diag_chain;
    let rows = (0..cfg.pairs)
        .into_par_iter()
        .map(|i| {
            let seed = child_seed(ctx.seed, i as u64);
            let n = cfg.min_order + (seed % (cfg.max_order - cfg.min_order + 1) as u64) as usize;
            let g = gnp(n, 0.5, child_seed(seed, 0))?;
            // Every other pair is a degree-preserving switch, when one exists,
            // so that separation happens late rather than at round 0.
            let switched = if i % 2 == 0 { two_switch_witness(&g) } else { None };
            let h = match &switched {
                Some(h) => h.clone(),
                None => gnp(n, 0.5, child_seed(seed, 1))?,
            };
            let c = refine(&g, Some(&h), cfg.dimension, Version::Standard, None)?;
            let last = c.last_round();
            let mut violations = Vec::new();
            for r in 0..=last {
                let diag = !c.diag_equal(r);
                let full = !c.full_equal(r);
                if diag && !full {
                    violations.push(format!("diag separates at round {r} but the full colouring does not"));
                }
                if full && c.diag_equal((r + 1).min(last)) {
                    violations.push(format!("full separation at round {r} without diag separation by round {}", r + 1));
                }
            }
            Ok(ChainRow {
                order: n,
                switched: switched.is_some(),
                first_full: (0..=last).find(|&r| !c.full_equal(r)),
                first_diag: (0..=last).find(|&r| !c.diag_equal(r)),
                violations,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let violations: Vec<&String> = rows.iter().flat_map(|r| &r.violations).collect();
    let mut out = Outcome::default();
    out.check(
        "diag and full separation rounds interlock",
        violations.is_empty(),
        format!("{} pairs, {} violations {}", rows.len(), violations.len(), sample(&violations, 3)),
    );
    out.observe("switched_pairs", rows.iter().filter(|r| r.switched).count());
    out.observe("late_separations", rows.iter().filter(|r| r.first_full.is_some_and(|f| f > 0)).count());
    out.observe("rows", &rows);
    Ok(out)
}

#[derive(Serialize)]
struct CountingRow {
    discrete_rounds: GameValue,
    witness: bool,
    counting_depth: Option<GameValue>,
    certified_non_isomorphic: Option<bool>,
}

pub fn random_counting_depth(ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.config.settings.random_counting_depth;
    let rows = (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let g = gnp(cfg.order, 0.5, child_seed(ctx.seed, i as u64))?;
            let witness = two_switch_witness(&g);
            let (counting_depth, certified) = match &witness {
                Some(h) => (Some(cd_pair(&g, h, 1)?), Some(!iso(&g, h))),
                None => (None, None),
            };
            Ok(CountingRow {
                discrete_rounds: discrete_rounds(&g),
                witness: witness.is_some(),
                counting_depth,
                certified_non_isomorphic: certified,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let total = rows.len() as f64;
    let split = rows.iter().filter(|r| r.discrete_rounds <= GameValue::Finite(cfg.max_discrete_rounds)).count();
    let deep = |r: &CountingRow| r.counting_depth.is_some_and(|d| d >= GameValue::Finite(cfg.min_counting_depth));
    let lower = rows.iter().filter(|r| deep(r)).count();
    let both =
        rows.iter().filter(|r| r.discrete_rounds <= GameValue::Finite(cfg.max_discrete_rounds) && deep(r)).count();
    let uncertified = rows.iter().filter(|r| r.certified_non_isomorphic == Some(false)).count();

    let mut out = Outcome::default();
    out.check(
        "two refinement rounds split most samples",
        split as f64 / total >= cfg.min_fraction,
        format!("{split}/{} samples discrete within {} rounds", rows.len(), cfg.max_discrete_rounds),
    );
    out.check(
        "2-switch witnesses need counting depth 4",
        lower as f64 / total >= cfg.min_fraction,
        format!("{lower}/{} samples have a witness with cd ≥ {}", rows.len(), cfg.min_counting_depth),
    );
    out.check(
        "both halves hold on most samples",
        both as f64 / total >= cfg.min_fraction,
        format!("{both}/{} samples (threshold {})", rows.len(), cfg.min_fraction),
    );
    out.check("every witness is non-isomorphic", uncertified == 0, format!("{uncertified} uncertified witnesses"));
    out.observe("rows", &rows);
    Ok(out)
}

pub fn extension_width(ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.config.settings.extension_width;
    let mut pool: Vec<Graph> = Vec::new();
    let mut attempts = 0;
    while pool.len() < 2 * cfg.pairs && attempts < cfg.max_attempts {
        let g = gnp(cfg.order, 0.5, child_seed(ctx.seed, attempts as u64))?;
        attempts += 1;
        if extension_property(&g, cfg.extension) && pool.last().is_none_or(|p| !iso(p, &g)) {
            pool.push(g);
        }
    }
    let rows = pool
        .par_chunks(2)
        .map(|pair| {
            let (g, h) = (&pair[0], &pair[1]);
            let two = pebble_depth(g, h, cfg.extension + 1)?;
            let three = pebble_depth(g, h, cfg.extension + 2)?;
            Ok((to_graph6(g), to_graph6(h), two, three))
        })
        .collect::<Result<Vec<_>>>()?;
    let narrow: Vec<_> = rows.iter().filter(|r| r.2.is_finite()).collect();
    let mut out = Outcome::default();
    out.check(
        "enough qualifying pairs",
        rows.len() == cfg.pairs,
        format!("{} pairs from {attempts} draws", rows.len()),
    );
    out.check(
        "width at least extension + 2",
        narrow.is_empty(),
        format!("{} pairs won with {} pebbles {}", narrow.len(), cfg.extension + 1, sample(&narrow, 3)),
    );
    out.observe("won_with_next_pebble_count", rows.iter().filter(|r| r.3.is_finite()).count());
    out.observe("pairs", &rows);
    Ok(out)
}

/// Classes of pairwise twins (including singletons), in order of their
/// smallest member.
fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut classes = Vec::new();
    for v in 0..g.order() {
        if !seen[v] {
            let class: Vec<usize> = (v..g.order()).filter(|&u| u == v || are_twins(g, u, v)).collect();
            class.iter().for_each(|&u| seen[u] = true);
            classes.push(class);
        }
    }
    classes
}

#[derive(Serialize)]
struct CloneInstance {
    sentence: String,
    model: String,
    class: Vec<usize>,
    copies: usize,
    preserved: bool,
}

pub fn bs_small_model(ctx: &Context) -> Result<Outcome> {
    let cfg = &ctx.config.settings.bs_small_model;
    let mut rng = seeded(ctx.seed);
    let sentences: Vec<Formula> = (0..cfg.sentences)
        .map(|_| random_bs_sentence(&mut rng, cfg.max_existential, cfg.max_universal, cfg.clauses))
        .collect();
    let spectra = sentences.par_iter().map(|phi| bs_spectrum(phi, cfg.max_order)).collect::<Result<Vec<_>>>()?;
    let satisfiable = spectra.iter().filter(|s| !s.members().is_empty()).count();
    let counterexamples: Vec<(String, Vec<usize>)> = spectra
        .iter()
        .filter(|s| {
            let members = s.members();
            !members.is_empty() && !members.iter().any(|&m| m <= s.existential.max(1))
        })
        .map(|s| (s.sentence.clone(), s.members()))
        .collect();

    let instances = clone_instances(ctx)?;
    let broken: Vec<&CloneInstance> = instances.iter().filter(|i| !i.preserved).collect();

    let mut out = Outcome::default();
    out.check(
        "satisfiable sentences have a model of order at most k",
        counterexamples.is_empty(),
        format!(
            "{satisfiable}/{} satisfiable up to order {}; {} counterexamples {}",
            spectra.len(),
            cfg.max_order,
            counterexamples.len(),
            sample(&counterexamples, 3)
        ),
    );
    out.check(
        "enough twin-cloning instances",
        instances.len() == cfg.clone_instances,
        format!("{} of {} instances found", instances.len(), cfg.clone_instances),
    );
    out.check(
        "twin cloning preserves truth",
        broken.is_empty(),
        format!(
            "{} instances broke {}",
            broken.len(),
            sample(&broken.iter().map(|b| &b.sentence).collect::<Vec<_>>(), 3)
        ),
    );
    out.observe("spectra", &spectra);
    out.observe("clone_instances", &instances);
    Ok(out)
}

/// Qualifying instances: a small model, a witness tuple, and a twin class
/// avoiding the witnesses with at least as many members as universal
/// variables. Each instance clones the class a random number of times.
fn clone_instances(ctx: &Context) -> Result<Vec<CloneInstance>> {
    let cfg = &ctx.config.settings.bs_small_model;
    let mut rng = seeded(child_seed(ctx.seed, 1));
    let catalogue = (1..=cfg.clone_model_max_order).map(enumerate_graphs).collect::<Result<Vec<_>>>()?;
    let mut instances = Vec::new();
    for _ in 0..cfg.max_attempts {
        if instances.len() == cfg.clone_instances {
            break;
        }
        let phi = random_bs_sentence(&mut rng, cfg.max_existential, cfg.max_universal, cfg.clauses);
        let universal = BsSentence::parse(&phi)?.universal.len();
        let copies = rng.gen_range(1..=cfg.max_clones);
        'models: for g in catalogue.iter().flatten() {
            if !holds(g, &phi)? {
                continue;
            }
            let witnesses = bs_witnesses(&phi, g)?;
            for class in twin_classes(g) {
                if class.len() < universal.max(1) {
                    continue;
                }
                if witnesses.iter().any(|w| w.iter().all(|a| !class.contains(a))) {
                    let cloned = clone_twin(g, &class, copies)?;
                    instances.push(CloneInstance {
                        sentence: phi.to_string(),
                        model: to_graph6(g),
                        class,
                        copies,
                        preserved: holds(&cloned, &phi)?,
                    });
                    break 'models;
                }
            }
        }
    }
    Ok(instances)
}
