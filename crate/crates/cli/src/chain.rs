//! Iterated unite-and-conquer.
//!
//! Level 0 is a class C of order-n graphs of diameter 2 with small depth.
//! Level i+1 holds G_S = complement(⊔S) for subsets S of level i with
//! |S| = |C|/2. Every G_S has diameter 2, so the step can be repeated, and the
//! depth bound grows by 3 per level. Depth over all orders is not computable
//! at desk scale, so level 0 is filtered by identification depth, which is
//! the maximum depth against graphs of the same order.

use fodepth::analysis::{identification, Metric};
use fodepth::constructions::{unite_conquer, unite_conquer_recipe, Provenance};
use fodepth::games::depth;
use fodepth::graph::{enumerate_graphs, metrics, to_graph6, Graph};
use fodepth::{Error, GameValue};
use itertools::Itertools;
use serde::Serialize;

/// Depth added by one unite-and-conquer step.
pub const STEP_DEPTH: u32 = 3;

#[derive(Debug, Clone)]
pub struct ChainParams {
    /// Order of the level-0 graphs.
    pub order: usize,
    /// Largest admitted identification depth at level 0. Defaults to the
    /// largest d with 2^d < n.
    pub max_depth: Option<u32>,
    /// Number of unite-and-conquer steps.
    pub levels: usize,
    /// Members kept per level; subsets are taken in lexicographic order.
    pub class_limit: usize,
    /// Member pairs per level whose depth is checked against the bound.
    pub check_pairs: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairCheck {
    pub first: usize,
    pub second: usize,
    pub depth: GameValue,
    pub within_bound: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainLevel {
    pub level: usize,
    pub member_order: usize,
    pub class_size: usize,
    /// |S| used to build the next level (half the class, rounded down).
    pub subset_size: usize,
    /// Bound on the depth of every member: measured at level 0, derived
    /// (+3 per step) above.
    pub depth_bound: u32,
    pub all_diameter_two: bool,
    pub pair_checks: Vec<PairCheck>,
    /// Pairs left unchecked because the game exceeded resource limits.
    pub pairs_refused: usize,
    pub members: Vec<String>,
    /// Recipe of the first member (levels ≥ 1).
    pub provenance: Option<Provenance>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    pub order: usize,
    pub depth_threshold: u32,
    /// Order-n graphs of diameter 2 before the depth filter.
    pub diameter_two_candidates: usize,
    pub levels: Vec<ChainLevel>,
    pub notes: Vec<String>,
}

impl ChainReport {
    /// True when every level consists of diameter-2 graphs and every checked
    /// pair respects the depth bound.
    pub fn consistent(&self) -> bool {
        self.levels.iter().all(|l| l.all_diameter_two && l.pair_checks.iter().all(|p| p.within_bound))
    }
}

fn default_threshold(n: usize) -> u32 {
    (0..).take_while(|&d: &u32| 1usize.checked_shl(d).is_some_and(|p| p < n)).last().unwrap_or(0)
}

const FILTER_NOTE: &str = "level 0 admits graphs by identification depth (maximum over same-order graphs) \
     in place of depth over all orders";

fn check_level(members: &[Graph], bound: u32, pairs: usize) -> Result<(Vec<PairCheck>, usize), Error> {
    let mut checks = Vec::new();
    let mut refused = 0;
    for (i, j) in (0..members.len()).tuple_combinations().take(pairs) {
        match depth(&members[i], &members[j]) {
            Ok(d) => {
                checks.push(PairCheck { first: i, second: j, depth: d, within_bound: d <= GameValue::Finite(bound) })
            }
            Err(e) if e.is_resource() => refused += 1,
            Err(e) => return Err(e),
        }
    }
    Ok((checks, refused))
}

fn level_record(
    level: usize,
    members: &[Graph],
    bound: u32,
    params: &ChainParams,
    provenance: Option<Provenance>,
) -> Result<ChainLevel, Error> {
    let (pair_checks, pairs_refused) = check_level(members, bound, params.check_pairs)?;
    Ok(ChainLevel {
        level,
        member_order: members.first().map_or(0, Graph::order),
        class_size: members.len(),
        subset_size: members.len() / 2,
        depth_bound: bound,
        all_diameter_two: members.iter().all(|g| metrics(g).diameter == Some(2)),
        pair_checks,
        pairs_refused,
        members: members.iter().map(to_graph6).collect(),
        provenance,
    })
}

pub fn unite_conquer_chain(params: &ChainParams) -> Result<ChainReport, Error> {
    if params.class_limit < 4 {
        return Err(Error::Parameter("class limit must be at least 4 so that |S| ≥ 2".into()));
    }
    let threshold = params.max_depth.unwrap_or_else(|| default_threshold(params.order));
    let candidates: Vec<Graph> =
        enumerate_graphs(params.order)?.into_iter().filter(|g| metrics(g).diameter == Some(2)).collect();
    let mut class = Vec::new();
    let mut measured = 0;
    for g in &candidates {
        let value = identification(g, Metric::Depth)?.value;
        if value <= GameValue::Finite(threshold) {
            measured = measured.max(value.finite().expect("same-order graphs are separable"));
            class.push(g.clone());
        }
    }
    let mut notes = vec![FILTER_NOTE.to_string()];
    if params.max_depth.is_none() {
        notes.push(format!("threshold {threshold} is the largest d with 2^d < {}", params.order));
    }
    if class.len() % 2 == 1 {
        class.pop();
        notes.push("dropped the last level-0 graph so that |C| is even".into());
    }
    class.truncate(params.class_limit);
    let mut levels = vec![level_record(0, &class, measured, params, None)?];
    let mut bound = measured;
    for level in 1..=params.levels {
        let half = class.len() / 2;
        if half < 2 {
            notes.push(format!("stopped before level {level}: a class of {} graphs gives |S| < 2", class.len()));
            break;
        }
        let mut next = Vec::new();
        let mut provenance = None;
        for subset in class.iter().cloned().combinations(half).take(params.class_limit) {
            let g = unite_conquer(&subset)?;
            if provenance.is_none() {
                let mut notes = vec![format!("level {level}: |S| = {half} of a class of {}", class.len())];
                notes.push(FILTER_NOTE.to_string());
                provenance = Some(Provenance { construction: unite_conquer_recipe(&subset), notes });
            }
            next.push(g);
        }
        if next.len() % 2 == 1 {
            next.pop();
            notes.push(format!("dropped the last level-{level} graph so that the class size is even"));
        }
        bound += STEP_DEPTH;
        levels.push(level_record(level, &next, bound, params, provenance)?);
        class = next;
    }
    Ok(ChainReport {
        order: params.order,
        depth_threshold: threshold,
        diameter_two_candidates: candidates.len(),
        levels,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_threshold_is_strictly_below_log2() {
        assert_eq!(default_threshold(1), 0);
        assert_eq!(default_threshold(4), 1);
        assert_eq!(default_threshold(5), 2);
        assert_eq!(default_threshold(8), 2);
        assert_eq!(default_threshold(9), 3);
    }
}
