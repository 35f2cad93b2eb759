//! Seeded empirical estimates and small arithmetic tables.

use crate::error::{Error, Result};
use crate::games::{depth, width};
use crate::graph::{canonical_form, enumerate_graphs, gnp, iso, Graph};
use crate::logic::{Compiled, Formula};
use crate::rng::child_seed;
use crate::value::GameValue;
use serde::Serialize;
use std::collections::HashMap;

/// Fraction of `samples` seeded draws of G(n, 1/2) satisfying `phi`. Sample
/// `i` uses the graph seeded by `child_seed(seed, i)`.
pub fn estimate_sentence_probability(phi: &Formula, n: usize, samples: usize, seed: u64) -> Result<f64> {
    if samples == 0 {
        return Err(Error::Parameter("at least one sample is needed".into()));
    }
    let compiled = Compiled::new(phi);
    let mut hits = 0;
    for i in 0..samples {
        let g = gnp(n, 0.5, child_seed(seed, i as u64))?;
        hits += compiled.holds(&g)? as usize;
    }
    Ok(hits as f64 / samples as f64)
}

/// Check of the component-count condition against the game engine.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentBoundReport {
    /// Number of isolated vertices.
    pub isolated: usize,
    /// Whether c_F(G) + v(F) ≤ d0 + 1 for every component F.
    pub condition_holds: bool,
    /// d0 + 2, the depth predicted when the condition holds.
    pub predicted_depth: u32,
    /// D(G, G + K1).
    pub depth_with_extra_isolated: GameValue,
    /// W(G, G + K1); at least d0 + 1 by the game argument.
    pub width_with_extra_isolated: Option<GameValue>,
    /// Largest D(G, H) over all same-order H ≇ G, when that is enumerable.
    pub same_order_max_depth: Option<GameValue>,
    /// Whether every computed value respects the bounds.
    pub consistent: bool,
}

/// Largest order for the width and same-order parts of the check.
const COMPONENT_CHECK_ORDER: usize = 6;

pub fn component_count_bound_check(g: &Graph) -> Result<ComponentBoundReport> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition("the component-count bound needs at least one edge".into()));
    }
    let isolated = g.isolated_count();
    let mut counts: HashMap<Vec<u8>, (usize, usize)> = HashMap::new();
    for comp in g.components() {
        let code = canonical_form(&g.induced(&comp)).as_bytes().to_vec();
        let entry = counts.entry(code).or_insert((0, comp.len()));
        entry.0 += 1;
    }
    let condition_holds = counts.values().all(|&(c, v)| c + v <= isolated + 1);
    let predicted = isolated as u32 + 2;
    let extended = g.with_isolated(1);
    let depth_extra = depth(g, &extended)?;
    let small = g.order() < COMPONENT_CHECK_ORDER;
    let width_extra = if small { Some(width(g, &extended)?) } else { None };
    let same_order = if g.order() <= COMPONENT_CHECK_ORDER {
        let mut best = GameValue::Finite(0);
        for h in enumerate_graphs(g.order())? {
            if !iso(g, &h) {
                best = best.max(depth(g, &h)?);
            }
        }
        Some(best)
    } else {
        None
    };
    let lower_ok = depth_extra >= GameValue::Finite(predicted)
        && width_extra.is_none_or(|w| w >= GameValue::Finite(isolated as u32 + 1));
    let upper_ok = !condition_holds
        || (depth_extra <= GameValue::Finite(predicted)
            && same_order.is_none_or(|d| d <= GameValue::Finite(predicted)));
    Ok(ComponentBoundReport {
        isolated,
        condition_holds,
        predicted_depth: predicted,
        depth_with_extra_isolated: depth_extra,
        width_with_extra_isolated: width_extra,
        same_order_max_depth: same_order,
        consistent: lower_ok && upper_ok,
    })
}

/// Tower(0) = 1, Tower(i) = 2^Tower(i−1); `None` once the value exceeds
/// 128 bits (from Tower(5) = 2^65536 on).
pub fn tower(i: u32) -> Option<u128> {
    let mut t: u128 = 1;
    for _ in 0..i {
        if t >= 128 {
            return None;
        }
        t = 1u128 << t;
    }
    Some(t)
}

/// log* n = min{i : Tower(i) ≥ n}.
pub fn log_star(n: u128) -> u32 {
    (0..).find(|&i| tower(i).is_none_or(|t| t >= n)).expect("towers grow without bound")
}

/// Tower values for i ≤ 5 and log* of a few reference points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerTable {
    /// Tower(i) as a decimal string, or "2^65536" when too large.
    pub towers: Vec<(u32, String)>,
    pub log_star: Vec<(u128, u32)>,
}

pub fn tower_table() -> TowerTable {
    let towers = (0..=5).map(|i| (i, tower(i).map_or_else(|| "2^65536".to_string(), |t| t.to_string()))).collect();
    let points = [1u128, 2, 3, 4, 5, 16, 17, 65536, 65537, u128::MAX];
    TowerTable { towers, log_star: points.iter().map(|&n| (n, log_star(n))).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, disjoint_union, empty};
    use crate::logic::parse;

    #[test]
    fn towers() {
        assert_eq!(tower(0), Some(1));
        assert_eq!(tower(3), Some(16));
        assert_eq!(tower(4), Some(65536));
        assert_eq!(tower(5), None);
        assert_eq!(log_star(1), 0);
        assert_eq!(log_star(2), 1);
        assert_eq!(log_star(3), 2);
        assert_eq!(log_star(16), 3);
        assert_eq!(log_star(17), 4);
        assert_eq!(log_star(65537), 5);
    }

    #[test]
    fn trivial_sentence_always_holds() {
        let phi = parse("Ex.(x=x)").unwrap();
        assert_eq!(estimate_sentence_probability(&phi, 10, 20, 1).unwrap(), 1.0);
    }

    #[test]
    fn edge_with_isolated_vertices() {
        let g = disjoint_union(&[complete(2).unwrap(), empty(3).unwrap()]).unwrap();
        let report = component_count_bound_check(&g).unwrap();
        assert!(report.condition_holds);
        assert_eq!(report.depth_with_extra_isolated, GameValue::Finite(5));
        assert!(report.consistent);
    }

    #[test]
    fn single_edge_fails_the_condition() {
        let report = component_count_bound_check(&complete(2).unwrap()).unwrap();
        assert!(!report.condition_holds);
        assert!(report.consistent);
    }
}
