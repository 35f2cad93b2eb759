//! Distance and component statistics.

use super::canon::canonical_labeling;
use super::io::to_graph6;
use super::{Graph, UNREACHABLE};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentType {
    /// graph6 of the canonical representative.
    pub graph6: String,
    pub order: usize,
    pub count: usize,
}

/// `None` stands for an infinite distance or eccentricity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricsReport {
    pub order: usize,
    pub edges: usize,
    pub distances: Vec<Vec<Option<u32>>>,
    pub eccentricities: Vec<Option<u32>>,
    pub radius: Option<u32>,
    pub diameter: Option<u32>,
    pub centers: Vec<usize>,
    pub max_degree: usize,
    pub isolated: usize,
    pub components: Vec<ComponentType>,
}

pub fn metrics(g: &Graph) -> MetricsReport {
    let n = g.order();
    let raw = g.distances();
    let finite = |d: u32| (d != UNREACHABLE).then_some(d);
    let distances: Vec<Vec<Option<u32>>> = (0..n).map(|u| (0..n).map(|v| finite(raw[u * n + v])).collect()).collect();
    let eccentricities: Vec<Option<u32>> =
        (0..n).map(|u| finite(*raw[u * n..(u + 1) * n].iter().max().expect("non-empty"))).collect();
    // `None < Some`, so order infinities last by mapping to u64.
    let key = |e: &Option<u32>| e.map_or(u64::MAX, u64::from);
    let radius = *eccentricities.iter().min_by_key(|e| key(e)).expect("non-empty");
    let diameter = *eccentricities.iter().max_by_key(|e| key(e)).expect("non-empty");
    let centers = (0..n).filter(|&v| eccentricities[v] == radius).collect();

    let mut types: BTreeMap<Vec<u8>, ComponentType> = BTreeMap::new();
    for comp in g.components() {
        let sub = g.induced(&comp);
        let (code, perm) = canonical_labeling(&sub);
        types
            .entry(code.as_bytes().to_vec())
            .or_insert_with(|| ComponentType { graph6: to_graph6(&sub.relabel(&perm)), order: comp.len(), count: 0 })
            .count += 1;
    }
    MetricsReport {
        order: n,
        edges: g.edge_count(),
        distances,
        eccentricities,
        radius,
        diameter,
        centers,
        max_degree: g.max_degree(),
        isolated: g.isolated_count(),
        components: types.into_values().collect(),
    }
}
