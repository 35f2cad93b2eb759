//! Game-value identities over every pair of non-isomorphic graphs of order
//! at most 4.

use fodepth::games::{alt_depth, depth, pebble_depth, width};
use fodepth::graph::{enumerate_graphs, Graph};
use fodepth::GameValue;

fn pairs() -> Vec<(Graph, Graph)> {
    let graphs: Vec<Graph> = (1..=4).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    let mut out = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        for h in &graphs[i + 1..] {
            out.push((g.clone(), h.clone()));
        }
    }
    out
}

#[test]
fn symmetric_and_complement_invariant() {
    for (g, h) in pairs() {
        let (gc, hc) = (g.complement(), h.complement());
        let d = depth(&g, &h).unwrap();
        assert_eq!(depth(&h, &g).unwrap(), d);
        assert_eq!(depth(&gc, &hc).unwrap(), d);
        let w = width(&g, &h).unwrap();
        assert_eq!(width(&h, &g).unwrap(), w);
        assert_eq!(width(&gc, &hc).unwrap(), w);
        for k in 1..=3 {
            let dk = pebble_depth(&g, &h, k).unwrap();
            assert_eq!(pebble_depth(&h, &g, k).unwrap(), dk);
            assert_eq!(pebble_depth(&gc, &hc, k).unwrap(), dk);
        }
        for a in 0..=2 {
            assert_eq!(alt_depth(&h, &g, a).unwrap(), alt_depth(&g, &h, a).unwrap());
        }
    }
}

#[test]
fn pebbles_interpolate_between_width_and_depth() {
    for (g, h) in pairs() {
        let d = depth(&g, &h).unwrap();
        let cap = g.order().min(h.order()) as u32 + 1;
        assert!(d <= GameValue::Finite(cap), "cap soundness");
        let values: Vec<GameValue> = (1..=5).map(|k| pebble_depth(&g, &h, k).unwrap()).collect();
        assert!(values.windows(2).all(|w| w[1] <= w[0]), "more pebbles never hurt Spoiler");
        assert_eq!(values.iter().copied().min().unwrap(), d);
        let w = width(&g, &h).unwrap().finite().unwrap();
        assert!(values[w as usize - 1].is_finite());
        assert!(w == 1 || !values[w as usize - 2].is_finite());
    }
}

#[test]
fn alternation_budgets() {
    for (g, h) in pairs() {
        let d = depth(&g, &h).unwrap();
        let values: Vec<GameValue> = (0..=4).map(|a| alt_depth(&g, &h, a).unwrap()).collect();
        assert!(values.windows(2).all(|w| w[1] <= w[0]), "D ≤ … ≤ D1 ≤ D0");
        assert!(values.iter().all(|&v| v >= d));
        let unbound = d.finite().unwrap().saturating_sub(1) as usize;
        assert!(values[unbound..].iter().all(|&v| v == d), "{g:?} / {h:?}: {values:?}");
    }
}
