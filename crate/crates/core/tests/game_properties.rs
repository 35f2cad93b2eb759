use fodepth::analysis::{cd_pair, cw_pair, CountingWidth};
use fodepth::emit::hintikka;
use fodepth::games::{alt_depth, depth, is_partial_isomorphism, pebble_depth, width};
use fodepth::graph::{enumerate_graphs, gnp, iso, Graph};
use fodepth::logic::random::{pool, random_sentence};
use fodepth::logic::{holds, Compiled};
use fodepth::rng::seeded;
use fodepth::wl::{verdict, Version};
use fodepth::GameValue;
use proptest::prelude::*;

/// Plain minimax: Spoiler wins the r-round game from `pairs`.
fn naive_wins(g: &Graph, h: &Graph, pairs: &mut Vec<(usize, usize)>, rounds: u32) -> bool {
    if !is_partial_isomorphism(g, h, pairs) {
        return true;
    }
    if rounds == 0 {
        return false;
    }
    let spoil = |pairs: &mut Vec<(usize, usize)>, in_g: bool, x: usize| {
        let other = if in_g { h.order() } else { g.order() };
        (0..other).all(|y| {
            pairs.push(if in_g { (x, y) } else { (y, x) });
            let won = naive_wins(g, h, pairs, rounds - 1);
            pairs.pop();
            won
        })
    };
    (0..g.order()).any(|x| spoil(pairs, true, x)) || (0..h.order()).any(|x| spoil(pairs, false, x))
}

fn naive_depth(g: &Graph, h: &Graph) -> u32 {
    (0..).find(|&r| naive_wins(g, h, &mut Vec::new(), r)).unwrap()
}

fn random_pair() -> impl Strategy<Value = (Graph, Graph)> {
    (1usize..=5, 1usize..=5, any::<u64>(), any::<u64>(), 0.2f64..0.8)
        .prop_map(|(n, m, a, b, p)| (gnp(n, p, a).unwrap(), gnp(m, p, b).unwrap()))
        .prop_filter("non-isomorphic", |(g, h)| !iso(g, h))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn depth_matches_naive_minimax((g, h) in random_pair()) {
        prop_assume!(g.order() <= 4 && h.order() <= 4);
        prop_assert_eq!(depth(&g, &h).unwrap(), GameValue::Finite(naive_depth(&g, &h)));
    }

    #[test]
    fn depth_is_symmetric_and_complement_invariant((g, h) in random_pair()) {
        let d = depth(&g, &h).unwrap();
        prop_assert_eq!(depth(&h, &g).unwrap(), d);
        prop_assert_eq!(depth(&g.complement(), &h.complement()).unwrap(), d);
    }

    #[test]
    fn pebbles_and_alternations_only_slow_spoiler_down((g, h) in random_pair()) {
        let d = depth(&g, &h).unwrap();
        let w = width(&g, &h).unwrap();
        prop_assert!(w <= d);
        for k in 1..=4 {
            let dk = pebble_depth(&g, &h, k).unwrap();
            prop_assert!(dk >= d);
            if GameValue::Finite(k as u32) >= d {
                prop_assert_eq!(dk, d);
            }
        }
        let mut previous = GameValue::Infinite;
        for a in 0..=4 {
            let da = alt_depth(&g, &h, a).unwrap();
            prop_assert!(da >= d && da <= previous);
            previous = da;
        }
        prop_assert_eq!(previous, d);
    }

    #[test]
    fn count_free_wl_matches_pebbles_at_order_six(a in any::<u64>(), b in any::<u64>()) {
        let (g, h) = (gnp(6, 0.5, a).unwrap(), gnp(6, 0.5, b).unwrap());
        prop_assume!(!iso(&g, &h));
        for k in 2..=3 {
            let separates = verdict(&g, &h, k, Version::CountFree).unwrap().separates();
            prop_assert_eq!(separates, pebble_depth(&g, &h, k + 1).unwrap().is_finite());
        }
    }

    #[test]
    fn counting_never_needs_more_than_plain_logic((g, h) in random_pair()) {
        // A plain sentence with k+1 variables and depth r is a counting one.
        for k in 1..=2 {
            prop_assert!(cd_pair(&g, &h, k).unwrap() <= pebble_depth(&g, &h, k + 1).unwrap());
        }
        let w = width(&g, &h).unwrap().finite().unwrap();
        let cw = match cw_pair(&g, &h).unwrap() {
            CountingWidth::Exact(v) | CountingWidth::AtLeast(v) => v,
        };
        prop_assert!(cw <= w);
    }
}

/// Hintikka sentences as an independent oracle at order 5.
#[test]
fn hintikka_oracle_at_order_five() {
    let graphs = enumerate_graphs(5).unwrap();
    let sentences: Vec<Vec<Compiled>> =
        graphs.iter().map(|g| (1..=3).map(|k| Compiled::new(&hintikka(g, k).unwrap())).collect()).collect();
    let mut deepest = 0;
    for (i, g) in graphs.iter().enumerate() {
        for (j, h) in graphs.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = depth(g, h).unwrap();
            for k in 1..=3u32 {
                let survives = sentences[i][k as usize - 1].holds(h).unwrap();
                assert_eq!(d > GameValue::Finite(k), survives, "{i} {j} k={k}");
            }
            deepest = deepest.max(d.finite().unwrap());
        }
    }
    assert_eq!(deepest, 3, "largest depth over same-order pairs of order 5");
}

/// Sentences of depth d cannot tell apart graphs that Duplicator survives
/// for d rounds.
#[test]
fn shallow_sentences_agree_on_game_equivalent_graphs() {
    let graphs: Vec<Graph> = (1..=4).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    let vars = pool(&["x", "y", "z"]);
    let mut rng = seeded(2024);
    let sentences: Vec<_> = (0..60).map(|i| random_sentence(&mut rng, &vars, 1 + i % 3, false)).collect();
    let mut compared = 0;
    for (i, g) in graphs.iter().enumerate() {
        for h in &graphs[i + 1..] {
            let d = depth(g, h).unwrap();
            for phi in sentences.iter().filter(|phi| GameValue::Finite(phi.depth()) < d) {
                assert_eq!(holds(g, phi).unwrap(), holds(h, phi).unwrap(), "{phi} on {g:?} / {h:?}");
                compared += 1;
            }
        }
    }
    assert!(compared > 0);
}
