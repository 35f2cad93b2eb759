use fodepth::analysis::{
    bs_satisfiable, bs_spectrum, cd_pair, clone_twin, component_count_bound_check, cw_pair,
    estimate_sentence_probability, extension_property, identification, random_bs_sentence, two_switch_witness,
    weak_sieve, CountingWidth, Metric,
};
use fodepth::constructions::pad;
use fodepth::emit::{extension_sentence, generic_defining};
use fodepth::games::{depth, pebble_depth, width};
use fodepth::graph::{
    are_twins, complete, cycle, disjoint_union, empty, enumerate_graphs, enumerate_trees, gnp, is_twin_free, iso, path,
    Graph,
};
use fodepth::logic::parse;
use fodepth::rng::seeded;
use fodepth::wl::refine;
use fodepth::wl::Version;
use fodepth::{Error, GameValue};
use proptest::prelude::*;

fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(|m| enumerate_graphs(m).unwrap()).collect()
}

fn non_isomorphic_pairs(n: usize) -> Vec<(Graph, Graph)> {
    let graphs = graphs_up_to(n);
    let mut out = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        for h in &graphs[i + 1..] {
            out.push((g.clone(), h.clone()));
        }
    }
    out
}

fn median(mut values: Vec<usize>) -> f64 {
    values.sort_unstable();
    let m = values.len();
    if m % 2 == 1 {
        values[m / 2] as f64
    } else {
        (values[m / 2 - 1] + values[m / 2]) as f64 / 2.0
    }
}

#[test]
fn cliques_against_every_same_order_graph() {
    for n in 2..=5 {
        let k = complete(n).unwrap();
        for h in enumerate_graphs(n).unwrap().into_iter().filter(|h| !iso(h, &k)) {
            assert_eq!(cd_pair(&k, &h, 1).unwrap(), GameValue::Finite(2), "K{n} / {h:?}");
        }
    }
}

#[test]
fn counting_values_on_small_pairs() {
    let mut rows = 0;
    for (g, h) in non_isomorphic_pairs(5) {
        if g.order() != h.order() {
            assert_eq!(cd_pair(&g, &h, 2).unwrap(), GameValue::Finite(1));
            assert_eq!(cw_pair(&g, &h).unwrap(), CountingWidth::Exact(1));
            continue;
        }
        rows += 1;
        for k in 1..=2 {
            let cd = cd_pair(&g, &h, k).unwrap();
            assert!(cd <= pebble_depth(&g, &h, k + 1).unwrap(), "cd^{} exceeds D^{} on {g:?} / {h:?}", k + 1, k + 1);
        }
        let CountingWidth::Exact(cw) = cw_pair(&g, &h).unwrap() else { panic!("cw is exact at order 5") };
        assert!(GameValue::Finite(cw) <= width(&g, &h).unwrap(), "{g:?} / {h:?}");
    }
    assert!(rows > 0);
}

/// The r-round k-WL pairwise verdict is correct once r ≥ cd^{k+1} − 1 and
/// k ≥ cw − 1, and a correct verdict needs r ≥ cd^{k+1} − k.
#[test]
fn refinement_window_on_small_pairs() {
    for (g, h) in non_isomorphic_pairs(5) {
        let cw = match cw_pair(&g, &h).unwrap() {
            CountingWidth::Exact(v) => v as usize,
            CountingWidth::AtLeast(_) => unreachable!("order 5 stays below the dimension cap"),
        };
        for k in 1..=2 {
            let cd = cd_pair(&g, &h, k).unwrap();
            let c = refine(&g, Some(&h), k, Version::Standard, None).unwrap();
            for r in 0..=c.last_round() + 1 {
                let correct = !c.full_equal(r);
                if let GameValue::Finite(cd) = cd {
                    if r + 1 >= cd as usize && k + 1 >= cw {
                        assert!(correct, "k = {k}, r = {r}: {g:?} / {h:?}");
                    }
                    if correct {
                        assert!(r + k >= cd as usize, "k = {k}, r = {r}, cd = {cd}: {g:?} / {h:?}");
                    }
                } else {
                    assert!(!correct, "k-WL cannot separate a pair it never separates on the diagonal");
                }
            }
        }
    }
}

#[test]
fn trees_take_counting_width_two() {
    for n in 2..=8 {
        let trees = enumerate_trees(n).unwrap();
        for (i, t) in trees.iter().enumerate() {
            for u in &trees[i + 1..] {
                let cw = cw_pair(t, u).unwrap();
                assert!(matches!(cw, CountingWidth::Exact(v) if v <= 2), "{t:?} / {u:?}: {cw:?}");
            }
        }
    }
}

#[test]
fn identification_examples() {
    let k4 = identification(&complete(4).unwrap(), Metric::Depth).unwrap();
    assert_eq!(k4.value, GameValue::Finite(2));
    assert!(k4.witness.is_some());
    let k5 = identification(&complete(5).unwrap(), Metric::CountingWidth).unwrap();
    assert_eq!(k5.value, GameValue::Finite(2));
    assert!(k5.exact);
    for g in graphs_up_to(5) {
        let n = g.order() as u32;
        let d = identification(&g, Metric::Depth).unwrap().value;
        assert!(d <= GameValue::Finite((n + 3) / 2), "{g:?}: {d:?}");
    }
    let big = gnp(8, 0.5, 1).unwrap();
    assert!(matches!(identification(&big, Metric::CountingWidth), Err(e) if e.is_resource()));
    assert!(matches!(identification(&gnp(7, 0.5, 1).unwrap(), Metric::Depth), Err(e) if e.is_resource()));
}

#[test]
fn greedy_sieves_on_small_graphs() {
    for g in graphs_up_to(7) {
        let report = weak_sieve(&g);
        assert_eq!(report.size, report.sieve.len());
        for (step, &classes) in report.class_history.iter().enumerate() {
            assert!(classes > step, "{g:?}: {:?}", report.class_history);
        }
        assert!(report.class_history.windows(2).all(|w| w[1] > w[0]));
        let in_sieve = |v: usize| report.sieve.contains(&v);
        let outside: usize = report.classes.iter().map(Vec::len).sum();
        assert_eq!(outside + report.size, g.order());
        assert!(report.classes.iter().flatten().all(|&v| !in_sieve(v)));
        if is_twin_free(&g) {
            assert!(report.is_weak_sieve, "{g:?}");
            assert!(report.weak_prefix.is_some_and(|p| p <= report.size));
            assert!(report.size <= (g.order().saturating_sub(1)) / 2, "{g:?}: {:?}", report.sieve);
        }
    }
    let p4 = weak_sieve(&path(4).unwrap());
    assert_eq!(p4.size, 1);
    assert!(p4.sieve == [1] || p4.sieve == [2]);
    assert!(p4.is_weak_sieve);
}

/// Along the greedy run on G(128, 1/2), a weak sieve of size at most
/// log n − log ln n + 5 appears in the median sample.
#[test]
fn greedy_sieve_size_on_random_graphs() {
    let n = 128usize;
    let sizes: Vec<usize> = (0..50)
        .map(|seed| weak_sieve(&gnp(n, 0.5, seed).unwrap()).weak_prefix.expect("random graphs are twin-free"))
        .collect();
    let nf = n as f64;
    let bound = nf.log2() - nf.ln().log2() + 5.0;
    assert!(median(sizes.clone()) <= bound, "median of {sizes:?} exceeds {bound}");
}

#[test]
fn extension_property_examples() {
    assert!(!extension_property(&complete(3).unwrap(), 1));
    assert!(extension_property(&cycle(5).unwrap(), 1));
    let n = 256usize;
    let log = (n as f64).log2();
    let k = (log - 2.0 * log.log2()).floor() as usize - 1;
    let hits = (0..100).filter(|&seed| extension_property(&gnp(n, 0.5, seed).unwrap(), k)).count();
    assert!(hits >= 90, "k = {k}: {hits}/100");
}

#[test]
fn clique_has_no_two_switch() {
    assert!(two_switch_witness(&complete(4).unwrap()).is_none());
}

#[test]
fn satisfiability_agrees_with_the_spectrum() {
    let mut rng = seeded(2024);
    for _ in 0..50 {
        let phi = random_bs_sentence(&mut rng, 3, 2, 3);
        let spectrum = bs_spectrum(&phi, 8).unwrap();
        assert_eq!(bs_satisfiable(&phi).unwrap(), !spectrum.members().is_empty(), "{phi}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cloning_adds_twins(n in 2usize..8, seed in any::<u64>(), m in 0usize..4) {
        let g = gnp(n, 0.5, seed).unwrap();
        // The twin class of vertex 0.
        let class: Vec<usize> = (0..n).filter(|&v| v == 0 || are_twins(&g, 0, v)).collect();
        let mutual = class.len() < 2 || g.adjacent(class[0], class[1]);
        let uniform = class.iter().all(|&a| class.iter().all(|&b| a == b || g.adjacent(a, b) == mutual));
        prop_assume!(uniform);
        let c = clone_twin(&g, &class, m).unwrap();
        prop_assert_eq!(c.order(), n + m);
        prop_assert!(iso(&c.induced(&(0..n).collect::<Vec<_>>()), &g));
        for clone in n..n + m {
            prop_assert!(are_twins(&c, class[0], clone));
        }
    }
}

#[test]
fn cloning_rejects_non_twins() {
    assert!(matches!(clone_twin(&path(3).unwrap(), &[0, 1], 1), Err(Error::Precondition(_))));
}

#[test]
fn sentence_frequencies() {
    let trivial = parse("Ex.(x=x)").unwrap();
    assert_eq!(estimate_sentence_probability(&trivial, 10, 30, 5).unwrap(), 1.0);
    let e2 = extension_sentence(2).unwrap();
    assert!(estimate_sentence_probability(&e2, 256, 200, 9).unwrap() >= 0.9);
    // All 8 labelled graphs on 3 vertices, weighted equally: 3 are paths.
    let p3 = generic_defining(&path(3).unwrap()).unwrap();
    let exact = (0..8u32)
        .filter(|bits| {
            let edges = [(0, 1), (0, 2), (1, 2)].into_iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1);
            let g = Graph::new(3, edges.map(|(_, e)| e)).unwrap();
            fodepth::logic::holds(&g, &p3).unwrap()
        })
        .count();
    assert_eq!(exact, 3);
    let estimate = estimate_sentence_probability(&p3, 3, 4000, 17).unwrap();
    assert!((estimate - 3.0 / 8.0).abs() < 0.05, "{estimate}");
    assert_eq!(
        estimate_sentence_probability(&p3, 3, 100, 3).unwrap(),
        estimate_sentence_probability(&p3, 3, 100, 3).unwrap()
    );
}

#[test]
fn component_count_examples() {
    let edge = complete(2).unwrap();
    let g = disjoint_union(&[edge.clone(), empty(3).unwrap()]).unwrap();
    let report = component_count_bound_check(&g).unwrap();
    assert!(report.condition_holds);
    assert_eq!(report.depth_with_extra_isolated, GameValue::Finite(5));
    assert_eq!(report.predicted_depth, 5);
    assert!(report.consistent);
    let bare = component_count_bound_check(&edge).unwrap();
    assert!(!bare.condition_holds);
    assert!(bare.consistent);
    assert!(matches!(component_count_bound_check(&empty(3).unwrap()), Err(Error::Precondition(_))));
    for g in graphs_up_to(5).into_iter().filter(|g| g.edge_count() > 0) {
        let report = component_count_bound_check(&g).unwrap();
        let w = report.width_with_extra_isolated.expect("width is computed below order 6");
        assert!(w >= GameValue::Finite(report.isolated as u32 + 1), "{g:?}");
        assert_eq!(report.depth_with_extra_isolated, depth(&g, &g.with_isolated(1)).unwrap());
        assert!(report.consistent, "{g:?}: {report:?}");
    }
    // Padding keeps an edge, so the check applies to padded graphs as well.
    assert!(component_count_bound_check(&pad(&edge).unwrap()).is_ok());
}
