use fodepth::analysis::extension_property;
use fodepth::constructions::pad;
use fodepth::emit::{
    delta, extension_sentence, generic_defining, hintikka, padding_sentence, path_sentence, DeltaStyle,
};
use fodepth::games::depth;
use fodepth::graph::{complete, enumerate_graphs, gnp, iso, path, random_permutation, Graph};
use fodepth::logic::{evaluate, holds, parse, var, Compiled, Formula};
use fodepth::GameValue;

fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(|m| enumerate_graphs(m).unwrap()).collect()
}

fn assert_round_trips(f: &Formula) {
    f.check_well_formed().unwrap();
    assert_eq!(&parse(&f.to_string()).unwrap(), f, "{f}");
}

#[test]
fn distance_formulas_against_breadth_first_search() {
    let (x, y) = (var("x"), var("y"));
    for seed in 0..50 {
        let g = gnp(10, 0.25, seed).unwrap();
        let n = 1 + seed as usize % 5;
        for style in [DeltaStyle::Naive, DeltaStyle::Halving, DeltaStyle::ThreeVar] {
            let f = delta(n, style).unwrap();
            for u in 0..g.order() {
                for v in 0..g.order() {
                    let close = g.distance(u, v).is_some_and(|d| d as usize <= n);
                    assert_eq!(evaluate(&g, &f, &[(x.clone(), u), (y.clone(), v)]).unwrap(), close);
                }
            }
        }
    }
    let f = Compiled::new(&delta(8, DeltaStyle::Halving).unwrap());
    for seed in 0..5 {
        let g = gnp(20, 0.2, 100 + seed).unwrap();
        for u in 0..20 {
            for v in 0..20 {
                let close = g.distance(u, v).is_some_and(|d| d <= 8);
                assert_eq!(f.eval(&g, &[(x.clone(), u), (y.clone(), v)]).unwrap(), close);
            }
        }
    }
}

#[test]
fn path_sentences_define_paths() {
    for n in 2..=5 {
        for style in [DeltaStyle::Naive, DeltaStyle::ThreeVar] {
            let s = path_sentence(n, style).unwrap();
            assert_round_trips(&s);
            for g in graphs_up_to(n + 1) {
                assert_eq!(holds(&g, &s).unwrap(), iso(&g, &path(n).unwrap()), "P{n} {style:?} on {g:?}");
            }
        }
    }
    // The degree clause alone has depth 4, which meets log₂ n + 3 at n = 2.
    assert_eq!(path_sentence(2, DeltaStyle::ThreeVar).unwrap().depth(), 4);
    for n in 3..=64usize {
        let d = path_sentence(n, DeltaStyle::ThreeVar).unwrap().depth();
        assert!((d as f64) < (n as f64).log2() + 3.0, "n = {n}: depth {d}");
    }
}

#[test]
fn extension_sentences_match_the_direct_check() {
    for k in 2..=3 {
        let e = extension_sentence(k).unwrap();
        assert_eq!(e.depth() as usize, k);
        assert_round_trips(&e);
        for g in graphs_up_to(5) {
            assert_eq!(holds(&g, &e).unwrap(), extension_property(&g, k - 1), "k = {k}, {g:?}");
        }
    }
}

#[test]
fn padding_sentence_of_the_one_vertex_graph() {
    let k1 = complete(1).unwrap();
    let phi = padding_sentence(&generic_defining(&k1).unwrap()).unwrap();
    assert_round_trips(&phi);
    let target = pad(&k1).unwrap();
    for g in graphs_up_to(4) {
        assert_eq!(holds(&g, &phi).unwrap(), iso(&g, &target), "{g:?}");
    }
}

#[test]
fn emitted_sentences_round_trip() {
    for g in graphs_up_to(4) {
        assert_round_trips(&generic_defining(&g).unwrap());
        for k in 1..=3 {
            assert_round_trips(&hintikka(&g, k).unwrap());
        }
    }
    for n in 1..=12 {
        for style in [DeltaStyle::Naive, DeltaStyle::Halving, DeltaStyle::ThreeVar] {
            assert_round_trips(&delta(n, style).unwrap());
        }
    }
}

/// hintikka(G, k) and hintikka(H, k) agree on every small graph exactly when
/// Duplicator survives k rounds on (G, H); isomorphic inputs give
/// equivalent sentences.
#[test]
fn hintikka_classes_follow_the_game() {
    let graphs = graphs_up_to(4);
    for k in 1..=3 {
        let truth: Vec<Vec<bool>> = graphs
            .iter()
            .map(|g| {
                let phi = Compiled::new(&hintikka(g, k).unwrap());
                graphs.iter().map(|h| phi.holds(h).unwrap()).collect()
            })
            .collect();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                let survives = depth(&graphs[i], &graphs[j]).unwrap() > GameValue::Finite(k as u32);
                assert_eq!(truth[i] == truth[j], survives, "k = {k}: {:?} / {:?}", graphs[i], graphs[j]);
            }
        }
        for (i, g) in graphs.iter().enumerate() {
            let copy = g.relabel(&random_permutation(g.order(), i as u64));
            let phi = Compiled::new(&hintikka(&copy, k).unwrap());
            let row: Vec<bool> = graphs.iter().map(|h| phi.holds(h).unwrap()).collect();
            assert_eq!(row, truth[i]);
        }
    }
}
