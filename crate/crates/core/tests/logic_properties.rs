use fodepth::constructions::pad;
use fodepth::graph::{enumerate_graphs, gnp, random_permutation};
use fodepth::logic::random::{pool, random_formula, random_sentence};
use fodepth::logic::{
    alternation, evaluate, free_vars, holds, is_nnf, measure, nnf, parse, relativize, var, Formula, Node,
};
use fodepth::rng::seeded;
use proptest::prelude::*;

/// The sentence read in the complement: adjacency becomes non-adjacency
/// between distinct vertices.
fn complement_dual(f: &Formula) -> Formula {
    match f.node() {
        Node::Eq(..) => f.clone(),
        Node::Adj(x, y) => Formula::and(vec![Formula::not(f.clone()), Formula::not(Formula::eq_atom(x, y))]),
        Node::Not(g) => Formula::not(complement_dual(g)),
        Node::And(parts) => Formula::and(parts.iter().map(complement_dual).collect()),
        Node::Or(parts) => Formula::or(parts.iter().map(complement_dual).collect()),
        Node::Exists(x, g) => Formula::exists(x, complement_dual(g)),
        Node::Forall(x, g) => Formula::forall(x, complement_dual(g)),
        Node::CountExists(m, x, g) => Formula::count_exists(*m, x, complement_dual(g)).unwrap(),
    }
}

fn sentence(seed: u64, depth: u32, counting: bool) -> Formula {
    random_sentence(&mut seeded(seed), &pool(&["x", "y", "z"]), depth, counting)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn printing_then_parsing_is_the_identity(seed in any::<u64>(), depth in 0u32..5, counting in any::<bool>()) {
        let f = sentence(seed, depth, counting);
        let text = f.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &f, "{}", text);
        prop_assert_eq!(measure(&back), measure(&f));
    }

    #[test]
    fn nnf_preserves_truth_and_depth(seed in any::<u64>(), depth in 0u32..4, counting in any::<bool>(), n in 1usize..6) {
        let f = sentence(seed, depth, counting);
        let g = nnf(&f);
        prop_assert!(is_nnf(&g));
        prop_assert_eq!(g.depth(), f.depth());
        prop_assert_eq!(g.width(), f.width());
        prop_assert!(g.length() <= 2 * f.length());
        let graph = gnp(n, 0.5, seed ^ 0x5eed).unwrap();
        prop_assert_eq!(holds(&graph, &g).unwrap(), holds(&graph, &f).unwrap());
    }

    #[test]
    fn free_formulas_follow_relabelled_assignments(seed in any::<u64>(), depth in 0u32..3, n in 1usize..6) {
        let vars = pool(&["x", "y", "z"]);
        let f = random_formula(&mut seeded(seed), &vars, depth, true);
        let graph = gnp(n, 0.5, seed.rotate_left(3)).unwrap();
        let perm = random_permutation(n, seed.rotate_left(11));
        let copy = graph.relabel(&perm);
        let free = free_vars(&f);
        let values: Vec<usize> = (0..free.len()).map(|i| (seed as usize).wrapping_add(7 * i) % n).collect();
        let here: Vec<_> = free.iter().cloned().zip(values.iter().copied()).collect();
        let there: Vec<_> = free.iter().cloned().zip(values.iter().map(|&v| perm[v])).collect();
        prop_assert_eq!(evaluate(&graph, &f, &here).unwrap(), evaluate(&copy, &f, &there).unwrap());
    }

    #[test]
    fn complement_reads_the_dual_sentence(seed in any::<u64>(), depth in 0u32..4, n in 1usize..6) {
        let f = sentence(seed, depth, true);
        let graph = gnp(n, 0.5, seed.rotate_left(5)).unwrap();
        prop_assert_eq!(holds(&graph, &f).unwrap(), holds(&graph.complement(), &complement_dual(&f)).unwrap());
    }

    #[test]
    fn relativisation_to_the_full_apex_of_the_pad(seed in any::<u64>(), depth in 0u32..4, n in 1usize..5) {
        let f = sentence(seed, depth, true);
        let c = var("c");
        let r = relativize(&f, &c).unwrap();
        prop_assert_eq!(r.depth(), f.depth());
        prop_assert!(r.width() <= f.width() + 1);
        // The apex of the full subset is adjacent to exactly the base graph.
        let graph = gnp(n, 0.5, seed.rotate_left(9)).unwrap();
        let padded = pad(&graph).unwrap();
        let apex = padded.order() - 1;
        prop_assert_eq!(evaluate(&padded, &r, &[(c, apex)]).unwrap(), holds(&graph, &f).unwrap());
    }

    #[test]
    fn truth_is_invariant_under_relabelling(seed in any::<u64>(), depth in 0u32..4, n in 1usize..7) {
        let f = sentence(seed, depth, true);
        let graph = gnp(n, 0.5, seed.rotate_left(7)).unwrap();
        let copy = graph.relabel(&random_permutation(n, seed));
        prop_assert_eq!(holds(&graph, &f).unwrap(), holds(&copy, &f).unwrap());
    }

    #[test]
    fn alternation_is_defined_exactly_without_counting(seed in any::<u64>(), depth in 1u32..5) {
        let plain = nnf(&sentence(seed, depth, false));
        prop_assert!(alternation(&plain).is_some());
        prop_assert!(alternation(&plain).unwrap() <= plain.depth());
    }
}

#[test]
fn the_one_vertex_sentence() {
    let f = parse("Ax.Ay.(x=y)").unwrap();
    for n in 1..=4 {
        for g in enumerate_graphs(n).unwrap() {
            assert_eq!(holds(&g, &f).unwrap(), n == 1);
        }
    }
}

#[test]
fn counting_quantifiers_have_no_alternation_number() {
    let f = parse("E^2x.(x=x)").unwrap();
    assert_eq!(alternation(&nnf(&f)), None);
}
