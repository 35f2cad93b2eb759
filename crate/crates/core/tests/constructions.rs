use fodepth::analysis::{identification, Metric};
use fodepth::constructions::{is_diverging, pad, unite_conquer, universal_asymmetric_tree, Construction};
use fodepth::games::depth;
use fodepth::graph::{
    complete, cycle, disjoint_union, empty, enumerate_graphs, enumerate_trees, is_asymmetric, iso, metrics, path,
    random_permutation, star, Graph,
};
use fodepth::rng::seeded;
use fodepth::{Error, GameValue};
use rand::seq::SliceRandom;
use rand::Rng;

/// The branch of `t` at neighbour `u` of `w`, rooted at `u` and marked by a
/// tail longer than the tree so that graph isomorphism respects roots.
fn marked_branch(t: &Graph, w: usize, u: usize) -> Graph {
    let n = t.order();
    let mut seen = vec![false; n];
    seen[w] = true;
    let mut order = vec![u];
    seen[u] = true;
    let mut i = 0;
    while i < order.len() {
        for &x in t.neighbors(order[i]) {
            if !seen[x as usize] {
                seen[x as usize] = true;
                order.push(x as usize);
            }
        }
        i += 1;
    }
    let index = |v: usize| order.iter().position(|&o| o == v).unwrap();
    let mut edges: Vec<(usize, usize)> = t
        .edges()
        .into_iter()
        .filter(|&(a, b)| a != w && b != w && order.contains(&a) && order.contains(&b))
        .map(|(a, b)| (index(a), index(b)))
        .collect();
    let m = order.len();
    let tail = n + 1;
    edges.push((0, m));
    edges.extend((m..m + tail - 1).map(|v| (v, v + 1)));
    Graph::new(m + tail, edges).unwrap()
}

fn diverging_by_isomorphism(t: &Graph) -> bool {
    (0..t.order()).all(|w| {
        let branches: Vec<Graph> = t.neighbors(w).iter().map(|&u| marked_branch(t, w, u as usize)).collect();
        (0..branches.len()).all(|i| (i + 1..branches.len()).all(|j| !iso(&branches[i], &branches[j])))
    })
}

#[test]
fn diverging_agrees_with_branch_isomorphism() {
    for n in 1..=9 {
        for t in enumerate_trees(n).unwrap() {
            assert_eq!(is_diverging(&t).unwrap(), diverging_by_isomorphism(&t), "order {n}");
        }
    }
    assert!(matches!(is_diverging(&complete(3).unwrap()), Err(Error::Precondition(_))));
}

#[test]
fn diverging_examples() {
    assert!(!is_diverging(&path(3).unwrap()).unwrap());
    assert!(is_diverging(&path(2).unwrap()).unwrap());
    for n in 1..=8 {
        for t in enumerate_trees(n).unwrap().iter().filter(|t| is_asymmetric(t)) {
            assert!(is_diverging(t).unwrap(), "asymmetric trees diverge (order {n})");
        }
    }
}

#[test]
fn universal_trees() {
    let t3 = universal_asymmetric_tree(3, false).unwrap();
    assert_eq!(t3.order(), 11);
    let t4 = universal_asymmetric_tree(4, false).unwrap();
    assert_eq!(t4.order(), 97);
    for t in [&t3, &t4] {
        assert!(t.is_tree() && is_asymmetric(t) && is_diverging(t).unwrap());
    }
    assert_eq!(metrics(&t4).radius, Some(4));
    assert_eq!(metrics(&t4).centers, vec![0]);
    // T3: a centre with one branch of each asymmetric rooted tree of height ≤ 2.
    let centre = metrics(&t3).centers[0];
    let mut t3_branches: Vec<usize> = {
        let rest: Vec<usize> = (0..t3.order()).filter(|&v| v != centre).collect();
        let without_centre = Graph::new(
            rest.len(),
            t3.edges()
                .into_iter()
                .filter(|&(a, b)| a != centre && b != centre)
                .map(|(a, b)| (rest.iter().position(|&v| v == a).unwrap(), rest.iter().position(|&v| v == b).unwrap())),
        )
        .unwrap();
        without_centre.components().iter().map(Vec::len).collect()
    };
    t3_branches.sort();
    assert_eq!(t3_branches, vec![1, 2, 3, 4]);
}

#[test]
fn padding_structure() {
    let p1 = pad(&complete(1).unwrap()).unwrap();
    let k2_k1 = disjoint_union(&[complete(2).unwrap(), complete(1).unwrap()]).unwrap();
    assert!(iso(&p1, &k2_k1));
    for n in 1..=5 {
        for g in enumerate_graphs(n).unwrap() {
            let padded = pad(&g).unwrap();
            assert_eq!(padded.order(), n + (1 << n));
            // Subset vertices are independent, the empty subset is isolated
            // and the full subset sees exactly the base vertices.
            for a in n..padded.order() {
                for b in n..padded.order() {
                    assert!(!padded.adjacent(a, b));
                }
            }
            assert_eq!(padded.degree(n), 0);
            let full = n + (1 << n) - 1;
            let mut neighbours: Vec<usize> = padded.neighbors(full).iter().map(|&v| v as usize).collect();
            neighbours.sort();
            assert_eq!(neighbours, (0..n).collect::<Vec<_>>());
        }
    }
}

#[test]
fn padding_respects_isomorphism() {
    for g in enumerate_graphs(4).unwrap() {
        let copy = g.relabel(&random_permutation(4, 9));
        let (a, b) = (pad(&g).unwrap(), pad(&copy).unwrap());
        assert_eq!(a.order(), 4 + 16);
        assert!(iso(&a, &b));
        // Every base vertex lies in half of the subsets.
        assert_eq!(a.edge_count(), g.edge_count() + 4 * 8);
    }
    assert!(matches!(pad(&empty(17).unwrap()), Err(Error::Resource(_))));
}

/// Unite-and-conquer over two-element families: the result is the
/// complement of a disjoint union, so game values transfer from the unions.
#[test]
fn two_member_families() {
    let small: Vec<Graph> = (1..=2).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    let mut families = Vec::new();
    for i in 0..small.len() {
        for j in i + 1..small.len() {
            let members = [small[i].clone(), small[j].clone()];
            families.push((unite_conquer(&members).unwrap(), disjoint_union(&members).unwrap()));
        }
    }
    let p3 = unite_conquer(&[complete(1).unwrap(), complete(2).unwrap()]).unwrap();
    assert!(iso(&p3, &fodepth::graph::path(3).unwrap()));
    for (united, _) in &families {
        assert!(metrics(united).diameter <= Some(2));
    }
    for (a, ua) in &families {
        for (b, ub) in &families {
            if !iso(a, b) {
                assert_eq!(depth(a, b).unwrap(), depth(ua, ub).unwrap());
            }
        }
    }
}

#[test]
fn unite_conquer_on_random_families() {
    // Members are connected, as in the iterated construction.
    let pool: Vec<Graph> =
        (1..=6).flat_map(|n| enumerate_graphs(n).unwrap()).filter(|g| g.components().len() == 1).collect();
    let mut rng = seeded(17);
    for _ in 0..50 {
        let size = rng.gen_range(2..=4);
        let members: Vec<Graph> = pool.choose_multiple(&mut rng, size).cloned().collect();
        let united = unite_conquer(&members).unwrap();
        assert_eq!(united.order(), members.iter().map(Graph::order).sum::<usize>());
        assert_eq!(metrics(&united).diameter, Some(2));
        assert_eq!(united.complement().components().len(), size);
    }
    let twice = [path(3).unwrap(), path(3).unwrap().relabel(&[2, 0, 1])];
    assert!(matches!(unite_conquer(&twice), Err(Error::Precondition(_))));
    assert!(matches!(unite_conquer(&[path(3).unwrap()]), Err(Error::Precondition(_))));
}

/// The game argument behind unite-and-conquer on a fixed pool of connected
/// graphs of diameter at most 2: the disjoint unions of two different
/// 2-subsets are separated within three rounds more than any member needs.
#[test]
fn unite_conquer_depth_argument() {
    let pool = [path(3).unwrap(), complete(3).unwrap(), cycle(4).unwrap(), star(3).unwrap()];
    let member_depth = pool
        .iter()
        .map(|a| {
            let own = identification(a, Metric::Depth).unwrap().value;
            pool.iter().filter(|b| !iso(a, b)).map(|b| depth(a, b).unwrap()).fold(own, GameValue::max)
        })
        .max()
        .unwrap();
    let subsets: Vec<[usize; 2]> = (0..4).flat_map(|i| (i + 1..4).map(move |j| [i, j])).collect();
    let union = |s: &[usize; 2]| disjoint_union(&[pool[s[0]].clone(), pool[s[1]].clone()]).unwrap();
    for s in &subsets {
        for t in &subsets {
            if s != t {
                let d = depth(&union(s), &union(t)).unwrap();
                assert!(d <= member_depth.finite().map(|m| GameValue::Finite(m + 3)).unwrap(), "{s:?} {t:?}: {d:?}");
            }
        }
    }
}

#[test]
fn provenance_serialises_and_rebuilds() {
    let recipe = Construction::UniversalAsymmetricTree { radius: 3, allow_large: false };
    let (g, provenance) = recipe.build().unwrap();
    let (again, _) = provenance.construction.build().unwrap();
    assert_eq!(g, again);
}
