//! Equitable colour refinement shared by the canonical-form and
//! automorphism searches.

use super::Graph;

/// Refines the colourings of several graphs jointly until the number of
/// colours stops growing. New colours are the ranks of
/// `(old colour, sorted neighbour colours)` over all vertices of all graphs,
/// so equal colours mean the same thing in every graph.
pub(crate) fn refine_joint(graphs: &[&Graph], colors: &mut [Vec<u32>]) {
    let mut classes = count_classes(colors);
    loop {
        let mut keyed: Vec<((u32, Vec<u32>), usize, usize)> = Vec::new();
        for (gi, g) in graphs.iter().enumerate() {
            for v in 0..g.order() {
                let mut sig: Vec<u32> = g.neighbors(v).iter().map(|&u| colors[gi][u as usize]).collect();
                sig.sort_unstable();
                keyed.push(((colors[gi][v], sig), gi, v));
            }
        }
        keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut rank = 0u32;
        for i in 0..keyed.len() {
            if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                rank += 1;
            }
            let (_, gi, v) = keyed[i];
            colors[gi][v] = rank;
        }
        let next = rank as usize + 1;
        if next == classes {
            return;
        }
        classes = next;
    }
}

pub(crate) fn refine(g: &Graph, colors: &mut Vec<u32>) {
    refine_joint(&[g], std::slice::from_mut(colors));
}

fn count_classes(colors: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Smallest non-singleton colour class (ties broken by colour), if any.
pub(crate) fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let mut cells: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
    for (v, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    cells.into_values().filter(|c| c.len() > 1).min_by_key(Vec::len)
}

/// Gives `v` a colour of its own, placed just before the rest of its class.
pub(crate) fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    colors.iter().enumerate().map(|(w, &c)| 2 * c + (w != v) as u32).collect()
}
