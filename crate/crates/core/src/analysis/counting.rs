//! Counting-logic distinguishability via Weisfeiler-Lehman, and
//! identification maxima over graphs of the same order.

use crate::error::{Error, Result};
use crate::games::{depth, require_non_isomorphic, width};
use crate::graph::{enumerate_graphs, iso, Graph};
use crate::value::GameValue;
use crate::wl::{refine, verdict, Version};
use serde::Serialize;

/// Largest dimension tried by [`cw_pair`].
pub const CW_MAX_DIMENSION: usize = 3;
/// Largest order for depth/width identification.
pub const IDENTIFICATION_GAME_ORDER: usize = 6;

/// cd^{k+1}(G,H): the least quantifier depth of a counting sentence with
/// k+1 variables distinguishing G from H. Computed as one more than the first
/// round whose diagonal k-WL colourings differ.
pub fn cd_pair(g: &Graph, h: &Graph, k: usize) -> Result<GameValue> {
    require_non_isomorphic(g, h)?;
    if g.order() != h.order() {
        return Ok(GameValue::Finite(1));
    }
    let c = refine(g, Some(h), k, Version::Standard, None)?;
    Ok((0..=c.last_round())
        .find(|&r| !c.diag_equal(r))
        .map_or(GameValue::Infinite, |r| GameValue::Finite(r as u32 + 1)))
}

/// cw(G,H), exactly or as a lower bound when the dimension cap is reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountingWidth {
    Exact(u32),
    AtLeast(u32),
}

/// cw(G,H) = 1 + the least k such that k-WL run to stability separates.
pub fn cw_pair(g: &Graph, h: &Graph) -> Result<CountingWidth> {
    require_non_isomorphic(g, h)?;
    if g.order() != h.order() {
        return Ok(CountingWidth::Exact(1));
    }
    for k in 1..=CW_MAX_DIMENSION {
        match verdict(g, h, k, Version::Standard) {
            Ok(v) if v.separates() => return Ok(CountingWidth::Exact(k as u32 + 1)),
            Ok(_) => {}
            Err(e) if e.is_resource() => return Ok(CountingWidth::AtLeast(k as u32 + 1)),
            Err(e) => return Err(e),
        }
    }
    Ok(CountingWidth::AtLeast(CW_MAX_DIMENSION as u32 + 2))
}

/// The quantity maximised by [`identification`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Depth,
    Width,
    /// cd^{k+1} for the given k.
    CountingDepth(usize),
    CountingWidth,
}

/// The maximum of a pairwise metric over all non-isomorphic H of the same
/// order as G, with an extremal H.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Identification {
    pub value: GameValue,
    /// False when some pairwise value was only a lower bound.
    pub exact: bool,
    pub witness: Option<Graph>,
}

pub fn identification(g: &Graph, metric: Metric) -> Result<Identification> {
    let n = g.order();
    let limit = match metric {
        Metric::Depth | Metric::Width => IDENTIFICATION_GAME_ORDER,
        Metric::CountingDepth(_) | Metric::CountingWidth => crate::graph::MAX_ENUMERATION_ORDER,
    };
    if n > limit {
        return Err(Error::Resource(format!(
            "identification enumerates all graphs of the same order; limited to order {limit}, got {n}"
        )));
    }
    let floor = match metric {
        Metric::Depth | Metric::Width => 0,
        Metric::CountingDepth(_) | Metric::CountingWidth => 1,
    };
    let mut best = Identification { value: GameValue::Finite(floor), exact: true, witness: None };
    for h in enumerate_graphs(n)? {
        if iso(g, &h) {
            continue;
        }
        let (value, exact) = match metric {
            Metric::Depth => (depth(g, &h)?, true),
            Metric::Width => (width(g, &h)?, true),
            Metric::CountingDepth(k) => (cd_pair(g, &h, k)?, true),
            Metric::CountingWidth => match cw_pair(g, &h)? {
                CountingWidth::Exact(v) => (GameValue::Finite(v), true),
                CountingWidth::AtLeast(v) => (GameValue::Finite(v), false),
            },
        };
        best.exact &= exact;
        if best.witness.is_none() || value > best.value {
            best.value = value.max(best.value);
            best.witness = Some(h);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, path};

    fn two_triangles() -> Graph {
        disjoint_union(&[cycle(3).unwrap(), cycle(3).unwrap()]).unwrap()
    }

    #[test]
    fn hexagon_against_two_triangles() {
        let c6 = cycle(6).unwrap();
        assert_eq!(cd_pair(&c6, &two_triangles(), 1).unwrap(), GameValue::Infinite);
        assert!(cd_pair(&c6, &two_triangles(), 2).unwrap().is_finite());
        assert_eq!(cw_pair(&c6, &two_triangles()).unwrap(), CountingWidth::Exact(3));
    }

    #[test]
    fn different_orders_take_one_quantifier() {
        let g = path(3).unwrap();
        let h = path(4).unwrap();
        assert_eq!(cd_pair(&g, &h, 1).unwrap(), GameValue::Finite(1));
        assert_eq!(cw_pair(&g, &h).unwrap(), CountingWidth::Exact(1));
    }

    #[test]
    fn cliques_are_told_apart_by_degrees() {
        for n in 2..=5 {
            let kn = complete(n).unwrap();
            for h in enumerate_graphs(n).unwrap() {
                if !iso(&kn, &h) {
                    assert_eq!(cd_pair(&kn, &h, 1).unwrap(), GameValue::Finite(2));
                }
            }
        }
    }

    #[test]
    fn clique_identification() {
        let k4 = complete(4).unwrap();
        assert_eq!(identification(&k4, Metric::Depth).unwrap().value, GameValue::Finite(2));
        let k5 = complete(5).unwrap();
        let cw = identification(&k5, Metric::CountingWidth).unwrap();
        assert_eq!(cw.value, GameValue::Finite(2));
        assert!(cw.exact);
    }
}
