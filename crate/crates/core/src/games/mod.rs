//! Ehrenfeucht games on pairs of graphs: exact solvers for the plain,
//! pebble and alternation-bounded variants, and named Spoiler strategies
//! played against an exhaustive Duplicator.
//!
//! A configuration is a list of pebbled pairs `(u, v)` with `u ∈ V(G)` and
//! `v ∈ V(H)`; Duplicator survives as long as the pairs form a partial
//! isomorphism. All engines work on graphs of at most [`MAX_GAME_ORDER`]
//! vertices, where neighbourhoods fit a single machine word.

mod pebble;
mod plain;
mod play;

pub use pebble::{pebble_depth, pebble_report, width, width_report};
pub use plain::{alt_depth, alt_report, depth, depth_report};
pub use play::{play, PlayOutcome, PlayReport, Strategy};

use crate::error::{Error, Result};
use crate::graph::{iso, Graph, WORD_ORDER};
use crate::value::GameValue;
use serde::Serialize;

/// Largest order accepted by the game engines.
pub const MAX_GAME_ORDER: usize = WORD_ORDER;

/// The graph Spoiler moves in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    G,
    H,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::G => Side::H,
            Side::H => Side::G,
        }
    }
}

/// A pebbled pair: a vertex of G and a vertex of H.
pub(crate) type Pair = (u8, u8);

/// Resource limits shared by the solvers. Exceeding a limit is reported as
/// [`Error::Resource`]; the solvers never silently degrade.
#[derive(Debug, Clone)]
pub struct GameLimits {
    /// Maximum number of memo entries of the plain and alternation solvers.
    pub memo_entries: usize,
    /// Maximum number of positions of the pebble solver.
    pub pebble_states: usize,
    /// Canonicalise memo keys under the automorphism groups of both graphs.
    pub symmetry: bool,
}

impl Default for GameLimits {
    fn default() -> Self {
        GameLimits { memo_entries: 20_000_000, pebble_states: 8_000_000, symmetry: true }
    }
}

/// The value of a game together with search statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameReport {
    pub value: GameValue,
    pub rounds_explored: u32,
    pub configs_visited: u64,
}

/// Both graphs of a game, with single-word reply computation.
#[derive(Clone, Copy)]
pub(crate) struct Arena<'a> {
    pub g: &'a Graph,
    pub h: &'a Graph,
}

impl<'a> Arena<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph) -> Result<Self> {
        for graph in [g, h] {
            if graph.order() > MAX_GAME_ORDER {
                return Err(Error::Resource(format!(
                    "game engines handle at most {MAX_GAME_ORDER} vertices; got {}",
                    graph.order()
                )));
            }
        }
        Ok(Arena { g, h })
    }

    pub fn graph(&self, side: Side) -> &'a Graph {
        match side {
            Side::G => self.g,
            Side::H => self.h,
        }
    }

    /// Duplicator's legal answers (as a bitmask over the other graph) when
    /// Spoiler pebbles `x` on `side`: the answers that keep the enlarged
    /// configuration a partial isomorphism.
    pub fn replies(&self, pairs: &[Pair], side: Side, x: usize) -> u64 {
        let (from, to) = match side {
            Side::G => (self.g, self.h),
            Side::H => (self.h, self.g),
        };
        let mut mask = to.vertex_mask();
        for &(a, b) in pairs {
            let (p, q) = match side {
                Side::G => (a as usize, b as usize),
                Side::H => (b as usize, a as usize),
            };
            if p == x {
                mask &= 1 << q;
            } else {
                mask &= !(1 << q);
                let row = to.row64(q);
                mask &= if from.adjacent(x, p) { row } else { !row };
            }
        }
        mask
    }

    /// Whether `x` already carries a pebble on `side`.
    pub fn pebbled(pairs: &[Pair], side: Side, x: usize) -> bool {
        pairs.iter().any(|&(a, b)| match side {
            Side::G => a as usize == x,
            Side::H => b as usize == x,
        })
    }

    /// Orient a Spoiler move and Duplicator's answer as a (G, H) pair.
    pub fn pair(side: Side, x: usize, y: usize) -> Pair {
        match side {
            Side::G => (x as u8, y as u8),
            Side::H => (y as u8, x as u8),
        }
    }
}

/// Whether the pairs `(u_i, v_i)` define a partial isomorphism from G to H:
/// `u_i = u_j ⇔ v_i = v_j` and `u_i ~ u_j ⇔ v_i ~ v_j`.
pub fn is_partial_isomorphism(g: &Graph, h: &Graph, pairs: &[(usize, usize)]) -> bool {
    pairs.iter().enumerate().all(|(i, &(u, v))| {
        u < g.order()
            && v < h.order()
            && pairs[..i].iter().all(|&(a, b)| (a == u) == (b == v) && g.adjacent(a, u) == h.adjacent(b, v))
    })
}

pub(crate) fn require_non_isomorphic(g: &Graph, h: &Graph) -> Result<()> {
    if iso(g, h) {
        Err(Error::Precondition("the two graphs are isomorphic; every game value is infinite".into()))
    } else {
        Ok(())
    }
}

/// The round cap justified by the generic defining sentence.
pub(crate) fn depth_cap(g: &Graph, h: &Graph) -> u32 {
    g.order().min(h.order()) as u32 + 1
}
