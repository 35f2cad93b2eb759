//! The k-pebble game, solved by a retrograde attractor computation.
//!
//! Positions where Spoiler is to move are the partial isomorphisms with at
//! most k−1 pebbled pairs (with a free pebble in hand, keeping more pebbles
//! on the board never hurts Spoiler). A move places the free pebble; if the
//! board then carries k pairs, Spoiler lifts one of them before his next
//! move. Every Spoiler move keeps a counter of Duplicator answers not yet
//! known to lose; positions are settled in order of increasing value, so the
//! first settlement of a position is its exact value and positions never
//! settled are Duplicator wins (value ∞).

use super::{depth_cap, require_non_isomorphic, Arena, GameLimits, GameReport, Pair, Side};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::value::GameValue;
use std::collections::HashMap;

/// Largest pebble count: positions are packed into 128-bit keys.
pub const MAX_PEBBLES: usize = 9;
const CODE_BITS: u32 = 13;
const NONE: u32 = u32::MAX;

fn code(p: Pair) -> u128 {
    // Offset by one so that an empty slot differs from the pair (0, 0).
    ((p.0 as u128) << 6 | p.1 as u128) + 1
}

fn decode(c: u128) -> Pair {
    let c = c - 1;
    ((c >> 6) as u8, (c & 63) as u8)
}

fn pack(pairs: &[Pair]) -> u128 {
    let mut codes: Vec<u128> = pairs.iter().map(|&p| code(p)).collect();
    codes.sort_unstable();
    codes.iter().fold(0, |key, &c| key << CODE_BITS | c)
}

fn unpack(mut key: u128) -> Vec<Pair> {
    let mut pairs = Vec::new();
    while key != 0 {
        pairs.push(decode(key & ((1 << CODE_BITS) - 1)));
        key >>= CODE_BITS;
    }
    pairs.reverse();
    pairs
}

struct Attractor<'a> {
    arena: Arena<'a>,
    k: usize,
    stride: usize,
    keys: Vec<u128>,
    index: HashMap<u128, u32>,
    /// Unrefuted answers per (position, side, vertex); only meaningful for
    /// moves onto unpebbled vertices.
    pending: Vec<u8>,
    value: Vec<u32>,
    buckets: Vec<Vec<u32>>,
}

impl<'a> Attractor<'a> {
    fn new(g: &'a Graph, h: &'a Graph, k: usize, limits: &GameLimits) -> Result<Self> {
        let arena = Arena::new(g, h)?;
        let stride = g.order().max(h.order());
        let mut attractor = Attractor {
            arena,
            k,
            stride,
            keys: vec![0],
            index: HashMap::from([(0, 0)]),
            pending: Vec::new(),
            value: Vec::new(),
            buckets: vec![Vec::new(), Vec::new()],
        };
        attractor.enumerate(limits.pebble_states)?;
        Ok(attractor)
    }

    /// All partial isomorphisms with at most k−1 pairs, each listed once.
    fn enumerate(&mut self, limit: usize) -> Result<()> {
        let mut level = vec![0u128];
        for _ in 1..self.k {
            let mut next = Vec::new();
            for &key in &level {
                let pairs = unpack(key);
                let last = pairs.last().map_or(0, |&p| code(p));
                for x in 0..self.arena.g.order() {
                    if Arena::pebbled(&pairs, Side::G, x) {
                        continue;
                    }
                    let mut mask = self.arena.replies(&pairs, Side::G, x);
                    while mask != 0 {
                        let y = mask.trailing_zeros() as usize;
                        mask &= mask - 1;
                        let p = (x as u8, y as u8);
                        if code(p) > last {
                            next.push(key << CODE_BITS | code(p));
                        }
                    }
                }
            }
            for &key in &next {
                if self.keys.len() >= limit {
                    return Err(Error::Resource(format!("the {}-pebble game has more than {limit} positions", self.k)));
                }
                self.index.insert(key, self.keys.len() as u32);
                self.keys.push(key);
            }
            level = next;
        }
        Ok(())
    }

    fn slot(&self, position: u32, side: Side, x: usize) -> usize {
        position as usize * 2 * self.stride + side as usize * self.stride + x
    }

    fn schedule(&mut self, position: u32, value: u32) {
        let v = value as usize;
        if self.buckets.len() <= v {
            self.buckets.resize(v + 1, Vec::new());
        }
        self.buckets[v].push(position);
    }

    /// One more answer to Spoiler's move `x` on `side` from `position` is
    /// known to lose within `value` rounds.
    fn refute(&mut self, position: u32, side: Side, x: usize, value: u32) {
        let slot = self.slot(position, side, x);
        self.pending[slot] -= 1;
        if self.pending[slot] == 0 && self.value[position as usize] == NONE {
            self.schedule(position, value + 1);
        }
    }

    /// The board `pairs` (after Duplicator's answer) is won for Spoiler
    /// within `value` rounds: update every move leading to it.
    fn board_won(&mut self, pairs: &[Pair], value: u32) {
        for (i, &(a, b)) in pairs.iter().enumerate() {
            let mut rest = pairs.to_vec();
            rest.remove(i);
            let position = self.index[&pack(&rest)];
            self.refute(position, Side::G, a as usize, value);
            self.refute(position, Side::H, b as usize, value);
        }
    }

    fn solve(&mut self) -> (GameValue, u32) {
        let n = self.keys.len();
        self.pending = vec![0; n * 2 * self.stride];
        self.value = vec![NONE; n];
        for position in 0..n as u32 {
            let pairs = unpack(self.keys[position as usize]);
            let mut immediate = false;
            for side in [Side::G, Side::H] {
                for x in 0..self.arena.graph(side).order() {
                    if Arena::pebbled(&pairs, side, x) {
                        continue;
                    }
                    let answers = self.arena.replies(&pairs, side, x).count_ones();
                    let slot = self.slot(position, side, x);
                    self.pending[slot] = answers as u8;
                    immediate |= answers == 0;
                }
            }
            if immediate {
                self.schedule(position, 1);
            }
        }
        let mut round = 1;
        while round < self.buckets.len() {
            let bucket = std::mem::take(&mut self.buckets[round]);
            for position in bucket {
                if self.value[position as usize] != NONE {
                    continue;
                }
                self.value[position as usize] = round as u32;
                if position == 0 {
                    return (GameValue::Finite(round as u32), round as u32);
                }
                self.settle(position, round as u32);
            }
            round += 1;
        }
        (GameValue::Infinite, round as u32 - 1)
    }

    fn settle(&mut self, position: u32, value: u32) {
        let pairs = unpack(self.keys[position as usize]);
        // The position itself is the board after a move that left a pebble
        // in Spoiler's hand.
        self.board_won(&pairs, value);
        if pairs.len() + 1 != self.k {
            return;
        }
        // Full boards containing this position: Spoiler lifts the extra
        // pebble. A full board inherits the value of its first settled
        // sub-position, so skip boards with an earlier settled one.
        let mut full = pairs.clone();
        for x in 0..self.arena.g.order() {
            if Arena::pebbled(&pairs, Side::G, x) {
                continue;
            }
            let mut mask = self.arena.replies(&pairs, Side::G, x);
            while mask != 0 {
                let y = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                full.push((x as u8, y as u8));
                let earlier = (0..pairs.len()).any(|i| {
                    let mut rest = full.clone();
                    rest.remove(i);
                    self.value[self.index[&pack(&rest)] as usize] != NONE && self.index[&pack(&rest)] != position
                });
                if !earlier {
                    let board = full.clone();
                    self.board_won(&board, value);
                }
                full.pop();
            }
        }
    }
}

/// D^k(G,H): the least r such that Spoiler wins the r-round game with k
/// pebbles per graph, or ∞.
pub fn pebble_depth(g: &Graph, h: &Graph, k: usize) -> Result<GameValue> {
    Ok(pebble_report(g, h, k, &GameLimits::default())?.value)
}

pub fn pebble_report(g: &Graph, h: &Graph, k: usize, limits: &GameLimits) -> Result<GameReport> {
    if k == 0 {
        return Err(Error::Parameter("the pebble game needs at least one pebble".into()));
    }
    if k > MAX_PEBBLES {
        return Err(Error::Resource(format!("at most {MAX_PEBBLES} pebbles are supported; got {k}")));
    }
    require_non_isomorphic(g, h)?;
    let mut attractor = Attractor::new(g, h, k, limits)?;
    let (value, rounds) = attractor.solve();
    Ok(GameReport { value, rounds_explored: rounds, configs_visited: attractor.keys.len() as u64 })
}

/// W(G,H): the least k for which Spoiler eventually wins the k-pebble game.
pub fn width(g: &Graph, h: &Graph) -> Result<GameValue> {
    Ok(width_report(g, h, &GameLimits::default())?.value)
}

pub fn width_report(g: &Graph, h: &Graph, limits: &GameLimits) -> Result<GameReport> {
    require_non_isomorphic(g, h)?;
    let mut visited = 0;
    for k in 1..=depth_cap(g, h) as usize {
        let report = pebble_report(g, h, k, limits)?;
        visited += report.configs_visited;
        if report.value.is_finite() {
            return Ok(GameReport {
                value: GameValue::Finite(k as u32),
                rounds_explored: k as u32,
                configs_visited: visited,
            });
        }
    }
    Err(Error::Domain("no finite pebble count found on non-isomorphic graphs".into()))
}
