//! The r-round game with unboundedly many pebbles, optionally with a bound on
//! how often Spoiler may switch graphs.

use super::{depth_cap, require_non_isomorphic, Arena, GameLimits, GameReport, Pair, Side};
use crate::error::{Error, Result};
use crate::graph::{automorphisms, Graph};
use crate::value::GameValue;
use std::collections::HashMap;

/// Largest order for which memo keys are canonicalised under automorphisms.
const SYMMETRY_ORDER: usize = 12;
/// Largest |Aut(G)|·|Aut(H)| for which canonicalisation pays off.
const SYMMETRY_GROUP_LIMIT: usize = 256;

/// Spoiler's switching allowance in the alternation-bounded game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Switching {
    Free,
    Bounded { last: Option<Side>, left: u8 },
}

impl Switching {
    /// The allowance after a move on `side`, if that move is permitted.
    fn after(self, side: Side) -> Option<Switching> {
        match self {
            Switching::Free => Some(Switching::Free),
            Switching::Bounded { last: Some(last), left } if last != side => {
                (left > 0).then(|| Switching::Bounded { last: Some(side), left: left - 1 })
            }
            Switching::Bounded { left, .. } => Some(Switching::Bounded { last: Some(side), left }),
        }
    }

    fn key(self) -> u16 {
        match self {
            Switching::Free => u16::MAX,
            Switching::Bounded { last, left } => {
                let l = match last {
                    None => 0,
                    Some(Side::G) => 1,
                    Some(Side::H) => 2,
                };
                (l << 8) | left as u16
            }
        }
    }
}

/// Known outcome bounds of a position: Spoiler wins with `d` remaining
/// rounds iff `d ≥ win_from`; Duplicator survives for all `d ≤ safe_upto`.
#[derive(Clone, Copy)]
struct Bounds {
    safe_upto: u32,
    win_from: u32,
}

/// Automorphism groups of the two graphs, each as a list of vertex maps.
type Automorphisms = (Vec<Vec<usize>>, Vec<Vec<usize>>);

/// Memoised back-and-forth solver for one pair of graphs.
pub(crate) struct Solver<'a> {
    arena: Arena<'a>,
    memo: HashMap<Vec<u16>, Bounds>,
    symmetry: Option<Automorphisms>,
    memo_limit: usize,
}

impl<'a> Solver<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph, limits: &GameLimits) -> Result<Self> {
        let arena = Arena::new(g, h)?;
        let symmetry = (limits.symmetry && g.order().max(h.order()) <= SYMMETRY_ORDER)
            .then(|| {
                let ag = automorphisms(g, SYMMETRY_GROUP_LIMIT)?;
                let ah = automorphisms(h, SYMMETRY_GROUP_LIMIT / ag.len())?;
                (ag.len() * ah.len() > 1).then_some((ag, ah))
            })
            .flatten();
        Ok(Solver { arena, memo: HashMap::new(), symmetry, memo_limit: limits.memo_entries })
    }

    pub fn configs_visited(&self) -> u64 {
        self.memo.len() as u64
    }

    fn key(&self, pairs: &[Pair], switching: Switching) -> Vec<u16> {
        let encode = |a: usize, b: usize| (a as u16) << 6 | b as u16;
        let mut best: Vec<u16> = pairs.iter().map(|&(a, b)| encode(a as usize, b as usize)).collect();
        best.sort_unstable();
        if let Some((ag, ah)) = &self.symmetry {
            let mut candidate = Vec::with_capacity(pairs.len());
            for sg in ag {
                for sh in ah {
                    candidate.clear();
                    candidate.extend(pairs.iter().map(|&(a, b)| encode(sg[a as usize], sh[b as usize])));
                    candidate.sort_unstable();
                    if candidate < best {
                        std::mem::swap(&mut candidate, &mut best);
                    }
                }
            }
        }
        best.push(switching.key());
        best
    }

    /// Whether Spoiler wins within `rounds` further rounds from the given
    /// partial isomorphism under the given switching allowance.
    pub fn spoiler_wins(&mut self, pairs: &mut Vec<Pair>, rounds: u32, switching: Switching) -> Result<bool> {
        if rounds == 0 {
            return Ok(false);
        }
        let key = self.key(pairs, switching);
        if let Some(b) = self.memo.get(&key) {
            if rounds >= b.win_from {
                return Ok(true);
            }
            if rounds <= b.safe_upto {
                return Ok(false);
            }
        }
        let wins = self.search(pairs, rounds, switching)?;
        if self.memo.len() >= self.memo_limit && !self.memo.contains_key(&key) {
            return Err(Error::Resource(format!(
                "game memo exceeded {} configurations; the pebble-bounded game may be tractable",
                self.memo_limit
            )));
        }
        let entry = self.memo.entry(key).or_insert(Bounds { safe_upto: 0, win_from: u32::MAX });
        if wins {
            entry.win_from = entry.win_from.min(rounds);
        } else {
            entry.safe_upto = entry.safe_upto.max(rounds);
        }
        Ok(wins)
    }

    fn search(&mut self, pairs: &mut Vec<Pair>, rounds: u32, switching: Switching) -> Result<bool> {
        let mut moves = Vec::new();
        for side in [Side::G, Side::H] {
            let Some(next) = switching.after(side) else { continue };
            for x in 0..self.arena.graph(side).order() {
                if Arena::pebbled(pairs, side, x) {
                    continue;
                }
                let mask = self.arena.replies(pairs, side, x);
                if mask == 0 {
                    return Ok(true);
                }
                moves.push((mask.count_ones(), side, x, mask, next));
            }
        }
        if rounds == 1 {
            return Ok(false);
        }
        // Moves leaving Duplicator few options refute fastest.
        moves.sort_by_key(|m| m.0);
        for (_, side, x, mut mask, next) in moves {
            let mut all_lose = true;
            while mask != 0 {
                let y = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                pairs.push(Arena::pair(side, x, y));
                let won = self.spoiler_wins(pairs, rounds - 1, next);
                pairs.pop();
                if !won? {
                    all_lose = false;
                    break;
                }
            }
            if all_lose {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The least number of rounds Spoiler needs from the empty configuration,
    /// searching up to `cap`.
    fn value(&mut self, switching: Switching, cap: u32) -> Result<(Option<u32>, u32)> {
        let mut pairs = Vec::new();
        for r in 1..=cap {
            if self.spoiler_wins(&mut pairs, r, switching)? {
                return Ok((Some(r), r));
            }
        }
        Ok((None, cap))
    }
}

/// D(G,H): the least r such that Spoiler wins the r-round game.
pub fn depth(g: &Graph, h: &Graph) -> Result<GameValue> {
    Ok(depth_report(g, h, &GameLimits::default())?.value)
}

pub fn depth_report(g: &Graph, h: &Graph, limits: &GameLimits) -> Result<GameReport> {
    require_non_isomorphic(g, h)?;
    run(g, h, Switching::Free, limits)
}

/// D_a(G,H): as [`depth`] but Spoiler may change graphs at most `a` times
/// (the first move is free).
pub fn alt_depth(g: &Graph, h: &Graph, a: u32) -> Result<GameValue> {
    Ok(alt_report(g, h, a, &GameLimits::default())?.value)
}

pub fn alt_report(g: &Graph, h: &Graph, a: u32, limits: &GameLimits) -> Result<GameReport> {
    require_non_isomorphic(g, h)?;
    // With a switch before every round but the first the budget cannot bind.
    let switching =
        if a + 1 >= depth_cap(g, h) { Switching::Free } else { Switching::Bounded { last: None, left: a as u8 } };
    run(g, h, switching, limits)
}

fn run(g: &Graph, h: &Graph, switching: Switching, limits: &GameLimits) -> Result<GameReport> {
    let cap = depth_cap(g, h);
    let mut solver = Solver::new(g, h, limits)?;
    let (value, explored) = solver.value(switching, cap)?;
    let value =
        value.ok_or_else(|| Error::Domain(format!("no Spoiler win within {cap} rounds on non-isomorphic graphs")))?;
    Ok(GameReport {
        value: GameValue::Finite(value),
        rounds_explored: explored,
        configs_visited: solver.configs_visited(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, disjoint_union, empty, path};

    fn fin(v: u32) -> GameValue {
        GameValue::Finite(v)
    }

    #[test]
    fn edge_against_two_isolated_vertices() {
        let k2 = complete(2).unwrap();
        let e2 = empty(2).unwrap();
        assert_eq!(depth(&k2, &e2).unwrap(), fin(2));
        assert_eq!(alt_depth(&k2, &e2, 0).unwrap(), fin(2));
    }

    #[test]
    fn cliques_need_one_more_round_than_the_smaller_order() {
        for n in 1..5 {
            for m in n + 1..=5 {
                let value = depth(&complete(n).unwrap(), &complete(m).unwrap()).unwrap();
                assert_eq!(value, fin(n as u32 + 1), "K{n} vs K{m}");
            }
        }
    }

    #[test]
    fn isomorphic_inputs_are_rejected() {
        let g = path(4).unwrap();
        let h = g.relabel(&[3, 1, 0, 2]);
        assert!(matches!(depth(&g, &h), Err(Error::Precondition(_))));
    }

    #[test]
    fn unions_of_paths_survive_two_rounds() {
        let p4 = path(4).unwrap();
        let two = disjoint_union(&[p4.clone(), p4.clone()]).unwrap();
        let three = disjoint_union(&[p4.clone(), p4.clone(), p4]).unwrap();
        let mut solver = Solver::new(&two, &three, &GameLimits::default()).unwrap();
        assert!(!solver.spoiler_wins(&mut Vec::new(), 2, Switching::Free).unwrap());
    }

    #[test]
    fn symmetry_reduction_does_not_change_values() {
        let graphs: Vec<Graph> = (1..=4).flat_map(|n| crate::graph::enumerate_graphs(n).unwrap()).collect();
        let plain = GameLimits { symmetry: false, ..GameLimits::default() };
        for g in &graphs {
            for h in &graphs {
                if g == h {
                    continue;
                }
                let a = depth_report(g, h, &GameLimits::default()).unwrap().value;
                let b = depth_report(g, h, &plain).unwrap().value;
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn memo_budget_is_enforced() {
        let limits = GameLimits { memo_entries: 3, symmetry: false, ..GameLimits::default() };
        let g = path(5).unwrap();
        let h = crate::graph::cycle(5).unwrap();
        assert!(depth_report(&g, &h, &limits).unwrap_err().is_resource());
    }
}
