//! Named Spoiler strategies played against an exhaustive Duplicator.
//!
//! Spoiler's moves are a deterministic function of the position; Duplicator
//! tries every answer that keeps the configuration a partial isomorphism.
//! The reported round count is the worst case over all Duplicator play.

use super::plain::{Solver, Switching};
use super::{is_partial_isomorphism, Arena, GameLimits, Pair, Side};
use crate::error::{Error, Result};
use crate::graph::{rooted_code, tree_centers, Graph};
use serde::Serialize;
use std::collections::HashMap;
use std::hash::Hash;

/// Rounds of exact play allowed after the sieve has been pebbled.
const SIEVE_ENDGAME_ROUNDS: u32 = 3;

/// The Spoiler strategies that can be played.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// Three-pebble game seeded with two pairs at different distances:
    /// Spoiler repeatedly pebbles the midpoint of a shortest path in the
    /// graph with the smaller distance.
    HalvingDistance,
    /// G is a tree. Differing diameters or a disconnected H are exploited by
    /// halving; otherwise Spoiler pebbles a centre of G and keeps descending
    /// into a branch that has no isomorphic counterpart on the other side.
    TreeSeparator,
    /// Pebble the weak sieve of G, then finish by exact play of at most three
    /// rounds with at most one change of graph.
    WeakSieve { sieve: Vec<usize> },
}

/// How a strategy fared against every Duplicator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlayOutcome {
    /// Spoiler wins within this many rounds against every Duplicator.
    WonIn(u32),
    /// Some Duplicator survives this many rounds.
    Survived(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlayReport {
    pub outcome: PlayOutcome,
    pub configs_visited: u64,
}

/// Play `strategy` for Spoiler from `initial` (pairs of G- and H-vertices),
/// exploring all Duplicator answers for at most `cap` rounds.
pub fn play(g: &Graph, h: &Graph, strategy: &Strategy, initial: &[(usize, usize)], cap: u32) -> Result<PlayReport> {
    let arena = Arena::new(g, h)?;
    if let Some(&(u, v)) = initial.iter().find(|&&(u, v)| u >= g.order() || v >= h.order()) {
        return Err(Error::Parameter(format!("initial pair ({u}, {v}) is out of range")));
    }
    if !is_partial_isomorphism(g, h, initial) {
        return Ok(PlayReport { outcome: PlayOutcome::WonIn(0), configs_visited: 0 });
    }
    let board: Vec<Pair> = initial.iter().map(|&(u, v)| (u as u8, v as u8)).collect();
    match strategy {
        Strategy::HalvingDistance => {
            let [p, q] = board[..] else {
                return Err(Error::Precondition("halving starts from exactly two pebbled pairs".into()));
            };
            if distance(g, p.0, q.0) == distance(h, p.1, q.1) {
                return Err(Error::Precondition("halving needs the two pairs at different distances".into()));
            }
            Exhaustive::new(arena, Halving { arena }).run(board, (), cap)
        }
        Strategy::TreeSeparator => {
            let policy = TreeSeparator { arena };
            let state = policy.opening()?;
            Exhaustive::new(arena, policy).run(board, state, cap)
        }
        Strategy::WeakSieve { sieve } => {
            if sieve.iter().any(|&x| x >= g.order()) || !crate::analysis::is_weak_sieve(g, sieve) {
                return Err(Error::Precondition("the supplied set is not a weak sieve of G".into()));
            }
            SievePlay::new(arena, sieve)?.run(board, cap)
        }
    }
}

fn distance(g: &Graph, u: u8, v: u8) -> Option<u32> {
    g.distance(u as usize, v as usize)
}

/// A deterministic Spoiler.
trait Policy {
    type State: Clone + Eq + Hash;
    fn next(&self, board: &[Pair], state: &Self::State) -> Result<(Side, usize)>;
    /// The board and state after Duplicator answered with `pair`.
    fn advance(&self, board: &[Pair], state: &Self::State, pair: Pair) -> Result<(Vec<Pair>, Self::State)>;
}

#[derive(Clone, Copy)]
enum Worst {
    Exact(u32),
    Beyond(u32),
}

struct Exhaustive<'a, P: Policy> {
    arena: Arena<'a>,
    policy: P,
    memo: HashMap<(Vec<Pair>, P::State), Worst>,
}

impl<'a, P: Policy> Exhaustive<'a, P> {
    fn new(arena: Arena<'a>, policy: P) -> Self {
        Exhaustive { arena, policy, memo: HashMap::new() }
    }

    fn run(mut self, board: Vec<Pair>, state: P::State, cap: u32) -> Result<PlayReport> {
        let rounds = self.worst(board, state, cap)?;
        let outcome = if rounds <= cap { PlayOutcome::WonIn(rounds) } else { PlayOutcome::Survived(cap) };
        Ok(PlayReport { outcome, configs_visited: self.memo.len() as u64 })
    }

    /// Worst-case rounds until Spoiler wins, or `budget + 1` if some
    /// Duplicator survives `budget` rounds.
    fn worst(&mut self, board: Vec<Pair>, state: P::State, budget: u32) -> Result<u32> {
        if budget == 0 {
            return Ok(1);
        }
        let key = (board, state);
        match self.memo.get(&key) {
            Some(&Worst::Exact(v)) => return Ok(v.min(budget + 1)),
            Some(&Worst::Beyond(b)) if b >= budget => return Ok(budget + 1),
            _ => {}
        }
        let (board, state) = &key;
        let (side, x) = self.policy.next(board, state)?;
        let mut answers = self.arena.replies(board, side, x);
        let mut worst = 1;
        while answers != 0 && worst <= budget {
            let y = answers.trailing_zeros() as usize;
            answers &= answers - 1;
            let (next_board, next_state) = self.policy.advance(board, state, Arena::pair(side, x, y))?;
            worst = worst.max(1 + self.worst(next_board, next_state, budget - 1)?);
        }
        let entry = if worst <= budget { Worst::Exact(worst) } else { Worst::Beyond(budget) };
        self.memo.insert(key, entry);
        Ok(worst.min(budget + 1))
    }
}

/// Midpoint step: the vertex at distance ⌊d/2⌋ from `a` on the shortest
/// `a`–`b` path that always steps to the smallest-index vertex.
fn midpoint(g: &Graph, a: usize, b: usize) -> Result<usize> {
    let d = g.distance(a, b).ok_or_else(|| Error::Domain("midpoint of disconnected vertices".into()))?;
    if d < 2 {
        return Err(Error::Domain("halving reached adjacent vertices without a win".into()));
    }
    let mut cur = b;
    let mut left = d;
    while left > d / 2 {
        cur = g
            .neighbors(cur)
            .iter()
            .map(|&w| w as usize)
            .find(|&w| g.distance(a, w) == Some(left - 1))
            .expect("a shortest path continues towards its source");
        left -= 1;
    }
    Ok(cur)
}

/// The halving move for an active pair of pairs with different distances.
fn halving_move(arena: Arena, p: Pair, q: Pair) -> Result<(Side, usize)> {
    let dg = distance(arena.g, p.0, q.0);
    let dh = distance(arena.h, p.1, q.1);
    // `None` (different components) is larger than every distance.
    let side = match (dg, dh) {
        (Some(a), Some(b)) if a < b => Side::G,
        (Some(_), None) => Side::G,
        (Some(a), Some(b)) if b < a => Side::H,
        (None, Some(_)) => Side::H,
        _ => return Err(Error::Domain("halving pairs lost their distance mismatch".into())),
    };
    let (a, b) = match side {
        Side::G => (p.0, q.0),
        Side::H => (p.1, q.1),
    };
    Ok((side, midpoint(arena.graph(side), a as usize, b as usize)?))
}

/// The new active pair of pairs after the midpoint was answered with `r`.
fn halving_pairs(arena: Arena, p: Pair, q: Pair, r: Pair) -> Result<(Pair, Pair)> {
    let differs = |s: Pair, t: Pair| distance(arena.g, s.0, t.0) != distance(arena.h, s.1, t.1);
    if differs(p, r) {
        Ok((p, r))
    } else if differs(r, q) {
        Ok((r, q))
    } else {
        Err(Error::Domain("both halves keep equal distances".into()))
    }
}

/// Three-pebble halving: the board holds exactly the active pairs.
struct Halving<'a> {
    arena: Arena<'a>,
}

impl Policy for Halving<'_> {
    type State = ();

    fn next(&self, board: &[Pair], _: &()) -> Result<(Side, usize)> {
        halving_move(self.arena, board[0], board[1])
    }

    fn advance(&self, board: &[Pair], _: &(), pair: Pair) -> Result<(Vec<Pair>, ())> {
        let (p, q) = halving_pairs(self.arena, board[0], board[1], pair)?;
        Ok((vec![p, q], ()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum TreeState {
    /// Pebble two vertices of one graph, then halve.
    Opening {
        side: Side,
        targets: [usize; 2],
        placed: bool,
    },
    Halving(Pair, Pair),
    /// Pebble a centre of G.
    Root,
    /// The subtrees below `cur` (away from `parent`) are non-isomorphic.
    Descend {
        cur: Pair,
        parent: Option<Pair>,
    },
}

struct TreeSeparator<'a> {
    arena: Arena<'a>,
}

impl TreeSeparator<'_> {
    fn opening(&self) -> Result<TreeState> {
        let (g, h) = (self.arena.g, self.arena.h);
        if !g.is_tree() {
            return Err(Error::Precondition("the tree strategy needs G to be a tree".into()));
        }
        if !h.is_connected() {
            let far = (1..h.order()).find(|&v| h.distance(0, v).is_none()).expect("disconnected");
            return Ok(TreeState::Opening { side: Side::H, targets: [0, far], placed: false });
        }
        let (dg, dh) = (diameter(g), diameter(h));
        if dg != dh {
            let side = if dg > dh { Side::G } else { Side::H };
            let x = self.arena.graph(side);
            let targets = diametral_pair(x, dg.max(dh));
            return Ok(TreeState::Opening { side, targets, placed: false });
        }
        if !h.is_tree() {
            return Err(Error::Precondition(
                "the tree strategy needs H to be a tree, disconnected, or of a different diameter".into(),
            ));
        }
        Ok(TreeState::Root)
    }

    /// Unpebbled children of `v` (away from `parent`) with their rooted codes.
    fn children(&self, side: Side, board: &[Pair], v: usize, parent: Option<usize>) -> Vec<(usize, Vec<u8>)> {
        let graph = self.arena.graph(side);
        graph
            .neighbors(v)
            .iter()
            .map(|&w| w as usize)
            .filter(|&w| Some(w) != parent && !Arena::pebbled(board, side, w))
            .map(|w| (w, rooted_code(graph, w, Some(v))))
            .collect()
    }

    fn descend(&self, board: &[Pair], cur: Pair, parent: Option<Pair>) -> Result<(Side, usize)> {
        let gc = self.children(Side::G, board, cur.0 as usize, parent.map(|p| p.0 as usize));
        let hc = self.children(Side::H, board, cur.1 as usize, parent.map(|p| p.1 as usize));
        let count = |list: &[(usize, Vec<u8>)], code: &[u8]| list.iter().filter(|(_, c)| c == code).count();
        // A branch with no counterpart at all.
        if let Some((w, _)) = gc.iter().find(|(_, c)| count(&hc, c) == 0) {
            return Ok((Side::G, *w));
        }
        if let Some((w, _)) = hc.iter().find(|(_, c)| count(&gc, c) == 0) {
            return Ok((Side::H, *w));
        }
        // Same branch types, different multiplicities: pebble one more
        // branch of the type on the side where it is more frequent.
        for (side, mine, theirs) in [(Side::G, &gc, &hc), (Side::H, &hc, &gc)] {
            if let Some((w, _)) = mine.iter().find(|(_, c)| count(mine, c) > count(theirs, c)) {
                return Ok((side, *w));
            }
        }
        Err(Error::Domain("tree strategy reached isomorphic subtrees".into()))
    }
}

fn diameter(g: &Graph) -> u32 {
    (0..g.order()).flat_map(|u| g.bfs(u)).max().unwrap_or(0)
}

fn diametral_pair(g: &Graph, diam: u32) -> [usize; 2] {
    (0..g.order())
        .flat_map(|u| (u + 1..g.order()).map(move |v| [u, v]))
        .find(|&[u, v]| g.distance(u, v) == Some(diam))
        .unwrap_or([0, 0])
}

impl Policy for TreeSeparator<'_> {
    type State = TreeState;

    fn next(&self, board: &[Pair], state: &TreeState) -> Result<(Side, usize)> {
        match *state {
            TreeState::Opening { side, targets, placed } => Ok((side, targets[placed as usize])),
            TreeState::Halving(p, q) => halving_move(self.arena, p, q),
            TreeState::Root => Ok((Side::G, tree_centers(self.arena.g)[0])),
            TreeState::Descend { cur, parent } => self.descend(board, cur, parent),
        }
    }

    fn advance(&self, board: &[Pair], state: &TreeState, pair: Pair) -> Result<(Vec<Pair>, TreeState)> {
        let mut next = board.to_vec();
        next.push(pair);
        let state = match *state {
            TreeState::Opening { side, targets, placed: false } => TreeState::Opening { side, targets, placed: true },
            TreeState::Opening { placed: true, .. } => TreeState::Halving(board[board.len() - 1], pair),
            TreeState::Halving(p, q) => {
                let (p, q) = halving_pairs(self.arena, p, q, pair)?;
                TreeState::Halving(p, q)
            }
            TreeState::Root => TreeState::Descend { cur: pair, parent: None },
            TreeState::Descend { cur, parent } => {
                let (g, h) = (self.arena.g, self.arena.h);
                let code_g = rooted_code(g, pair.0 as usize, Some(cur.0 as usize));
                let code_h = rooted_code(h, pair.1 as usize, Some(cur.1 as usize));
                if code_g != code_h {
                    TreeState::Descend { cur: pair, parent: Some(cur) }
                } else {
                    TreeState::Descend { cur, parent }
                }
            }
        };
        Ok((next, state))
    }
}

/// Weak-sieve play: pebble the sieve in G, then play an exact endgame.
struct SievePlay<'a> {
    arena: Arena<'a>,
    sieve: Vec<usize>,
    solver: Solver<'a>,
    memo: HashMap<Vec<Pair>, Worst>,
}

impl<'a> SievePlay<'a> {
    fn new(arena: Arena<'a>, sieve: &[usize]) -> Result<Self> {
        let solver = Solver::new(arena.g, arena.h, &GameLimits::default())?;
        Ok(SievePlay { arena, sieve: sieve.to_vec(), solver, memo: HashMap::new() })
    }

    fn run(mut self, board: Vec<Pair>, cap: u32) -> Result<PlayReport> {
        let rounds = self.worst(board, cap)?;
        let outcome = if rounds <= cap { PlayOutcome::WonIn(rounds) } else { PlayOutcome::Survived(cap) };
        Ok(PlayReport { outcome, configs_visited: self.memo.len() as u64 + self.solver.configs_visited() })
    }

    fn worst(&mut self, mut board: Vec<Pair>, budget: u32) -> Result<u32> {
        if budget == 0 {
            return Ok(1);
        }
        match self.memo.get(&board) {
            Some(&Worst::Exact(v)) => return Ok(v.min(budget + 1)),
            Some(&Worst::Beyond(b)) if b >= budget => return Ok(budget + 1),
            _ => {}
        }
        let next = self.sieve.iter().copied().find(|&x| !Arena::pebbled(&board, Side::G, x));
        let worst = match next {
            Some(x) => {
                let mut answers = self.arena.replies(&board, Side::G, x);
                let mut worst = 1;
                while answers != 0 && worst <= budget {
                    let y = answers.trailing_zeros() as usize;
                    answers &= answers - 1;
                    let mut extended = board.clone();
                    extended.push(Arena::pair(Side::G, x, y));
                    worst = worst.max(1 + self.worst(extended, budget - 1)?);
                }
                worst
            }
            None => {
                // Sieve moves are all in G, so the endgame may switch once.
                let last = (!self.sieve.is_empty()).then_some(Side::G);
                let switching = Switching::Bounded { last, left: 1 };
                let mut found = None;
                for d in 1..=SIEVE_ENDGAME_ROUNDS.min(budget) {
                    if self.solver.spoiler_wins(&mut board, d, switching)? {
                        found = Some(d);
                        break;
                    }
                }
                found.unwrap_or(budget + 1)
            }
        };
        let entry = if worst <= budget { Worst::Exact(worst) } else { Worst::Beyond(budget) };
        self.memo.insert(board, entry);
        Ok(worst.min(budget + 1))
    }
}
