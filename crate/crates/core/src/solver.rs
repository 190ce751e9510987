//! Exact minimax values of the F-isolation game.
//!
//! Positions are keyed by `(marked set, mover)`; marking is independent of
//! move order, so that pair determines the rest of the game. Ties between
//! optimal moves resolve to the lowest vertex index.

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rules::{close_marks_cached, initial_closure, ForbiddenFamily, MarkState};

pub const DEFAULT_MEMO_CAP: usize = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mover {
    Dominator,
    Staller,
}

impl Mover {
    pub fn other(self) -> Mover {
        match self {
            Mover::Dominator => Mover::Staller,
            Mover::Staller => Mover::Dominator,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Mover::Dominator => 'D',
            Mover::Staller => 'S',
        }
    }
}

impl fmt::Display for Mover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Mover {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "d" | "dominator" => Ok(Mover::Dominator),
            "s" | "staller" => Ok(Mover::Staller),
            _ => Err(Error::Usage(format!(
                "bad start player {s:?}; expected D or S"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameResult {
    /// Moves remaining under optimal play.
    pub value: usize,
    /// Lowest-index optimal move; `None` at a finished position.
    pub best_move: Option<usize>,
    /// One optimal line of play, `value` moves long.
    pub principal_line: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of memo entries before the search gives up.
    pub memo_cap: usize,
    /// Stop scanning moves once one attains the trivial bound for the mover
    /// (1 for Dominator, the unmarked count for Staller). Values are unchanged.
    pub prune: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            memo_cap: DEFAULT_MEMO_CAP,
            prune: false,
        }
    }
}

const STALLER_BIT: u64 = 1 << 63;

fn key(marked: u64, mover: Mover) -> u64 {
    match mover {
        Mover::Dominator => marked,
        Mover::Staller => marked | STALLER_BIT,
    }
}

/// Memoized solver for one graph and family. Reuse it to share the table
/// across many queries on the same graph.
pub struct Solver<'a> {
    graph: &'a Graph,
    family: &'a ForbiddenFamily,
    config: SolverConfig,
    memo: FxHashMap<u64, u8>,
    forbidden_cache: std::collections::HashMap<u64, bool>,
    full: u64,
}

impl<'a> Solver<'a> {
    pub fn new(graph: &'a Graph, family: &'a ForbiddenFamily) -> Self {
        Self::with_config(graph, family, SolverConfig::default())
    }

    pub fn with_config(
        graph: &'a Graph,
        family: &'a ForbiddenFamily,
        config: SolverConfig,
    ) -> Self {
        Solver {
            graph,
            family,
            config,
            memo: FxHashMap::default(),
            forbidden_cache: Default::default(),
            full: graph.vertices().bits(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn family(&self) -> &ForbiddenFamily {
        self.family
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Marked set after playing `x` from `marked`.
    fn successor(&mut self, marked: u64, x: usize) -> u64 {
        let grown = VertexSet::from_bits(marked).union(self.graph.closed_neighbors(x));
        close_marks_cached(self.graph, self.family, grown, &mut self.forbidden_cache).bits()
    }

    fn playable(&self, marked: u64) -> VertexSet {
        self.graph
            .closed_neighborhood(VertexSet::from_bits(self.full & !marked))
    }

    fn value_of(&mut self, marked: u64, mover: Mover) -> Result<u8> {
        if marked == self.full {
            return Ok(0);
        }
        let k = key(marked, mover);
        if let Some(&v) = self.memo.get(&k) {
            return Ok(v);
        }
        let bound = match mover {
            Mover::Dominator => 1,
            Mover::Staller => (self.full & !marked).count_ones() as u8,
        };
        let mut best: Option<u8> = None;
        for x in self.playable(marked).iter() {
            let next = self.successor(marked, x);
            let v = 1 + self.value_of(next, mover.other())?;
            best = Some(match (best, mover) {
                (None, _) => v,
                (Some(b), Mover::Dominator) => b.min(v),
                (Some(b), Mover::Staller) => b.max(v),
            });
            if self.config.prune && v == bound {
                break;
            }
        }
        let v = best.expect("a non-terminal position has a playable vertex");
        if self.memo.len() >= self.config.memo_cap {
            return Err(Error::StateSpaceBudgetExceeded {
                cap: self.config.memo_cap,
            });
        }
        self.memo.insert(k, v);
        Ok(v)
    }

    /// Game value from `state` with `mover` to play.
    pub fn value(&mut self, state: &MarkState, mover: Mover) -> Result<usize> {
        self.value_of(state.marked().bits(), mover).map(usize::from)
    }

    /// Successor values `(x, 1 + value)` for every playable `x`.
    fn scored_moves(&mut self, marked: u64, mover: Mover) -> Result<Vec<(usize, u8)>> {
        let mut out = Vec::new();
        for x in self.playable(marked).iter() {
            let next = self.successor(marked, x);
            out.push((x, 1 + self.value_of(next, mover.other())?));
        }
        Ok(out)
    }

    fn best_move(&mut self, marked: u64, mover: Mover) -> Result<Option<usize>> {
        if marked == self.full {
            return Ok(None);
        }
        let target = self.value_of(marked, mover)?;
        for x in self.playable(marked).iter() {
            let next = self.successor(marked, x);
            if 1 + self.value_of(next, mover.other())? == target {
                return Ok(Some(x));
            }
        }
        unreachable!("the stored value is attained by some move")
    }

    pub fn game_value(&mut self, state: &MarkState, mover: Mover) -> Result<GameResult> {
        let value = self.value(state, mover)?;
        let mut marked = state.marked().bits();
        let mut turn = mover;
        let mut line = Vec::with_capacity(value);
        while let Some(x) = self.best_move(marked, turn)? {
            line.push(x);
            marked = self.successor(marked, x);
            turn = turn.other();
        }
        debug_assert_eq!(line.len(), value);
        Ok(GameResult {
            value,
            best_move: line.first().copied(),
            principal_line: line,
        })
    }

    /// Every playable vertex that attains the optimum for `mover`.
    pub fn optimal_moves(&mut self, state: &MarkState, mover: Mover) -> Result<VertexSet> {
        let marked = state.marked().bits();
        if marked == self.full {
            return Err(Error::TerminalState);
        }
        let target = self.value_of(marked, mover)?;
        Ok(self
            .scored_moves(marked, mover)?
            .into_iter()
            .filter(|&(_, v)| v == target)
            .map(|(x, _)| x)
            .collect())
    }
}

pub fn game_value(
    g: &Graph,
    fam: &ForbiddenFamily,
    start: &MarkState,
    mover: Mover,
) -> Result<GameResult> {
    Solver::new(g, fam).game_value(start, mover)
}

pub fn optimal_moves(
    g: &Graph,
    fam: &ForbiddenFamily,
    state: &MarkState,
    mover: Mover,
) -> Result<VertexSet> {
    Solver::new(g, fam).optimal_moves(state, mover)
}

/// Closes `initial_marks` and solves from there.
pub fn solve(
    g: &Graph,
    fam: &ForbiddenFamily,
    start_player: Mover,
    initial_marks: VertexSet,
) -> Result<GameResult> {
    let start = initial_closure(g, fam, initial_marks);
    game_value(g, fam, &start, start_player)
}

/// `ι_g` (`Mover::Dominator`) or `ι_g'` (`Mover::Staller`) of an unmarked graph.
pub fn game_number(g: &Graph, fam: &ForbiddenFamily, start_player: Mover) -> Result<usize> {
    let start = initial_closure(g, fam, VertexSet::EMPTY);
    Solver::new(g, fam).value(&start, start_player)
}
