//! Naive reference computations used to cross-check the solver.
//!
//! Nothing here touches the solver's memo table: isolation numbers come from
//! plain subset enumeration, game values from unmemoized tree recursion over
//! the shared rulebook.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rules::{apply_move, playable, ForbiddenFamily, MarkState};
use crate::solver::Mover;

pub const ISOLATION_ORDER_CAP: usize = 24;
pub const NAIVE_GAME_ORDER_CAP: usize = 7;

/// A minimum F-isolating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolationCertificate {
    pub witness: VertexSet,
    pub size: usize,
}

/// True iff every component of `G - N[s]` is F-forbidden.
pub fn is_isolating(g: &Graph, fam: &ForbiddenFamily, s: VertexSet) -> bool {
    let rest = g.vertices().difference(g.closed_neighborhood(s));
    g.components(rest)
        .into_iter()
        .all(|c| fam.is_forbidden_component(g, c))
}

/// `ι(G, F)` with the lexicographically least minimum witness.
pub fn isolation_number(g: &Graph, fam: &ForbiddenFamily) -> Result<IsolationCertificate> {
    let n = g.order();
    if n > ISOLATION_ORDER_CAP {
        return Err(Error::BudgetExceeded(format!(
            "isolation_number supports order <= {ISOLATION_ORDER_CAP}, got {n}"
        )));
    }
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            let s: VertexSet = combo.into_iter().collect();
            if is_isolating(g, fam, s) {
                return Ok(IsolationCertificate { witness: s, size });
            }
        }
    }
    unreachable!("the full vertex set is always isolating")
}

/// Game value by exhaustive recursion without any table.
pub fn naive_game_value(
    g: &Graph,
    fam: &ForbiddenFamily,
    start: &MarkState,
    mover: Mover,
) -> Result<usize> {
    if g.order() > NAIVE_GAME_ORDER_CAP {
        return Err(Error::BudgetExceeded(format!(
            "naive_game_value supports order <= {NAIVE_GAME_ORDER_CAP}, got {}",
            g.order()
        )));
    }
    Ok(expand(g, fam, start, mover))
}

fn expand(g: &Graph, fam: &ForbiddenFamily, state: &MarkState, mover: Mover) -> usize {
    let moves = playable(g, state);
    if moves.is_empty() {
        return 0;
    }
    let values = moves.iter().map(|x| {
        let next = apply_move(g, state, fam, x).expect("playable move");
        1 + expand(g, fam, &next, mover.other())
    });
    match mover {
        Mover::Dominator => values.min().unwrap(),
        Mover::Staller => values.max().unwrap(),
    }
}
