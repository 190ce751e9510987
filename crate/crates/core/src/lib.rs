//! Exact solver and verification harness for the F-isolation game.
//!
//! Two players, Dominator and Staller, alternately select vertices of a graph.
//! A selection is legal when it dominates a vertex lying in a component of
//! `G - N[S]` that still contains a member of the forbidden family `F`. The
//! game ends when no such component is left; Dominator tries to end it
//! quickly and Staller tries to make it last. With `F = {K_2}` this is the
//! isolation game, with `F = {K_1}` the domination game.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod oracle;
pub mod rules;
pub mod solver;

pub use error::{Error, Result};
pub use family::{make_family, FamilySpec};
pub use graph::{Graph, VertexSet};
pub use rules::{ForbiddenFamily, MarkState};
pub use solver::{solve, GameResult, Mover, Solver, SolverConfig};
