//! Forbidden families, the marking rule and move legality.
//!
//! A component is *F-forbidden* when it contains no pattern of the family as
//! a (not necessarily induced) subgraph. A vertex is marked once it lies in
//! `N[S]` for the played set `S` or inside an F-forbidden component of the
//! rest; a vertex is playable while its closed neighborhood still holds an
//! unmarked vertex.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::family::parse_edge_list;
use crate::graph::{Graph, VertexSet};

pub const MAX_PATTERN_ORDER: usize = 6;

/// How a pattern is tested against a connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shortcut {
    /// Contained iff the component has at least this many vertices. Holds for
    /// edgeless patterns, and for `K_2` and `P_3` inside connected hosts.
    MinOrder(usize),
    Search,
}

fn shortcut_for(p: &Graph) -> Shortcut {
    let k = p.order();
    let m = p.edge_count();
    if m == 0 {
        return Shortcut::MinOrder(k);
    }
    if p.is_connected() && ((k == 2 && m == 1) || (k == 3 && m == 2)) {
        return Shortcut::MinOrder(k);
    }
    Shortcut::Search
}

#[derive(Clone)]
pub struct ForbiddenFamily {
    tag: String,
    patterns: Vec<Graph>,
    shortcuts: Vec<Shortcut>,
}

impl ForbiddenFamily {
    pub fn new(tag: impl Into<String>, patterns: Vec<Graph>) -> Result<Self> {
        if let Some(p) = patterns.iter().find(|p| p.order() > MAX_PATTERN_ORDER) {
            return Err(Error::PatternTooLarge(p.order()));
        }
        let shortcuts = patterns.iter().map(shortcut_for).collect();
        Ok(ForbiddenFamily {
            tag: tag.into(),
            patterns,
            shortcuts,
        })
    }

    /// `{K_1}`: the domination game.
    pub fn k1() -> Self {
        Self::new("K1", vec![Graph::empty(1).unwrap()]).unwrap()
    }

    /// `{K_2}`: the isolation game.
    pub fn k2() -> Self {
        Self::new("K2", vec![Graph::new(2, &[(0, 1)]).unwrap()]).unwrap()
    }

    /// `{P_3}`.
    pub fn p3() -> Self {
        Self::new("P3", vec![Graph::new(3, &[(0, 1), (1, 2)]).unwrap()]).unwrap()
    }

    /// The empty family; every component is vacuously forbidden.
    pub fn none() -> Self {
        Self::new("none", Vec::new()).unwrap()
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn patterns(&self) -> &[Graph] {
        &self.patterns
    }

    /// True when every pattern is decided by component order alone, so the
    /// forbidden test never needs a subgraph search.
    pub(crate) fn is_order_determined(&self) -> bool {
        self.shortcuts
            .iter()
            .all(|s| matches!(s, Shortcut::MinOrder(_)))
    }

    /// F-forbidden test for a connected vertex set `comp`.
    pub fn is_forbidden_component(&self, g: &Graph, comp: VertexSet) -> bool {
        let size = comp.len();
        !self
            .patterns
            .iter()
            .zip(&self.shortcuts)
            .any(|(p, s)| match *s {
                Shortcut::MinOrder(k) => size >= k,
                Shortcut::Search => search(g, comp, p),
            })
    }
}

impl fmt::Debug for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ForbiddenFamily({})", self.tag)
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag)
    }
}

impl FromStr for ForbiddenFamily {
    type Err = Error;

    /// `K1`, `K2`, `P3`, `none`, or `custom:<order>:<u-v,...>`; several
    /// patterns are joined with `;`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.eq_ignore_ascii_case("none") {
            return Ok(Self::none());
        }
        let mut patterns = Vec::new();
        for part in s.split(';') {
            let part = part.trim();
            match part.to_ascii_uppercase().as_str() {
                "K1" => patterns.push(Graph::empty(1)?),
                "K2" => patterns.push(Graph::new(2, &[(0, 1)])?),
                "P3" => patterns.push(Graph::new(3, &[(0, 1), (1, 2)])?),
                _ => {
                    let rest = part
                        .strip_prefix("custom:")
                        .ok_or_else(|| Error::BadSpec(format!("unknown pattern {part:?}")))?;
                    let (n, edges) = rest.split_once(':').unwrap_or((rest, ""));
                    let n: usize = n
                        .trim()
                        .parse()
                        .map_err(|_| Error::BadSpec(format!("bad pattern order in {part:?}")))?;
                    if n > MAX_PATTERN_ORDER {
                        return Err(Error::PatternTooLarge(n));
                    }
                    patterns.push(Graph::new(n, &parse_edge_list(edges)?)?);
                }
            }
        }
        Self::new(s, patterns)
    }
}

/// True iff `g[within]` contains `pattern` as a subgraph.
pub fn contains_pattern(g: &Graph, within: VertexSet, pattern: &Graph) -> Result<bool> {
    if pattern.order() > MAX_PATTERN_ORDER {
        return Err(Error::PatternTooLarge(pattern.order()));
    }
    Ok(search(g, within, pattern))
}

fn search(g: &Graph, within: VertexSet, pattern: &Graph) -> bool {
    let k = pattern.order();
    if k == 0 {
        return true;
    }
    if within.len() < k || g.induced_edge_count(within) < pattern.edge_count() {
        return false;
    }
    // Place pattern vertices so that each one, where possible, touches an
    // already placed vertex; candidates then come from a neighborhood.
    let mut order = Vec::with_capacity(k);
    let mut placed = VertexSet::EMPTY;
    while order.len() < k {
        let next = (0..k)
            .filter(|&p| !placed.contains(p))
            .max_by_key(|&p| {
                (
                    pattern.neighbors(p).intersection(placed).len(),
                    pattern.degree(p),
                    std::cmp::Reverse(p),
                )
            })
            .unwrap();
        placed.insert(next);
        order.push(next);
    }
    let host_degree: Vec<usize> = (0..g.order())
        .map(|v| g.neighbors(v).intersection(within).len())
        .collect();
    let mut image = vec![usize::MAX; k];
    extend(
        g,
        within,
        pattern,
        &order,
        &host_degree,
        &mut image,
        VertexSet::EMPTY,
        0,
    )
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    within: VertexSet,
    pattern: &Graph,
    order: &[usize],
    host_degree: &[usize],
    image: &mut [usize],
    used: VertexSet,
    depth: usize,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut candidates = within.difference(used);
    for q in pattern.neighbors(p).iter() {
        if image[q] != usize::MAX {
            candidates = candidates.intersection(g.neighbors(image[q]));
        }
    }
    let need = pattern.degree(p);
    for c in candidates.iter() {
        if host_degree[c] < need {
            continue;
        }
        image[p] = c;
        let mut used2 = used;
        used2.insert(c);
        if extend(
            g,
            within,
            pattern,
            order,
            host_degree,
            image,
            used2,
            depth + 1,
        ) {
            return true;
        }
    }
    image[p] = usize::MAX;
    false
}

pub fn is_forbidden_component(g: &Graph, comp: VertexSet, fam: &ForbiddenFamily) -> bool {
    fam.is_forbidden_component(g, comp)
}

/// `set` together with every F-forbidden component of `G - set`.
pub fn close_marks(g: &Graph, fam: &ForbiddenFamily, set: VertexSet) -> VertexSet {
    let mut marked = set;
    for comp in g.components(g.vertices().difference(set)) {
        if fam.is_forbidden_component(g, comp) {
            marked = marked.union(comp);
        }
    }
    marked
}

/// [`close_marks`] with a memo of forbidden-component answers, for families
/// that need subgraph search.
pub(crate) fn close_marks_cached(
    g: &Graph,
    fam: &ForbiddenFamily,
    set: VertexSet,
    cache: &mut HashMap<u64, bool>,
) -> VertexSet {
    if fam.is_order_determined() {
        return close_marks(g, fam, set);
    }
    let mut marked = set;
    for comp in g.components(g.vertices().difference(set)) {
        let forbidden = *cache
            .entry(comp.bits())
            .or_insert_with(|| fam.is_forbidden_component(g, comp));
        if forbidden {
            marked = marked.union(comp);
        }
    }
    marked
}

/// A game position: the marked set of a partially marked graph.
///
/// Built only through [`initial_closure`] and [`apply_move`], so no component
/// of `G - marked` is F-forbidden.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkState {
    marked: VertexSet,
    absorbed: VertexSet,
}

impl MarkState {
    pub fn marked(&self) -> VertexSet {
        self.marked
    }

    /// Vertices that were not in the requested initial marks but had to be
    /// marked because they formed F-forbidden components.
    pub fn absorbed(&self) -> VertexSet {
        self.absorbed
    }

    pub fn is_terminal(&self, g: &Graph) -> bool {
        self.marked == g.vertices()
    }
}

/// Marks `a` and absorbs every F-forbidden component of `G - a`.
pub fn initial_closure(g: &Graph, fam: &ForbiddenFamily, a: VertexSet) -> MarkState {
    let a = a.intersection(g.vertices());
    let marked = close_marks(g, fam, a);
    MarkState {
        marked,
        absorbed: marked.difference(a),
    }
}

/// Vertices with an unmarked vertex in their closed neighborhood.
pub fn playable(g: &Graph, state: &MarkState) -> VertexSet {
    g.closed_neighborhood(g.vertices().difference(state.marked))
}

/// Plays `x`: marks `N[x]` and every F-forbidden component left over.
pub fn apply_move(
    g: &Graph,
    state: &MarkState,
    fam: &ForbiddenFamily,
    x: usize,
) -> Result<MarkState> {
    if x >= g.order() || !playable(g, state).contains(x) {
        return Err(Error::IllegalMove(x));
    }
    let marked = close_marks(g, fam, state.marked.union(g.closed_neighbors(x)));
    Ok(MarkState {
        marked,
        absorbed: state.absorbed,
    })
}
