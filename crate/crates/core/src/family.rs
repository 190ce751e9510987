//! Named graph families and their text syntax.
//!
//! Syntax: `path:n`, `cycle:n`, `complete:n`, `star:r`, `hgraph`,
//! `gstar:<base>`, `gtriangles:n`, `ftriangles:n:k`, `gh:n`, `gh:<base>`,
//! `trees:n` and `custom:n:u-v,u-v,...`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Edges of the 12-vertex graph `H`, using the names `v1..v12`.
const H_EDGES: [(usize, usize); 15] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (4, 5),
    (4, 6),
    (5, 6),
    (5, 10),
    (6, 7),
    (7, 8),
    (7, 9),
    (8, 9),
    (10, 11),
    (10, 12),
    (11, 12),
];

/// Index of `v4` in [`h_graph`]; the attachment vertex of the `gh` family.
pub const H_ATTACH: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,r}` with the center at index 0.
    Star(usize),
    HGraph,
    /// A `P_7` whose center is identified with each vertex of the base.
    GStar(Box<FamilySpec>),
    /// `n` disjoint triangles `{v_i, x_i, y_i}` with a clique on the `v_i`.
    GTriangles(usize),
    /// `GTriangles(n)` minus the edges `x_i y_i` for `i <= k`.
    FTriangles(usize, usize),
    /// A private copy of `H` attached by `v4` to each vertex of `P_n`.
    GH(usize),
    /// Same construction over an explicit base graph.
    GHBase(Box<FamilySpec>),
    /// Every labeled tree of order `n`; see [`all_trees`].
    AllTrees(usize),
    Custom(usize, Vec<(usize, usize)>),
}

impl FamilySpec {
    /// Order of the graph this spec produces, without building it.
    pub fn order(&self) -> Result<usize> {
        use FamilySpec::*;
        Ok(match self {
            Path(n) | Cycle(n) | Complete(n) | AllTrees(n) | Custom(n, _) => *n,
            Star(r) => r + 1,
            HGraph => 12,
            GStar(base) => 7 * base.order()?,
            GTriangles(n) | FTriangles(n, _) => 3 * n,
            GH(n) => 12 * n,
            GHBase(base) => 12 * base.order()?,
        })
    }

    fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let bad = |msg: String| Err(Error::BadSpec(msg));
        match self {
            Path(0)
            | Complete(0)
            | Star(0)
            | GTriangles(0)
            | FTriangles(0, _)
            | GH(0)
            | AllTrees(0) => return bad(format!("{self}: parameter must be positive")),
            Cycle(n) if *n < 3 => return bad(format!("{self}: a cycle needs at least 3 vertices")),
            FTriangles(n, k) if k > n => return bad(format!("{self}: requires k <= n")),
            GStar(base) | GHBase(base) => {
                base.validate()?;
                if matches!(**base, AllTrees(_)) {
                    return bad(format!("{self}: base must be a single graph"));
                }
                if base.order()? == 0 {
                    return bad(format!("{self}: base order must be at least 1"));
                }
            }
            _ => {}
        }
        let n = self.order()?;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                limit: MAX_ORDER,
            });
        }
        Ok(())
    }

    /// Parses a vertex name for this family: `v1..v12` for `hgraph`, a
    /// 0-based index otherwise.
    pub fn parse_vertex(&self, name: &str) -> Result<usize> {
        let name = name.trim();
        let v = match (self, name.strip_prefix('v')) {
            (FamilySpec::HGraph, Some(rest)) => rest
                .parse::<usize>()
                .ok()
                .filter(|k| (1..=12).contains(k))
                .map(|k| k - 1),
            _ => name.parse::<usize>().ok(),
        };
        v.ok_or_else(|| Error::Usage(format!("bad vertex name {name:?} for {self}")))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Star(r) => write!(f, "star:{r}"),
            HGraph => write!(f, "hgraph"),
            GStar(b) => write!(f, "gstar:{b}"),
            GTriangles(n) => write!(f, "gtriangles:{n}"),
            FTriangles(n, k) => write!(f, "ftriangles:{n}:{k}"),
            GH(n) => write!(f, "gh:{n}"),
            GHBase(b) => write!(f, "gh:{b}"),
            AllTrees(n) => write!(f, "trees:{n}"),
            Custom(n, edges) => {
                write!(f, "custom:{n}:")?;
                for (i, (u, v)) in edges.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{u}-{v}")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_count(s: &str, whole: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::BadSpec(format!("{whole:?}: expected a count, found {s:?}")))
}

/// Parses `u-v,u-v,...`; an empty string is an empty edge list.
pub fn parse_edge_list(s: &str) -> Result<Vec<(usize, usize)>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|pair| {
            let (u, v) = pair
                .split_once('-')
                .ok_or_else(|| Error::BadSpec(format!("bad edge {pair:?}")))?;
            Ok((parse_count(u, pair)?, parse_count(v, pair)?))
        })
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
        let spec = match tag.to_ascii_lowercase().as_str() {
            "path" => FamilySpec::Path(parse_count(rest, s)?),
            "cycle" => FamilySpec::Cycle(parse_count(rest, s)?),
            "complete" => FamilySpec::Complete(parse_count(rest, s)?),
            "star" => FamilySpec::Star(parse_count(rest, s)?),
            "hgraph" if rest.is_empty() => FamilySpec::HGraph,
            "gstar" => FamilySpec::GStar(Box::new(rest.parse()?)),
            "gtriangles" => FamilySpec::GTriangles(parse_count(rest, s)?),
            "ftriangles" => {
                let (n, k) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::BadSpec(format!("{s:?}: expected ftriangles:n:k")))?;
                FamilySpec::FTriangles(parse_count(n, s)?, parse_count(k, s)?)
            }
            "gh" => match rest.trim().parse::<usize>() {
                Ok(n) => FamilySpec::GH(n),
                Err(_) => FamilySpec::GHBase(Box::new(rest.parse()?)),
            },
            "trees" => FamilySpec::AllTrees(parse_count(rest, s)?),
            "custom" => {
                let (n, edges) = rest.split_once(':').unwrap_or((rest, ""));
                FamilySpec::Custom(parse_count(n, s)?, parse_edge_list(edges)?)
            }
            _ => return Err(Error::BadSpec(format!("unknown family {s:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("path order within limit")
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, &edges).expect("cycle order within limit")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("clique order within limit")
}

pub fn star(r: usize) -> Graph {
    let edges: Vec<_> = (1..=r).map(|i| (0, i)).collect();
    Graph::new(r + 1, &edges).expect("star order within limit")
}

/// The 12-vertex graph `H`; vertex `v_i` has index `i - 1`.
pub fn h_graph() -> Graph {
    let edges: Vec<_> = H_EDGES.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::new(12, &edges).unwrap()
}

/// Triangles `{3i, 3i+1, 3i+2}` = `{v_i, x_i, y_i}`; clique on the `v_i`;
/// the first `removed` triangles lose their `x_i y_i` edge.
fn triangles(n: usize, removed: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        let (v, x, y) = (3 * i, 3 * i + 1, 3 * i + 2);
        edges.push((v, x));
        edges.push((v, y));
        if i >= removed {
            edges.push((x, y));
        }
        for j in i + 1..n {
            edges.push((v, 3 * j));
        }
    }
    Graph::new(3 * n, &edges).unwrap()
}

/// Replaces each base vertex `i` by a block of `size` vertices holding a copy
/// of `gadget`; base edges join the blocks at `gadget_attach`.
fn attach_gadgets(base: &Graph, gadget: &Graph, attach: usize) -> Result<Graph> {
    let size = gadget.order();
    let n = base.order() * size;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: MAX_ORDER,
        });
    }
    let mut edges = Vec::new();
    for i in 0..base.order() {
        edges.extend(
            gadget
                .edges()
                .iter()
                .map(|&(u, v)| (i * size + u, i * size + v)),
        );
    }
    for (u, v) in base.edges() {
        edges.push((u * size + attach, v * size + attach));
    }
    Graph::new(n, &edges)
}

/// Builds the graph named by `spec`. `AllTrees` names a sequence rather
/// than a single graph and is rejected here; use [`family_graphs`].
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    spec.validate()?;
    let g = match spec {
        Path(n) => path(*n),
        Cycle(n) => cycle(*n),
        Complete(n) => complete(*n),
        Star(r) => star(*r),
        HGraph => h_graph(),
        GStar(base) => attach_gadgets(&make_family(base)?, &path(7), 3)?,
        GTriangles(n) => triangles(*n, 0),
        FTriangles(n, k) => triangles(*n, *k),
        GH(n) => attach_gadgets(&path(*n), &h_graph(), H_ATTACH)?,
        GHBase(base) => attach_gadgets(&make_family(base)?, &h_graph(), H_ATTACH)?,
        AllTrees(_) => {
            return Err(Error::BadSpec(format!(
                "{spec} is a sequence of graphs, not a single graph"
            )))
        }
        Custom(n, edges) => Graph::new(*n, edges)?,
    };
    Ok(g.with_label(spec.to_string()))
}

/// Every graph named by `spec`: all labeled trees for `AllTrees`, otherwise
/// the single graph.
pub fn family_graphs(spec: &FamilySpec) -> Result<Vec<Graph>> {
    match spec {
        FamilySpec::AllTrees(n) => {
            spec.validate()?;
            Ok(all_trees(*n).collect())
        }
        _ => Ok(vec![make_family(spec)?]),
    }
}

/// Decodes a Prüfer sequence over `0..seq.len() + 2` into a tree.
pub fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}

/// All `n^(n-2)` labeled trees of order `n` in Prüfer-sequence order,
/// isomorphic copies included.
pub fn all_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let count = if n <= 1 { 1 } else { n.pow(len as u32) };
    (0..count).map(move |mut idx| {
        if n <= 1 {
            return Graph::new(n, &[]).unwrap();
        }
        let mut seq = vec![0usize; len];
        for slot in seq.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
        prufer_tree(&seq)
    })
}
