//! Simple undirected graphs on at most 63 vertices, with adjacency stored as
//! one bitmask per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order. A vertex set always fits in one `u64` with the
/// top bit left free for the solver's mover flag.
pub const MAX_ORDER: usize = 63;

/// A subset of the vertices `0..n` of some graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An immutable simple graph. Equality compares structure only, not labels.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<u64>,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicates collapse and the
    /// adjacency is symmetrized.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                limit: MAX_ORDER,
            });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::BadEdge(u, v));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { adj, label: None })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, &[])
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_ORDER);
        Graph { adj, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in VertexSet(self.adj[u] >> u >> 1 << u << 1).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Number of edges of the induced subgraph on `within`.
    pub fn induced_edge_count(&self, within: VertexSet) -> usize {
        within
            .iter()
            .map(|v| (self.adj[v] & within.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// `N[s]`: `s` together with every neighbor of a member of `s`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = s.0;
        for v in s.iter() {
            out |= self.adj[v];
        }
        VertexSet(out)
    }

    /// Vertices of `active` reachable from `start` inside `g[active]`.
    pub fn component_of(&self, active: VertexSet, start: usize) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            next &= active.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components of `g[active]`, ordered by smallest member.
    pub fn components(&self, active: VertexSet) -> Vec<VertexSet> {
        let mut rest = active;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let comp = self.component_of(rest, v);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_of(self.vertices(), 0) == self.vertices()
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let total = n + other.order();
        if total > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: total,
                limit: MAX_ORDER,
            });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| a << n));
        Ok(Graph::from_adjacency(adj))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.order()];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph::from_adjacency(adj)
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components(self.vertices()).len() == self.order()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges())
            .field("label", &self.label)
            .finish()
    }
}

/// Builds a graph from an edge list.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges)
}

pub fn components(g: &Graph, active: VertexSet) -> Vec<VertexSet> {
    g.components(active)
}

pub fn closed_neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    g.closed_neighborhood(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn build_errors() {
        assert!(matches!(
            Graph::new(64, &[]),
            Err(Error::OrderTooLarge { order: 64, .. })
        ));
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(Error::BadEdge(0, 3)));
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::BadEdge(1, 1)));
        assert!(Graph::new(63, &[(0, 62)]).is_ok());
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(4, &[(0, 1), (1, 0), (1, 2), (2, 3), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g, path(4));
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
    }

    #[test]
    fn components_examples() {
        let p4 = path(4);
        assert_eq!(p4.components(set(&[2, 3])), vec![set(&[2, 3])]);
        assert_eq!(p4.components(set(&[0, 2])), vec![set(&[0]), set(&[2])]);
        let mut c6 = path(6).edges();
        c6.push((0, 5));
        let c6 = Graph::new(6, &c6).unwrap();
        assert_eq!(c6.components(c6.vertices()), vec![c6.vertices()]);
        assert!(p4.components(VertexSet::EMPTY).is_empty());
    }

    #[test]
    fn closed_neighborhood_examples() {
        let p4 = path(4);
        assert_eq!(p4.closed_neighborhood(set(&[1])), set(&[0, 1, 2]));
        assert_eq!(p4.closed_neighborhood(VertexSet::EMPTY), VertexSet::EMPTY);
        let mut k5 = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                k5.push((u, v));
            }
        }
        let k5 = Graph::new(5, &k5).unwrap();
        assert_eq!(k5.closed_neighborhood(set(&[0])), k5.vertices());
    }

    #[test]
    fn vertex_set_algebra() {
        let a = set(&[0, 3, 62]);
        let b = set(&[3, 4]);
        assert_eq!(a.union(b), set(&[0, 3, 4, 62]));
        assert_eq!(a.difference(b), set(&[0, 62]));
        assert_eq!(a.intersection(b), set(&[3]));
        assert_eq!(a.len(), 3);
        assert_eq!(a.min(), Some(0));
        assert_eq!(a.to_vec(), vec![0, 3, 62]);
        assert_eq!(VertexSet::full(63).len(), 63);
        assert!(set(&[3]).is_subset(b));
    }

    #[test]
    fn forest_detection() {
        assert!(path(5).is_forest());
        let tri = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!tri.is_forest());
        assert!(Graph::empty(4).unwrap().is_forest());
    }
}
