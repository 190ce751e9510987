//! Connected graphs up to isomorphism, for orders 1 through 8.
//!
//! Order `n` graphs are grown from order `n - 1` representatives by adding
//! one vertex with a nonempty neighborhood (every connected graph has a
//! vertex whose removal leaves it connected). Duplicates are rejected by a
//! canonical code: the minimum upper-triangle bit string over all vertex
//! orderings compatible with an isomorphism-invariant color refinement.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 8;

/// One representative per isomorphism class of connected graphs of order
/// `n`, in ascending canonical-code order.
pub fn enumerate_connected(n: usize) -> Result<std::vec::IntoIter<Graph>> {
    if n == 0 {
        return Err(Error::BadSpec("order must be at least 1".into()));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: MAX_ENUMERATION_ORDER,
        });
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for order in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = from_code(order - 1, code);
            let mut adj: Vec<u64> = (0..order - 1).map(|v| base.neighbors(v).bits()).collect();
            adj.push(0);
            for nbrs in 1u64..1 << (order - 1) {
                let mut trial = adj.clone();
                trial[order - 1] = nbrs;
                for (v, row) in trial.iter_mut().enumerate().take(order - 1) {
                    if nbrs >> v & 1 == 1 {
                        *row |= 1 << (order - 1);
                    }
                }
                next.insert(canonical_code(&Graph::from_adjacency(trial)));
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|c| from_code(n, c))
        .collect::<Vec<_>>()
        .into_iter())
}

/// Upper-triangle bits in graph6 order, first pair in the most significant
/// position of the code.
fn code_under(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

fn from_code(n: usize, code: u64) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (bits - 1 - k) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// Stable color refinement seeded by degree; colors are ranks of sorted
/// signatures, so they do not depend on the labeling.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = colors.iter().collect::<BTreeSet<_>>().len();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let ranks: Vec<_> = sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        colors = sigs
            .iter()
            .map(|s| ranks.binary_search(&s).unwrap())
            .collect();
        if ranks.len() == classes {
            return colors;
        }
        classes = ranks.len();
    }
}

/// Canonical code of a graph with at most 11 vertices.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(
        n * n.saturating_sub(1) / 2 <= 64,
        "canonical_code supports n <= 11"
    );
    let colors = refine_colors(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], v));
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || colors[order[i]] != colors[order[start]] {
            blocks.push((start, i));
            start = i;
        }
    }
    let mut best = u64::MAX;
    permute_blocks(g, &mut order, &blocks, 0, &mut best);
    best
}

fn permute_blocks(
    g: &Graph,
    order: &mut [usize],
    blocks: &[(usize, usize)],
    b: usize,
    best: &mut u64,
) {
    if b == blocks.len() {
        *best = (*best).min(code_under(g, order));
        return;
    }
    let (lo, hi) = blocks[b];
    heap_permute(g, order, blocks, b, lo, hi - lo, best);
}

// Heap's algorithm over order[lo..lo + k], recursing into the next block at
// each leaf.
fn heap_permute(
    g: &Graph,
    order: &mut [usize],
    blocks: &[(usize, usize)],
    b: usize,
    lo: usize,
    k: usize,
    best: &mut u64,
) {
    if k <= 1 {
        permute_blocks(g, order, blocks, b + 1, best);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(g, order, blocks, b, lo, k - 1, best);
        if k.is_multiple_of(2) {
            order.swap(lo + i, lo + k - 1);
        } else {
            order.swap(lo, lo + k - 1);
        }
    }
    heap_permute(g, order, blocks, b, lo, k - 1, best);
}

/// Canonical form as a graph.
pub fn canonical_form(g: &Graph) -> Graph {
    from_code(g.order(), canonical_code(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{cycle, path};

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            enumerate_connected(9),
            Err(Error::OrderTooLarge { order: 9, limit: 8 })
        ));
        assert!(enumerate_connected(0).is_err());
    }

    #[test]
    fn small_orders() {
        let g3: Vec<_> = enumerate_connected(3).unwrap().collect();
        assert_eq!(g3.len(), 2);
        let edge_counts: Vec<_> = g3.iter().map(Graph::edge_count).collect();
        assert!(edge_counts.contains(&2) && edge_counts.contains(&3));
        assert_eq!(enumerate_connected(1).unwrap().count(), 1);
        assert_eq!(enumerate_connected(2).unwrap().count(), 1);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let c6 = cycle(6);
        let relabeled = c6.permuted(&[3, 0, 5, 1, 4, 2]);
        assert_eq!(canonical_code(&c6), canonical_code(&relabeled));
        assert_ne!(canonical_code(&c6), canonical_code(&path(6)));
        assert_eq!(canonical_form(&relabeled).edge_count(), 6);
    }

    #[test]
    fn every_output_is_connected_and_canonical() {
        for g in enumerate_connected(6).unwrap() {
            assert!(g.is_connected());
            assert_eq!(canonical_form(&g), g);
        }
    }
}
