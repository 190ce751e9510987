//! Instance generators for the checks: seeded random forests and markings,
//! and a canonical key for trees and forests.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::family::prufer_tree;
use crate::graph::{Graph, VertexSet};

/// Uniform random labeled tree of order `n >= 1`.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    if n <= 1 {
        return Graph::empty(n).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_tree(&seq)
}

/// A random tree with each edge dropped with probability `drop`.
pub fn random_forest(rng: &mut ChaCha8Rng, n: usize, drop: f64) -> Graph {
    let tree = random_tree(rng, n);
    let kept: Vec<_> = tree
        .edges()
        .into_iter()
        .filter(|_| !rng.gen_bool(drop))
        .collect();
    Graph::new(n, &kept).unwrap()
}

/// Each vertex of `within` independently with probability `p`.
pub fn random_subset(rng: &mut ChaCha8Rng, within: VertexSet, p: f64) -> VertexSet {
    within.iter().filter(|_| rng.gen_bool(p)).collect()
}

/// AHU code of the subtree rooted at `v`.
fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = g
        .neighbors(v)
        .iter()
        .filter(|&u| Some(u) != parent)
        .map(|u| rooted_code(g, u, Some(v)))
        .collect();
    kids.sort();
    let mut code = vec![b'('];
    for k in kids {
        code.extend(k);
    }
    code.push(b')');
    code
}

/// Center vertices (one or two) of the tree spanned by `comp`.
fn centers(g: &Graph, comp: VertexSet) -> Vec<usize> {
    let mut rest = comp;
    while rest.len() > 2 {
        let leaves: VertexSet = rest
            .iter()
            .filter(|&v| g.neighbors(v).intersection(rest).len() <= 1)
            .collect();
        rest = rest.difference(leaves);
    }
    rest.to_vec()
}

/// Isomorphism-invariant key of a forest: the sorted center-rooted AHU codes
/// of its components. Two forests get equal keys iff they are isomorphic.
pub fn forest_key(g: &Graph) -> Vec<u8> {
    debug_assert!(g.is_forest());
    let mut codes: Vec<Vec<u8>> = g
        .components(g.vertices())
        .into_iter()
        .map(|comp| {
            centers(g, comp)
                .into_iter()
                .map(|c| rooted_code(g, c, None))
                .min()
                .unwrap()
        })
        .collect();
    codes.sort();
    codes.join(&b'|')
}
