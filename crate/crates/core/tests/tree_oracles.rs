//! Weighted tree indices against brute-force distance sums.

mod common;

use phenylene_wiener::tree_wiener::{
    tree_wiener_e_hat, tree_wiener_v, tree_wiener_ve, QuotientTree,
};
use proptest::prelude::*;

/// `(W, Ŵe, Wve)` by summing weighted distances over all pairs.
fn brute(node_weights: &[u64], edges: &[(usize, usize, u64)]) -> (u64, u64, u64) {
    let mut adjacency = vec![Vec::new(); node_weights.len()];
    for &(a, b, _) in edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let d = common::all_distances(&adjacency);
    let node_to_edge = |x: usize, (a, b, _): (usize, usize, u64)| d[x][a].min(d[x][b]);

    let mut w_v = 0;
    for x in 0..node_weights.len() {
        for y in x + 1..node_weights.len() {
            w_v += node_weights[x] * node_weights[y] * d[x][y];
        }
    }
    let mut w_e_hat = 0;
    for (k, &e) in edges.iter().enumerate() {
        for &f in &edges[k + 1..] {
            let gap = node_to_edge(e.0, f).min(node_to_edge(e.1, f));
            w_e_hat += e.2 * f.2 * gap;
        }
    }
    let mut w_ve = 0;
    for (x, &w) in node_weights.iter().enumerate() {
        for &e in edges {
            w_ve += w * e.2 * node_to_edge(x, e);
        }
    }
    (w_v, w_e_hat, w_ve)
}

fn weighted_tree() -> impl Strategy<Value = (Vec<u64>, Vec<(usize, usize, u64)>)> {
    (1usize..=8).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|k| (0..k, 0u64..20)).collect();
        (proptest::collection::vec(0u64..20, n), parents).prop_map(|(weights, parents)| {
            let edges = parents
                .into_iter()
                .enumerate()
                .map(|(k, (parent, w))| (parent, k + 1, w))
                .collect();
            (weights, edges)
        })
    })
}

proptest! {
    #[test]
    fn tree_indices_match_brute_force((weights, edges) in weighted_tree()) {
        let tree = QuotientTree::from_weighted_tree(weights.clone(), &edges).unwrap();
        let expected = brute(&weights, &edges);
        prop_assert_eq!(
            (tree_wiener_v(&tree).unwrap(), tree_wiener_e_hat(&tree).unwrap(), tree_wiener_ve(&tree).unwrap()),
            expected
        );
    }
}

#[test]
fn weighted_star() {
    // centre weight 1, leaves 2, 3, 4 joined by edges of weight 5, 6, 7
    let weights = vec![1, 2, 3, 4];
    let edges = [(0, 1, 5), (0, 2, 6), (0, 3, 7)];
    let tree = QuotientTree::from_weighted_tree(weights.clone(), &edges).unwrap();
    // W: centre-leaf 1·(2+3+4) + leaf pairs at distance 2: 2·(6+8+12)
    assert_eq!(tree_wiener_v(&tree).unwrap(), 9 + 52);
    // edges of a star all touch the centre
    assert_eq!(tree_wiener_e_hat(&tree).unwrap(), 0);
    // each leaf sees the two other edges at distance 1
    assert_eq!(tree_wiener_ve(&tree).unwrap(), 2 * 13 + 3 * 12 + 4 * 11);
    assert_eq!(brute(&weights, &edges), (61, 0, 106));
}
