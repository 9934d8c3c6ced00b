//! The edge-to-tree maps: distances between edges split over the four
//! quotient trees, and the cut-method values agree with the oracles.

mod common;

use phenylene_wiener::cut_index::edge_wiener_cut;
use phenylene_wiener::oracle::{self, GenericGraph};
use phenylene_wiener::phenylene::Phenylene;
use phenylene_wiener::squeeze::{parse_squeeze_spec, DirectionClass};
use phenylene_wiener::tree_wiener::{quotient_tree, QuotientTree, TreeElement};

/// `d̂` between two images in a tree: minimum over their endpoints.
fn tree_gap(tree: &QuotientTree, dist: &[Vec<u64>], a: TreeElement, b: TreeElement) -> u64 {
    let ends = |x: TreeElement| match x {
        TreeElement::Node(c) => vec![c],
        TreeElement::Edge(k) => vec![tree.edges()[k].parent, tree.edges()[k].child],
    };
    let mut best = u64::MAX;
    for x in ends(a) {
        for y in ends(b) {
            best = best.min(dist[x][y]);
        }
    }
    best
}

fn check_decomposition(g: &Phenylene) {
    let vertex_dist = {
        let adjacency: Vec<Vec<usize>> = (0..g.vertex_count())
            .map(|v| g.neighbors(v).iter().map(|&(w, _)| w).collect())
            .collect();
        common::all_distances(&adjacency)
    };
    let trees: Vec<(QuotientTree, Vec<Vec<u64>>)> = DirectionClass::ALL
        .iter()
        .map(|&part| {
            let tree = quotient_tree(g, part).unwrap();
            let mut adjacency = vec![Vec::new(); tree.node_count()];
            for e in tree.edges() {
                adjacency[e.parent].push(e.child);
                adjacency[e.child].push(e.parent);
            }
            let dist = common::all_distances(&adjacency);
            (tree, dist)
        })
        .collect();

    for e in g.edges() {
        for f in g.edges() {
            let (a, b) = e.endpoints;
            let (x, y) = f.endpoints;
            let gap = [
                vertex_dist[a][x],
                vertex_dist[a][y],
                vertex_dist[b][x],
                vertex_dist[b][y],
            ]
            .into_iter()
            .min()
            .unwrap();
            let split: u64 = trees
                .iter()
                .map(|(t, d)| tree_gap(t, d, t.edge_image()[e.id], t.edge_image()[f.id]))
                .sum();
            assert_eq!(gap, split, "edges {} and {}", e.id, f.id);
        }
    }
}

#[test]
fn edge_distances_split_over_trees() {
    check_decomposition(&common::linear(1));
    check_decomposition(&common::linear(4));
    let branched = "phenylene v1\n5\n2 1 0\n3 2 1\n4 2 5\n5 4 0\n";
    check_decomposition(&common::build(&parse_squeeze_spec(branched).unwrap()));
}

#[test]
fn images_follow_components() {
    let g = common::linear(3);
    for part in DirectionClass::ALL {
        let tree = quotient_tree(&g, part).unwrap();
        for e in g.edges() {
            let (a, b) = e.endpoints;
            let (ca, cb) = (tree.component_of_vertex()[a], tree.component_of_vertex()[b]);
            match tree.edge_image()[e.id] {
                TreeElement::Node(c) => {
                    assert_ne!(e.class, part);
                    assert_eq!((ca, cb), (c, c));
                }
                TreeElement::Edge(k) => {
                    assert_eq!(e.class, part);
                    let t = tree.edges()[k];
                    assert!((ca, cb) == (t.parent, t.child) || (ca, cb) == (t.child, t.parent));
                }
            }
        }
    }
}

#[test]
fn two_hexagon_oracle_fixtures() {
    let g = GenericGraph::from(&common::linear(2));
    assert_eq!(oracle::wiener_v_oracle(&g), 180);
    assert_eq!(oracle::hyper_wiener_oracle(&g), 396);
    assert_eq!(oracle::vertex_edge_wiener_oracle(&g), 324);
    assert_eq!(oracle::edge_wiener_oracle(&g), 232);
    assert_eq!(oracle::edge_hyper_wiener_oracle(&g), 479);
}

#[test]
fn cut_method_matches_oracle_on_small_systems() {
    for spec in common::instance_set(4, 40, 7, 11) {
        let g = common::build(&spec);
        let r = edge_wiener_cut(&g).unwrap();
        let generic = GenericGraph::from(&g);
        assert_eq!(
            r.w_e_hat,
            oracle::edge_wiener_hat_oracle(&generic),
            "{spec}"
        );
        assert_eq!(r.w_e, oracle::edge_wiener_oracle(&generic), "{spec}");
    }
}

#[test]
fn debug_edge_list_reads_back() {
    let g = common::linear(3);
    let generic = GenericGraph::from_edge_list(&g.edge_list()).unwrap();
    assert_eq!(generic.edges().len(), g.edge_count());
    assert_eq!(oracle::edge_wiener_oracle(&generic), 807);
}
