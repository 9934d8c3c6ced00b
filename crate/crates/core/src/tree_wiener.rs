//! Weighted quotient trees and their Wiener-type indices.
//!
//! Removing the edges of one direction class from a phenylene leaves
//! components; the quotient tree has a node per component weighted by the
//! number of edges inside it, and a tree edge per adjacent pair of
//! components weighted by the number of removed edges joining them.
//!
//! For a tree edge `e`, let `n1, n2` be the node-weight sums and `m1, m2`
//! the edge-weight sums of the two components of `T - e` (`e` itself
//! excluded). Then
//!
//! * `W(T, w)      = Σ n1·n2`
//! * `Ŵe(T, w')    = Σ m1·m2`
//! * `Wve(T, w, w') = Σ (n1·m2 + n2·m1)`

use crate::phenylene::Phenylene;
use crate::squeeze::DirectionClass;
use crate::union_find::UnionFind;
use crate::{Error, Result};

/// Node and edge weight totals on one side of a tree edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SideTotals {
    pub node_weight: u64,
    pub edge_weight: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeEdge {
    /// Endpoint nearer the root (node 0).
    pub parent: usize,
    pub child: usize,
    pub weight: u64,
    pub parent_side: SideTotals,
    pub child_side: SideTotals,
}

/// Where an edge of the phenylene lands in a quotient tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeElement {
    Node(usize),
    Edge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientTree {
    part: Option<DirectionClass>,
    node_weights: Vec<u64>,
    edges: Vec<TreeEdge>,
    component_of_vertex: Vec<usize>,
    image: Vec<TreeElement>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("weighted graph is not a tree")]
pub struct NotATree;

impl QuotientTree {
    /// Builds a weighted tree from explicit weights. `links` are
    /// `(a, b, weight)` triples; node 0 is the root.
    pub fn from_weighted_tree(
        node_weights: Vec<u64>,
        links: &[(usize, usize, u64)],
    ) -> std::result::Result<QuotientTree, NotATree> {
        let edges = root_tree(&node_weights, links)?;
        Ok(QuotientTree {
            part: None,
            node_weights,
            edges,
            component_of_vertex: Vec::new(),
            image: Vec::new(),
        })
    }

    pub fn part(&self) -> Option<DirectionClass> {
        self.part
    }

    pub fn node_weights(&self) -> &[u64] {
        &self.node_weights
    }

    /// Tree edges, one per non-root node, ordered by child node.
    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.node_weights.len()
    }

    /// Component (tree node) holding each phenylene vertex.
    pub fn component_of_vertex(&self) -> &[usize] {
        &self.component_of_vertex
    }

    /// Image of each phenylene edge: the component containing it, or the
    /// tree edge it is aggregated into.
    pub fn edge_image(&self) -> &[TreeElement] {
        &self.image
    }

    pub fn total_node_weight(&self) -> u64 {
        self.node_weights.iter().sum()
    }

    pub fn total_edge_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.weight).sum()
    }
}

/// Endpoints and direction class of an edge, packed for repeated scans.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CompactEdge {
    a: u32,
    b: u32,
    class: DirectionClass,
}

pub(crate) fn compact_edges(g: &Phenylene) -> Vec<CompactEdge> {
    assert!(g.vertex_count() <= u32::MAX as usize);
    g.edges()
        .iter()
        .map(|e| CompactEdge {
            a: e.endpoints.0 as u32,
            b: e.endpoints.1 as u32,
            class: e.class,
        })
        .collect()
}

/// Quotient tree of `g` with respect to one direction class. Components are
/// numbered by their smallest vertex id.
pub fn quotient_tree(g: &Phenylene, part: DirectionClass) -> Result<QuotientTree> {
    build_quotient(g.vertex_count(), &compact_edges(g), part, true)
}

/// As [`quotient_tree`] but without the edge images, which the index sums
/// never read; callers share one compact edge table across the four trees.
pub(crate) fn quotient_weights(
    vertex_count: usize,
    edges: &[CompactEdge],
    part: DirectionClass,
) -> Result<QuotientTree> {
    build_quotient(vertex_count, edges, part, false)
}

fn build_quotient(
    vertex_count: usize,
    graph_edges: &[CompactEdge],
    part: DirectionClass,
    with_image: bool,
) -> Result<QuotientTree> {
    let not_tree = || Error::QuotientNotTree { part: part.get() };
    let mut uf = UnionFind::new(vertex_count);
    for edge in graph_edges.iter().filter(|e| e.class != part) {
        uf.union(edge.a as usize, edge.b as usize);
    }
    let (component_of_vertex, count) = uf.labels();
    let components = |e: &CompactEdge| {
        (
            component_of_vertex[e.a as usize],
            component_of_vertex[e.b as usize],
        )
    };

    // links are found by bucketing cut edges under their smaller component,
    // then stamping the larger one; no hashing needed
    let mut node_weights = vec![0u64; count];
    let mut cut_pairs: Vec<(usize, usize)> = Vec::new();
    let mut cut_start = vec![0usize; count + 1];
    for edge in graph_edges {
        let (a, b) = components(edge);
        if edge.class != part {
            node_weights[a] += 1;
        } else if a == b {
            return Err(not_tree());
        } else {
            cut_pairs.push((a.min(b), a.max(b)));
            cut_start[a.min(b) + 1] += 1;
        }
    }
    for k in 0..count {
        cut_start[k + 1] += cut_start[k];
    }
    let mut fill = cut_start.clone();
    let mut highs = vec![0usize; cut_pairs.len()];
    for &(low, high) in &cut_pairs {
        highs[fill[low]] = high;
        fill[low] += 1;
    }

    let mut links: Vec<(usize, usize, u64)> = Vec::new();
    let mut stamp = vec![usize::MAX; count];
    let mut slot = vec![0usize; count];
    for low in 0..count {
        for &high in &highs[cut_start[low]..cut_start[low + 1]] {
            if stamp[high] != low {
                stamp[high] = low;
                slot[high] = links.len();
                links.push((low, high, 0));
            }
            links[slot[high]].2 += 1;
        }
    }

    let edges = root_tree(&node_weights, &links).map_err(|_| not_tree())?;
    // root_tree orders tree edges by child, so a link's position is fixed
    // by whichever endpoint ended up as the child
    let image = if with_image {
        graph_edges
            .iter()
            .map(|edge| {
                let (a, b) = components(edge);
                if edge.class != part {
                    return TreeElement::Node(a);
                }
                let (low, high) = (a.min(b), a.max(b));
                let child = if edges[high - 1].parent == low {
                    high
                } else {
                    low
                };
                TreeElement::Edge(child - 1)
            })
            .collect()
    } else {
        Vec::new()
    };

    Ok(QuotientTree {
        part: Some(part),
        node_weights,
        edges,
        component_of_vertex,
        image,
    })
}

/// Roots the tree at node 0 and fills the side totals of every edge with a
/// single post-order accumulation.
fn root_tree(
    node_weights: &[u64],
    links: &[(usize, usize, u64)],
) -> std::result::Result<Vec<TreeEdge>, NotATree> {
    let n = node_weights.len();
    if n == 0 || links.len() != n - 1 {
        return Err(NotATree);
    }
    let mut start = vec![0usize; n + 1];
    for &(a, b, _) in links {
        if a >= n || b >= n || a == b {
            return Err(NotATree);
        }
        start[a + 1] += 1;
        start[b + 1] += 1;
    }
    for k in 0..n {
        start[k + 1] += start[k];
    }
    let mut fill = start.clone();
    let mut adjacency = vec![(0usize, 0u64); start[n]];
    for &(a, b, w) in links {
        adjacency[fill[a]] = (b, w);
        fill[a] += 1;
        adjacency[fill[b]] = (a, w);
        fill[b] += 1;
    }

    let mut parent = vec![usize::MAX; n];
    let mut parent_weight = vec![0u64; n];
    let mut order = Vec::with_capacity(n);
    parent[0] = 0;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &(w, weight) in &adjacency[start[v]..start[v + 1]] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                parent_weight[w] = weight;
                order.push(w);
            }
        }
    }
    if order.len() != n {
        return Err(NotATree);
    }

    let total_nodes: u64 = node_weights.iter().sum();
    let total_edges: u64 = links.iter().map(|l| l.2).sum();
    let mut below_nodes = node_weights.to_vec();
    let mut below_edges = vec![0u64; n];
    for &v in order.iter().skip(1).rev() {
        let p = parent[v];
        below_nodes[p] += below_nodes[v];
        below_edges[p] += below_edges[v] + parent_weight[v];
    }

    Ok((1..n)
        .map(|child| {
            let child_side = SideTotals {
                node_weight: below_nodes[child],
                edge_weight: below_edges[child],
            };
            TreeEdge {
                parent: parent[child],
                child,
                weight: parent_weight[child],
                parent_side: SideTotals {
                    node_weight: total_nodes - child_side.node_weight,
                    edge_weight: total_edges - child_side.edge_weight - parent_weight[child],
                },
                child_side,
            }
        })
        .collect())
}

fn sum_over_edges(
    t: &QuotientTree,
    what: &'static str,
    term: impl Fn(&TreeEdge) -> Option<u64>,
) -> Result<u64> {
    t.edges().iter().try_fold(0u64, |acc, e| {
        term(e)
            .and_then(|v| acc.checked_add(v))
            .ok_or(Error::Overflow(what))
    })
}

/// `Σ n1·n2` over tree edges.
pub fn tree_wiener_v(t: &QuotientTree) -> Result<u64> {
    sum_over_edges(t, "vertex-weighted tree Wiener index", |e| {
        e.parent_side
            .node_weight
            .checked_mul(e.child_side.node_weight)
    })
}

/// `Σ m1·m2` over tree edges.
pub fn tree_wiener_e_hat(t: &QuotientTree) -> Result<u64> {
    sum_over_edges(t, "edge-weighted tree Wiener index", |e| {
        e.parent_side
            .edge_weight
            .checked_mul(e.child_side.edge_weight)
    })
}

/// `Σ (n1·m2 + n2·m1)` over tree edges.
pub fn tree_wiener_ve(t: &QuotientTree) -> Result<u64> {
    sum_over_edges(t, "vertex-edge tree Wiener index", |e| {
        let a = e
            .parent_side
            .node_weight
            .checked_mul(e.child_side.edge_weight)?;
        let b = e
            .child_side
            .node_weight
            .checked_mul(e.parent_side.edge_weight)?;
        a.checked_add(b)
    })
}
