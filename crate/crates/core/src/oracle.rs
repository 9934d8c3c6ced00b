//! Brute-force reference computations over explicit distance matrices and
//! line graphs. Nothing here touches cuts or quotient trees; the fast path
//! is checked against these.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::phenylene::Phenylene;

/// Simple undirected graph given by an edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericGraph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: expected `u v` or `u v class`")]
    BadLine { line: usize },
    #[error("edge ({0}, {1}) is a loop or repeats an earlier edge")]
    NotSimple(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
}

impl GenericGraph {
    /// Vertices are `0..vertex_count`; rejects loops, repeated edges and
    /// disconnected graphs.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(a, b) in &edges {
            if a == b
                || a >= vertex_count
                || b >= vertex_count
                || !seen.insert((a.min(b), a.max(b)))
            {
                return Err(GraphError::NotSimple(a, b));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let graph = GenericGraph { adjacency, edges };
        if bfs(&graph, 0, None).contains(&u32::MAX) {
            return Err(GraphError::Disconnected);
        }
        Ok(graph)
    }

    /// Parses `u v [class]` lines as written by [`Phenylene::edge_list`].
    /// The vertex count is one more than the largest id.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| GraphError::BadLine { line: k + 1 })
            };
            if !(2..=3).contains(&fields.len()) {
                return Err(GraphError::BadLine { line: k + 1 });
            }
            edges.push((parse(fields[0])?, parse(fields[1])?));
        }
        let vertex_count = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        GenericGraph::new(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn cycle(n: usize) -> Self {
        GenericGraph::new(n, (0..n).map(|k| (k, (k + 1) % n)).collect()).expect("cycle")
    }

    pub fn path(n: usize) -> Self {
        GenericGraph::new(n, (1..n).map(|k| (k - 1, k)).collect()).expect("path")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        GenericGraph::new(n, edges).expect("complete graph")
    }
}

impl From<&Phenylene> for GenericGraph {
    fn from(g: &Phenylene) -> Self {
        let edges = g.edges().iter().map(|e| e.endpoints).collect();
        GenericGraph::new(g.vertex_count(), edges).expect("phenylenes are simple and connected")
    }
}

/// BFS distances from `source`, optionally ignoring some edges (by index).
fn bfs(g: &GenericGraph, source: usize, removed: Option<&HashSet<(usize, usize)>>) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.vertex_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        for &w in &g.adjacency[v] {
            if removed.is_some_and(|r| r.contains(&(v.min(w), v.max(w)))) {
                continue;
            }
            if dist[w] == u32::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn distances(g: &GenericGraph) -> Vec<Vec<u32>> {
    (0..g.vertex_count()).map(|s| bfs(g, s, None)).collect()
}

/// Sums of `d` and `d²` over ordered vertex pairs, one BFS at a time so the
/// matrix is never stored.
fn distance_moments(g: &GenericGraph) -> (u128, u128) {
    let (mut first, mut second) = (0u128, 0u128);
    for source in 0..g.vertex_count() {
        for d in bfs(g, source, None) {
            let d = d as u128;
            first += d;
            second += d * d;
        }
    }
    (first, second)
}

fn narrow(value: u128) -> u64 {
    u64::try_from(value).expect("oracle value exceeds u64")
}

/// `½ ΣΣ d(u, v)`.
pub fn wiener_v_oracle(g: &GenericGraph) -> u64 {
    let (first, _) = distance_moments(g);
    assert_eq!(first % 2, 0);
    narrow(first / 2)
}

/// One vertex per edge of `g`, adjacent when the edges share an endpoint.
pub fn line_graph(g: &GenericGraph) -> GenericGraph {
    let mut incident = vec![Vec::new(); g.vertex_count()];
    for (k, &(a, b)) in g.edges.iter().enumerate() {
        incident[a].push(k);
        incident[b].push(k);
    }
    let mut edges = Vec::new();
    for around in &incident {
        for (x, &e) in around.iter().enumerate() {
            for &f in &around[x + 1..] {
                edges.push((e.min(f), e.max(f)));
            }
        }
    }
    edges.sort_unstable();
    // two edges of a simple graph share at most one endpoint
    GenericGraph::new(g.edges.len(), edges).expect("line graph of a connected simple graph")
}

/// Wiener index of the line graph.
pub fn edge_wiener_oracle(g: &GenericGraph) -> u64 {
    wiener_v_oracle(&line_graph(g))
}

fn endpoint_distance(dist: &[Vec<u32>], e: (usize, usize), f: (usize, usize)) -> u32 {
    dist[e.0][f.0]
        .min(dist[e.0][f.1])
        .min(dist[e.1][f.0])
        .min(dist[e.1][f.1])
}

/// `½ ΣΣ d̂(e, f)` with `d̂` the least distance between endpoints.
pub fn edge_wiener_hat_oracle(g: &GenericGraph) -> u64 {
    let dist = distances(g);
    let mut total = 0u128;
    for &e in &g.edges {
        for &f in &g.edges {
            total += endpoint_distance(&dist, e, f) as u128;
        }
    }
    narrow(total / 2)
}

/// `ΣΣ d̂(x, e)` over all vertices and edges.
pub fn vertex_edge_wiener_oracle(g: &GenericGraph) -> u64 {
    let dist = distances(g);
    let mut total = 0u128;
    for row in &dist {
        for &(a, b) in &g.edges {
            total += row[a].min(row[b]) as u128;
        }
    }
    narrow(total)
}

/// `¼ ΣΣ d + ¼ ΣΣ d²` over ordered pairs. `d + d²` is even and every pair
/// is counted twice, so the division is exact.
pub fn hyper_wiener_oracle(g: &GenericGraph) -> u64 {
    let (first, second) = distance_moments(g);
    assert_eq!((first + second) % 4, 0);
    narrow((first + second) / 4)
}

pub fn edge_hyper_wiener_oracle(g: &GenericGraph) -> u64 {
    hyper_wiener_oracle(&line_graph(g))
}

/// Edge pairs `(e1, e2)` (indices into `g.edges()`) with
/// `d(u1,u2) + d(v1,v2) ≠ d(u1,v2) + d(v1,u2)`. Reflexive and symmetric.
pub fn theta_relation_oracle(g: &GenericGraph) -> Vec<(usize, usize)> {
    theta_matrix(g, &distances(g))
        .into_iter()
        .enumerate()
        .flat_map(|(e, row)| {
            row.into_iter()
                .enumerate()
                .filter(|&(_, related)| related)
                .map(move |(f, _)| (e, f))
        })
        .collect()
}

fn theta_matrix(g: &GenericGraph, dist: &[Vec<u32>]) -> Vec<Vec<bool>> {
    let m = g.edges.len();
    let mut related = vec![vec![false; m]; m];
    for (x, &(u1, v1)) in g.edges.iter().enumerate() {
        for (y, &(u2, v2)) in g.edges.iter().enumerate() {
            related[x][y] = dist[u1][u2] + dist[v1][v2] != dist[u1][v2] + dist[v1][u2];
        }
    }
    related
}

/// Transitive closure of Θ: each class as sorted edge indices, classes
/// ordered by smallest member.
pub fn theta_star_classes(g: &GenericGraph) -> Vec<Vec<usize>> {
    closure_classes(&theta_matrix(g, &distances(g)))
}

fn closure_classes(related: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let m = related.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (x, row) in related.iter().enumerate() {
        for (y, &r) in row.iter().enumerate() {
            if r {
                let (a, b) = (root(&mut parent, x), root(&mut parent, y));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut index_of_root = vec![usize::MAX; m];
    for x in 0..m {
        let r = root(&mut parent, x);
        if index_of_root[r] == usize::MAX {
            index_of_root[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[index_of_root[r]].push(x);
    }
    classes
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartialCubeCheck {
    /// Bipartite, Θ transitive, and every class splits the graph in two.
    PartialCube { classes: Vec<Vec<usize>> },
    /// Vertices of an odd closed walk.
    OddCycle(Vec<usize>),
    /// `e1 Θ e2` and `e2 Θ e3` but not `e1 Θ e3`.
    NotTransitive(usize, usize, usize),
    /// Removing this class does not leave exactly two components.
    BadCut {
        class: Vec<usize>,
        components: usize,
    },
}

impl PartialCubeCheck {
    pub fn is_partial_cube(&self) -> bool {
        matches!(self, PartialCubeCheck::PartialCube { .. })
    }
}

pub fn is_partial_cube_check(g: &GenericGraph) -> PartialCubeCheck {
    if let Some(cycle) = odd_cycle(g) {
        return PartialCubeCheck::OddCycle(cycle);
    }
    let related = theta_matrix(g, &distances(g));
    let classes = closure_classes(&related);
    for class in &classes {
        for (k, &a) in class.iter().enumerate() {
            for &c in &class[k + 1..] {
                if !related[a][c] {
                    let (x, y, z) = non_transitive_witness(&related, a, c);
                    return PartialCubeCheck::NotTransitive(x, y, z);
                }
            }
        }
    }
    for class in &classes {
        let removed: HashSet<(usize, usize)> = class
            .iter()
            .map(|&e| {
                let (a, b) = g.edges[e];
                (a.min(b), a.max(b))
            })
            .collect();
        let components = component_count(g, &removed);
        if components != 2 {
            return PartialCubeCheck::BadCut {
                class: class.clone(),
                components,
            };
        }
    }
    PartialCubeCheck::PartialCube { classes }
}

fn component_count(g: &GenericGraph, removed: &HashSet<(usize, usize)>) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    let mut count = 0;
    for start in 0..g.vertex_count() {
        if seen[start] {
            continue;
        }
        count += 1;
        for (v, d) in bfs(g, start, Some(removed)).into_iter().enumerate() {
            if d != u32::MAX {
                seen[v] = true;
            }
        }
    }
    count
}

/// An odd cycle from a BFS tree and one edge joining two vertices of the
/// same colour, if there is such an edge.
fn odd_cycle(g: &GenericGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![u32::MAX; n];
    depth[0] = 0;
    parent[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &w in &g.adjacency[v] {
            if depth[w] == u32::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let &(mut a, mut b) = g
        .edges
        .iter()
        .find(|&&(a, b)| depth[a] % 2 == depth[b] % 2)?;
    let (mut left, mut right) = (vec![a], vec![b]);
    while a != b {
        if depth[a] >= depth[b] {
            a = parent[a];
            left.push(a);
        } else {
            b = parent[b];
            right.push(b);
        }
    }
    right.pop();
    left.extend(right.into_iter().rev());
    Some(left)
}

/// Shortest Θ-path from `a` to `c`; its first three edges are a witness,
/// since a shortcut would make the path shorter.
fn non_transitive_witness(related: &[Vec<bool>], a: usize, c: usize) -> (usize, usize, usize) {
    let m = related.len();
    let mut previous = vec![usize::MAX; m];
    previous[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == c {
            break;
        }
        for y in 0..m {
            if related[x][y] && previous[y] == usize::MAX {
                previous[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![c];
    while *path.last().unwrap() != a {
        path.push(previous[*path.last().unwrap()]);
    }
    path.reverse();
    (path[0], path[1], path[2])
}
