//! The phenylene graph of a squeeze: every hexagon gets its own six
//! vertices and every inner-dual edge becomes a square.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::squeeze::{DirectionClass, Squeeze};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// 0-based hexagon index.
    Hexagon(usize),
    /// Index into [`Squeeze::inner_dual`].
    Square(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRecord {
    pub id: usize,
    /// Smaller vertex id first.
    pub endpoints: (usize, usize),
    pub class: DirectionClass,
    pub provenance: Provenance,
}

/// Square face, vertices and edges in cyclic order. Edges `0` and `2` are
/// the two copies of the shared squeeze side, `1` and `3` connect them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareFace {
    pub vertices: [usize; 4],
    pub edges: [usize; 4],
}

#[derive(Debug, Clone)]
pub struct Phenylene {
    edges: Vec<EdgeRecord>,
    adjacency: Vec<Vec<(usize, usize)>>,
    square_faces: Vec<SquareFace>,
    squeeze: Squeeze,
}

/// Vertex `6k + c` is corner `c` of hexagon `k`; edge `6k + c` joins
/// corners `c` and `c + 1`. Square connecting edges follow, two per
/// inner-dual edge.
pub fn build_phenylene(squeeze: Squeeze) -> Phenylene {
    let n = squeeze.hexagon_count();
    let mut edges = Vec::with_capacity(8 * n - 2);
    for k in 0..n {
        for c in 0..6 {
            let (a, b) = (6 * k + c, 6 * k + (c + 1) % 6);
            edges.push(EdgeRecord {
                id: edges.len(),
                endpoints: (a.min(b), a.max(b)),
                class: DirectionClass::of_side(c),
                provenance: Provenance::Hexagon(k),
            });
        }
    }

    let mut square_faces = Vec::with_capacity(n.saturating_sub(1));
    for (index, dual) in squeeze.inner_dual().iter().enumerate() {
        let (p, h) = (dual.parent, dual.child);
        let d = dual.direction.index();
        let e = dual.direction.opposite().index();
        let parent_corners = &squeeze.corners()[p];
        let child_corners = &squeeze.corners()[h];
        // the child's copy of the side runs between corners e and e + 1,
        // matched to the parent's corners through the shared lattice vertex
        let child_corner_of = |parent_corner: usize| {
            let vertex = parent_corners[parent_corner];
            [e, (e + 1) % 6]
                .into_iter()
                .find(|&c| child_corners[c] == vertex)
                .expect("adjacent hexagons share both ends of the side")
        };
        let pa = 6 * p + d;
        let pb = 6 * p + (d + 1) % 6;
        let ha = 6 * h + child_corner_of(d);
        let hb = 6 * h + child_corner_of((d + 1) % 6);

        let connect = |edges: &mut Vec<EdgeRecord>, x: usize, y: usize| {
            let id = edges.len();
            edges.push(EdgeRecord {
                id,
                endpoints: (x.min(y), x.max(y)),
                class: DirectionClass::FOUR,
                provenance: Provenance::Square(index),
            });
            id
        };
        let via_b = connect(&mut edges, pb, hb);
        let via_a = connect(&mut edges, ha, pa);
        square_faces.push(SquareFace {
            vertices: [pa, pb, hb, ha],
            edges: [6 * p + d, via_b, 6 * h + e, via_a],
        });
    }

    let mut adjacency = vec![Vec::with_capacity(3); 6 * n];
    for edge in &edges {
        let (a, b) = edge.endpoints;
        adjacency[a].push((b, edge.id));
        adjacency[b].push((a, edge.id));
    }

    Phenylene {
        edges,
        adjacency,
        square_faces,
        squeeze,
    }
}

impl Phenylene {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn hexagon_count(&self) -> usize {
        self.squeeze.hexagon_count()
    }

    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    /// `(neighbour, edge id)` pairs.
    pub fn neighbors(&self, vertex: usize) -> &[(usize, usize)] {
        &self.adjacency[vertex]
    }

    pub fn hexagon_face(&self, hexagon: usize) -> [usize; 6] {
        std::array::from_fn(|c| 6 * hexagon + c)
    }

    /// Edge ids of a hexagon; edge `c` is opposite edge `c + 3`.
    pub fn hexagon_edges(&self, hexagon: usize) -> [usize; 6] {
        std::array::from_fn(|c| 6 * hexagon + c)
    }

    pub fn square_faces(&self) -> &[SquareFace] {
        &self.square_faces
    }

    pub fn squeeze(&self) -> &Squeeze {
        &self.squeeze
    }

    /// Same graph with hexagon-edge classes 1, 2, 3 renamed to
    /// `mapping[0..3]`. Class 4 is left alone.
    pub fn with_relabeled_classes(&self, mapping: [DirectionClass; 3]) -> Phenylene {
        let mut relabeled = self.clone();
        for edge in &mut relabeled.edges {
            if edge.class != DirectionClass::FOUR {
                edge.class = mapping[edge.class.index()];
            }
        }
        relabeled
    }

    /// Plain-text edge list, one `u v class` line per edge in id order.
    pub fn edge_list(&self) -> String {
        let mut out = String::with_capacity(self.edges.len() * 12);
        for edge in &self.edges {
            let (u, v) = edge.endpoints;
            writeln!(out, "{u} {v} {}", edge.class).expect("writing to a String");
        }
        out
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.adjacency[vertex].len()
    }
}

/// All-pairs vertex distances by one breadth-first search per vertex.
pub fn distance_matrix(g: &Phenylene) -> Vec<Vec<u32>> {
    (0..g.vertex_count())
        .map(|source| {
            let mut dist = vec![u32::MAX; g.vertex_count()];
            let mut queue = VecDeque::from([source]);
            dist[source] = 0;
            while let Some(v) = queue.pop_front() {
                for &(w, _) in g.neighbors(v) {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            dist
        })
        .collect()
}
