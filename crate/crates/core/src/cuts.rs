//! Θ-classes (elementary cuts) of a phenylene, traced through faces.
//!
//! Two edges are opposite in a face when they are sides `c` and `c + 3` of
//! a hexagon, or opposite sides of a square. Closing that relation
//! transitively gives the Θ-classes; each class splits the graph into two
//! sides.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;

use crate::phenylene::Phenylene;
use crate::squeeze::DirectionClass;
use crate::union_find::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeSide {
    Side(u8),
    Cut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaClass {
    pub id: usize,
    /// Sorted edge ids.
    pub edges: Vec<usize>,
    /// Side 0 is the component of `G - edges` holding vertex 0.
    side_of_vertex: Vec<u8>,
    in_class: Vec<bool>,
}

impl ThetaClass {
    pub fn side_of_vertex(&self, vertex: usize) -> u8 {
        self.side_of_vertex[vertex]
    }

    pub fn side_of_edge(&self, g: &Phenylene, edge: usize) -> EdgeSide {
        if self.in_class[edge] {
            EdgeSide::Cut
        } else {
            EdgeSide::Side(self.side_of_vertex[g.edges()[edge].endpoints.0])
        }
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.in_class[edge]
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Number of vertices on side 1.
    pub fn side_one_size(&self) -> usize {
        self.side_of_vertex.iter().filter(|&&s| s == 1).count()
    }

    /// Same class with the side labels exchanged.
    pub fn swapped(&self) -> ThetaClass {
        ThetaClass {
            side_of_vertex: self.side_of_vertex.iter().map(|s| 1 - s).collect(),
            ..self.clone()
        }
    }
}

/// Θ-classes ordered by smallest edge id.
pub fn theta_classes(g: &Phenylene) -> Vec<ThetaClass> {
    let mut uf = UnionFind::new(g.edge_count());
    for k in 0..g.hexagon_count() {
        let sides = g.hexagon_edges(k);
        for c in 0..3 {
            uf.union(sides[c], sides[c + 3]);
        }
    }
    for square in g.square_faces() {
        uf.union(square.edges[0], square.edges[2]);
        uf.union(square.edges[1], square.edges[3]);
    }
    let (labels, count) = uf.labels();
    let mut members = vec![Vec::new(); count];
    for (edge, &label) in labels.iter().enumerate() {
        members[label].push(edge);
    }

    members
        .into_par_iter()
        .enumerate()
        .map(|(id, edges)| {
            let mut in_class = vec![false; g.edge_count()];
            for &e in &edges {
                in_class[e] = true;
            }
            let side_of_vertex = sides_without(g, &in_class);
            ThetaClass {
                id,
                edges,
                side_of_vertex,
                in_class,
            }
        })
        .collect()
}

/// Vertices reachable from vertex 0 avoiding `removed` get side 0.
fn sides_without(g: &Phenylene, removed: &[bool]) -> Vec<u8> {
    let mut side = vec![1u8; g.vertex_count()];
    side[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.neighbors(v) {
            if !removed[e] && side[w] == 1 {
                side[w] = 0;
                queue.push_back(w);
            }
        }
    }
    side
}

/// Edge ids of each direction class, indexed by `DirectionClass::index`.
pub fn direction_partition(g: &Phenylene) -> [Vec<usize>; 4] {
    let mut parts: [Vec<usize>; 4] = Default::default();
    for edge in g.edges() {
        parts[edge.class.index()].push(edge.id);
    }
    parts
}

/// The direction class a Θ-class lies in.
pub fn class_direction(g: &Phenylene, class: &ThetaClass) -> DirectionClass {
    g.edges()[class.edges[0]].class
}

/// Pairs of classes that meet in a common face (crossing cuts).
pub fn crossing_pairs(g: &Phenylene, classes: &[ThetaClass]) -> BTreeSet<(usize, usize)> {
    let mut class_of_edge = vec![0; g.edge_count()];
    for class in classes {
        for &e in &class.edges {
            class_of_edge[e] = class.id;
        }
    }
    let mut pairs = BTreeSet::new();
    let mut add_face = |face: &[usize]| {
        let ids: BTreeSet<usize> = face.iter().map(|&e| class_of_edge[e]).collect();
        let ids: Vec<usize> = ids.into_iter().collect();
        for (k, &a) in ids.iter().enumerate() {
            for &b in &ids[k + 1..] {
                pairs.insert((a, b));
            }
        }
    };
    for k in 0..g.hexagon_count() {
        add_face(&g.hexagon_edges(k));
    }
    for square in g.square_faces() {
        add_face(&square.edges);
    }
    pairs
}
