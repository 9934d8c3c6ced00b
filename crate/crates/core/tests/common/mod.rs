#![allow(dead_code)]

use std::collections::VecDeque;

use phenylene_wiener::phenylene::{build_phenylene, Phenylene};
use phenylene_wiener::squeeze::{
    enumerate_catacondensed, generate_linear_spec, random_spec, validate_squeeze, SqueezeSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn linear(n: usize) -> Phenylene {
    build(&generate_linear_spec(n))
}

pub fn build(spec: &SqueezeSpec) -> Phenylene {
    build_phenylene(validate_squeeze(spec).expect("valid spec"))
}

/// Every catacondensed system with at most `max_enumerated` hexagons, then
/// `random` seeded random systems with at most `max_random` hexagons.
pub fn instance_set(
    max_enumerated: usize,
    random: usize,
    max_random: usize,
    seed: u64,
) -> Vec<SqueezeSpec> {
    let mut specs: Vec<SqueezeSpec> = enumerate_catacondensed(max_enumerated)
        .into_iter()
        .flatten()
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let n = rng.gen_range(1..=max_random);
        specs.push(random_spec(n, &mut rng));
    }
    specs
}

/// All-pairs BFS distances in a graph given as adjacency lists.
pub fn all_distances(adjacency: &[Vec<usize>]) -> Vec<Vec<u64>> {
    (0..adjacency.len())
        .map(|s| {
            let mut dist = vec![u64::MAX; adjacency.len()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adjacency[v] {
                    if dist[w] == u64::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            dist
        })
        .collect()
}

use phenylene_wiener::cuts::{class_direction, ThetaClass};
use phenylene_wiener::phenylene::Provenance;

/// Names of the elementary cuts of a linear chain: `A` is the long cut,
/// `B_i` and `C_i` the two slanted cuts through hexagon `i`, `D_i` the cut
/// through square `i` (all 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CutName {
    A,
    B(u64),
    C(u64),
    D(u64),
}

pub fn cut_name(g: &Phenylene, class: &ThetaClass) -> CutName {
    let edge = g.edges()[class.edges[0]];
    let index = match edge.provenance {
        Provenance::Hexagon(k) | Provenance::Square(k) => k as u64 + 1,
    };
    match class_direction(g, class).get() {
        1 => CutName::A,
        2 => CutName::B(index),
        3 => CutName::C(index),
        _ => CutName::D(index),
    }
}
