//! Structural invariants over random phenylenes.

mod common;

use phenylene_wiener::cuts::{direction_partition, theta_classes};
use phenylene_wiener::hyper::{all_pair_counts, pair_contribution, wwe_star};
use phenylene_wiener::squeeze::{parse_squeeze_spec, random_spec};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_systems_have_phenylene_shape(n in 1usize..=12, seed in any::<u64>()) {
        let spec = random_spec(n, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(parse_squeeze_spec(&spec.to_string()).unwrap(), spec.clone());
        let g = common::build(&spec);
        prop_assert_eq!(g.vertex_count(), 6 * n);
        prop_assert_eq!(g.edge_count(), 8 * n - 2);
        prop_assert!((0..g.vertex_count()).all(|v| (2..=3).contains(&g.degree(v))));
        let partition = direction_partition(&g);
        prop_assert_eq!(partition[3].len(), 2 * (n - 1));
        prop_assert_eq!(partition.iter().map(Vec::len).sum::<usize>(), g.edge_count());
    }

    #[test]
    fn pair_counts_partition_remaining_edges(n in 1usize..=8, seed in any::<u64>()) {
        let g = common::build(&random_spec(n, &mut ChaCha8Rng::seed_from_u64(seed)));
        let classes = theta_classes(&g);
        let counts = all_pair_counts(&g, &classes);
        prop_assert_eq!(counts.len(), classes.len() * (classes.len() - 1) / 2);
        for pc in &counts {
            let expected = g.edge_count() - classes[pc.i].len() - classes[pc.j].len();
            prop_assert_eq!(pc.total() as usize, expected);
            let f = pair_contribution(pc);
            prop_assert_eq!(pair_contribution(&pc.swap_first()), f);
        }
        let total: u64 = counts.iter().map(pair_contribution).sum();
        prop_assert_eq!(total, wwe_star(&g, &classes).unwrap());
    }

    #[test]
    fn every_class_splits_vertices(n in 1usize..=10, seed in any::<u64>()) {
        let g = common::build(&random_spec(n, &mut ChaCha8Rng::seed_from_u64(seed)));
        for class in theta_classes(&g) {
            let ones = class.side_one_size();
            prop_assert!(ones > 0 && ones < g.vertex_count());
            for &e in &class.edges {
                let (a, b) = g.edges()[e].endpoints;
                prop_assert_ne!(class.side_of_vertex(a), class.side_of_vertex(b));
            }
        }
    }
}
