use std::collections::BTreeMap;

use proptest::prelude::*;
use scalefree::cli_io::formats::{read_edge_list, read_histogram_csv, write_edge_list, write_histogram_csv};
use scalefree::graph_gen::{
    configuration_model, degree_histogram, generate_ba_network, generate_rsl_network, BAParams,
};
use scalefree::sampling::generate_degree_sequence;
use scalefree::{MixingSpec, MultiGraph, RngSeed};

fn recount(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut degrees = vec![0u64; n];
    for &(u, v) in edges {
        degrees[u] += 1;
        degrees[v] += 1;
    }
    degrees
}

fn even_degrees() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..8, 1..=20).prop_map(|mut d| {
        if d.iter().sum::<u64>() % 2 == 1 {
            d[0] += 1;
        }
        d
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn configuration_model_conserves_degrees(degrees in even_degrees(), seed in any::<u64>()) {
        let g = configuration_model(&degrees, RngSeed(seed)).unwrap();
        prop_assert_eq!(g.degrees(), &degrees[..]);
        prop_assert_eq!(recount(degrees.len(), g.edges()), degrees.clone());
        prop_assert_eq!(2 * g.edge_count() as u64, degrees.iter().sum::<u64>());
    }

    #[test]
    fn odd_degree_sum_is_rejected(mut degrees in even_degrees(), seed in any::<u64>()) {
        degrees[0] += 1;
        prop_assert!(configuration_model(&degrees, RngSeed(seed)).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rsl_networks_satisfy_handshake(n in 2usize..300, c in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = generate_rsl_network(n, MixingSpec::new(c).unwrap(), RngSeed(seed)).unwrap();
        let degrees = recount(n, g.edges());
        prop_assert_eq!(g.degrees(), &degrees[..]);
        prop_assert_eq!(degrees.iter().sum::<u64>(), 2 * g.edge_count() as u64);
        prop_assert!(degrees.iter().all(|&k| k >= 1));
    }

    #[test]
    fn ba_networks_satisfy_handshake(m in 1usize..5, extra in 1usize..200, seed in any::<u64>()) {
        let params = BAParams::new(m, m + 1 + extra, RngSeed(seed)).unwrap();
        let g = generate_ba_network(params).unwrap();
        let degrees = recount(params.n, g.edges());
        prop_assert_eq!(g.degrees(), &degrees[..]);
        prop_assert_eq!(g.edge_count(), params.expected_edge_count());
        prop_assert!(degrees.iter().all(|&k| k >= m as u64));
    }

    #[test]
    fn histogram_fractions_sum_to_one(n in 2usize..2000, c in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = generate_rsl_network(n, MixingSpec::new(c).unwrap(), RngSeed(seed)).unwrap();
        let hist = degree_histogram(&g);
        let total: f64 = hist.bins.iter().map(|b| b.fraction).sum();
        prop_assert!((total - 1.0).abs() < 1e-9);
        prop_assert_eq!(hist.bins.iter().map(|b| b.count).sum::<usize>(), n);
        prop_assert!(hist.bins.iter().all(|b| b.count > 0));
    }

    #[test]
    fn edge_list_round_trips(degrees in even_degrees(), seed in any::<u64>()) {
        let g = configuration_model(&degrees, RngSeed(seed)).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        prop_assert_eq!(read_edge_list(&buf[..]).unwrap(), g);
    }
}

#[test]
fn four_stubs_match_uniformly() {
    // three perfect matchings of {0,1,2,3}; identify each by 0's partner
    let runs = 100_000u64;
    let mut tally: BTreeMap<usize, u64> = BTreeMap::new();
    for seed in 0..runs {
        let g = configuration_model(&[1, 1, 1, 1], RngSeed(seed)).unwrap();
        let &(_, partner) = g.edges().iter().find(|&&(u, _)| u == 0).unwrap();
        *tally.entry(partner).or_default() += 1;
    }
    assert_eq!(tally.keys().copied().collect::<Vec<_>>(), vec![1, 2, 3]);
    for (&partner, &count) in &tally {
        let freq = count as f64 / runs as f64;
        assert!((freq - 1.0 / 3.0).abs() < 0.02, "partner {partner}: {freq}");
    }
}

fn edge_list_bytes(g: &MultiGraph) -> Vec<u8> {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).unwrap();
    buf
}

#[test]
fn generators_are_deterministic() {
    for seed in [0u64, 1, 42, u64::MAX] {
        let spec = MixingSpec::new(0.5).unwrap();
        let a = generate_rsl_network(5_000, spec, RngSeed(seed)).unwrap();
        let b = generate_rsl_network(5_000, spec, RngSeed(seed)).unwrap();
        assert_eq!(edge_list_bytes(&a), edge_list_bytes(&b));

        let params = BAParams::new(2, 5_000, RngSeed(seed)).unwrap();
        let a = generate_ba_network(params).unwrap();
        let b = generate_ba_network(params).unwrap();
        assert_eq!(edge_list_bytes(&a), edge_list_bytes(&b));

        let degrees: Vec<u64> = vec![3, 1, 2, 2, 4, 1, 1];
        let a = configuration_model(&degrees, RngSeed(seed)).unwrap();
        let b = configuration_model(&degrees, RngSeed(seed)).unwrap();
        assert_eq!(edge_list_bytes(&a), edge_list_bytes(&b));

        let x = generate_degree_sequence(1_000, spec, RngSeed(seed)).unwrap();
        let y = generate_degree_sequence(1_000, spec, RngSeed(seed)).unwrap();
        assert_eq!(x, y);
    }
    let a = generate_rsl_network(1_000, MixingSpec::uniform(), RngSeed(1)).unwrap();
    let b = generate_rsl_network(1_000, MixingSpec::uniform(), RngSeed(2)).unwrap();
    assert_ne!(edge_list_bytes(&a), edge_list_bytes(&b));
}

#[test]
fn histogram_csv_round_trips() {
    let g = generate_rsl_network(3_000, MixingSpec::linear(), RngSeed(9)).unwrap();
    let hist = degree_histogram(&g);
    let mut buf = Vec::new();
    write_histogram_csv(&hist, &mut buf).unwrap();
    let back = read_histogram_csv(&buf[..]).unwrap();
    assert_eq!(back, hist);
    let mut sorted = g.degrees().to_vec();
    sorted.sort_unstable();
    assert_eq!(back.to_degrees(), sorted);
}
