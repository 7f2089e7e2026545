#![allow(dead_code)]

use bei_core::Graph;
use itertools::Itertools;
use proptest::prelude::*;

/// Every graph on `n` labeled vertices.
pub fn labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let e: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
            Graph::from_edges(n, &e).unwrap()
        })
        .collect()
}

pub fn connected_labeled_graphs(n: usize) -> Vec<Graph> {
    labeled_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Least graph6 encoding by trying every permutation.
pub fn brute_canonical(g: &Graph) -> Vec<u8> {
    (0..g.n()).permutations(g.n()).map(|p| bei_core::graph6::encode(&g.relabel(&p))).min().unwrap()
}

pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
            let e: Vec<(usize, usize)> = pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Graph::from_edges(n, &e).unwrap()
        })
    })
}

pub fn arb_connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(min_n, max_n).prop_filter("connected", Graph::is_connected)
}

pub fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

pub fn arb_graph_with_perm(min_n: usize, max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(min_n, max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_perm(n))
    })
}
