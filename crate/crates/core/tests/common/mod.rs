#![allow(dead_code)]

use injcol::OrientedGraph;
use proptest::prelude::*;

/// Graphs on 1..=max_n vertices, each pair absent or oriented either way.
pub fn graph(max_n: usize) -> impl Strategy<Value = OrientedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(0u8..3, pairs).prop_map(move |states| {
            let mut arcs = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    match states[k] {
                        1 => arcs.push((i, j)),
                        2 => arcs.push((j, i)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            OrientedGraph::build(n, arcs).unwrap()
        })
    })
}

/// Sparse graphs: each pair is an arc with probability about 1/4.
pub fn sparse_graph(max_n: usize) -> impl Strategy<Value = OrientedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(0u8..8, pairs).prop_map(move |states| {
            let mut arcs = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    match states[k] {
                        0 => arcs.push((i, j)),
                        1 => arcs.push((j, i)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            OrientedGraph::build(n, arcs).unwrap()
        })
    })
}

pub fn arcs(n: usize, arcs: &[(usize, usize)]) -> OrientedGraph {
    OrientedGraph::build(n, arcs.iter().copied()).unwrap()
}
