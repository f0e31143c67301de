//! Seeded random oriented graphs for sampled sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::OrientedGraph;

/// The generator for sample `index` of a sweep seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn shuffled_pairs(rng: &mut impl Rng, n: usize) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    pairs.shuffle(rng);
    pairs
}

fn orient(rng: &mut impl Rng, (i, j): (usize, usize)) -> (usize, usize) {
    if rng.gen_bool(0.5) {
        (i, j)
    } else {
        (j, i)
    }
}

/// Each pair becomes an arc with probability `p`, in a random direction.
pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> OrientedGraph {
    let mut arcs = Vec::new();
    for pair in shuffled_pairs(rng, n) {
        if rng.gen_bool(p) {
            arcs.push(orient(rng, pair));
        }
    }
    OrientedGraph::build(n, arcs).expect("random arcs are oriented")
}

/// Random arcs added in random order while `allowed(in, out)` holds at both
/// endpoints after the addition.
fn bounded(
    rng: &mut impl Rng,
    n: usize,
    p: f64,
    allowed: impl Fn(usize, usize) -> bool,
) -> OrientedGraph {
    let mut indeg = vec![0; n];
    let mut outdeg = vec![0; n];
    let mut arcs = Vec::new();
    for pair in shuffled_pairs(rng, n) {
        if !rng.gen_bool(p) {
            continue;
        }
        let (u, v) = orient(rng, pair);
        if allowed(indeg[u], outdeg[u] + 1) && allowed(indeg[v] + 1, outdeg[v]) {
            outdeg[u] += 1;
            indeg[v] += 1;
            arcs.push((u, v));
        }
    }
    OrientedGraph::build(n, arcs).expect("random arcs are oriented")
}

/// Underlying maximum degree at most `max_degree`.
pub fn degree_bounded(rng: &mut impl Rng, n: usize, p: f64, max_degree: usize) -> OrientedGraph {
    bounded(rng, n, p, |i, o| i + o <= max_degree)
}

/// The mixed sampler used by sweeps: sparse G(n, p), graphs of maximum
/// degree three, and unions of oriented paths and cycles.
pub fn sample_graph(rng: &mut impl Rng, n: usize) -> OrientedGraph {
    match rng.gen_range(0..20) {
        0..=7 => {
            let p = rng.gen_range(0.05..0.45);
            gnp(rng, n, p)
        }
        8..=14 => {
            let p = rng.gen_range(0.2..0.9);
            degree_bounded(rng, n, p, 3)
        }
        _ => {
            let p = rng.gen_range(0.3..1.0);
            degree_bounded(rng, n, p, 2)
        }
    }
}

/// In- and out-degree at most two and no vertex with both equal to two,
/// so that list propagation runs without a degree obstruction.
pub fn propagation_graph(rng: &mut impl Rng, n: usize) -> OrientedGraph {
    let p = rng.gen_range(0.1..0.5);
    bounded(rng, n, p, |i, o| i <= 2 && o <= 2 && !(i == 2 && o == 2))
}
