//! Exhaustive enumeration of labeled oriented graphs.
//!
//! Each unordered pair {i, j} with i < j (in lexicographic order) is a base-3
//! digit of the graph index: 0 = no arc, 1 = i→j, 2 = j→i. The least
//! significant digit belongs to the first pair.

use crate::graph::{GraphError, OrientedGraph, Vertex};

pub const DEFAULT_BOUND: usize = 5;

fn pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Number of labeled oriented graphs on `n` vertices, 3^(n(n-1)/2).
pub fn graph_count(n: usize) -> u64 {
    3u64.pow((n * n.saturating_sub(1) / 2) as u32)
}

/// The graph with the given index (see module docs).
pub fn graph_from_index(n: usize, mut index: u64) -> OrientedGraph {
    let mut arcs = Vec::new();
    for (i, j) in pairs(n) {
        match index % 3 {
            1 => arcs.push((i, j)),
            2 => arcs.push((j, i)),
            _ => {}
        }
        index /= 3;
    }
    OrientedGraph::build(n, arcs).expect("enumerated graph is valid")
}

/// Index of `g` in the enumeration order.
pub fn graph_index(g: &OrientedGraph) -> u64 {
    let mut index = 0u64;
    for (i, j) in pairs(g.n()).into_iter().rev() {
        let digit = if g.has_arc(i, j) {
            1
        } else if g.has_arc(j, i) {
            2
        } else {
            0
        };
        index = index * 3 + digit;
    }
    index
}

/// Enumerator over all labeled graphs on `n` vertices, optionally keeping
/// only the first representative of each isomorphism class.
#[derive(Debug, Clone)]
pub struct Enumeration {
    n: usize,
    next: u64,
    end: u64,
    unlabeled: bool,
}

impl Enumeration {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        Self::with_bound(n, DEFAULT_BOUND)
    }

    pub fn with_bound(n: usize, bound: usize) -> Result<Self, GraphError> {
        if n > bound {
            return Err(GraphError::BoundExceeded { n, bound });
        }
        Ok(Enumeration {
            n,
            next: 0,
            end: graph_count(n),
            unlabeled: false,
        })
    }

    /// Yield only graphs whose index equals their canonical index.
    pub fn unlabeled(mut self, on: bool) -> Self {
        self.unlabeled = on;
        self
    }
}

impl Iterator for Enumeration {
    type Item = OrientedGraph;

    fn next(&mut self) -> Option<OrientedGraph> {
        while self.next < self.end {
            let index = self.next;
            self.next += 1;
            let g = graph_from_index(self.n, index);
            if !self.unlabeled || canonical_index(&g) == index {
                return Some(g);
            }
        }
        None
    }
}

/// All labeled oriented graphs on `n ≤ DEFAULT_BOUND` vertices.
pub fn enumerate_all(n: usize) -> Result<Enumeration, GraphError> {
    Enumeration::new(n)
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Smallest enumeration index over all relabellings; equal for isomorphic
/// graphs. Brute force over n! permutations, so only for small n.
pub fn canonical_index(g: &OrientedGraph) -> u64 {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    let mut best = u64::MAX;
    loop {
        best = best.min(graph_index(&g.relabel(&perm)));
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

pub fn is_isomorphic(a: &OrientedGraph, b: &OrientedGraph) -> bool {
    a.n() == b.n() && a.arc_count() == b.arc_count() && canonical_index(a) == canonical_index(b)
}
