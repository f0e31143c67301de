//! Injective (not necessarily induced) subgraph search for small patterns.

use crate::graph::{Mapping, OrientedGraph, Vertex};

/// Pattern vertices in BFS order from the smallest vertex of each component,
/// so that every vertex after a component's first has an earlier neighbour.
fn search_order(pattern: &OrientedGraph) -> Vec<Vertex> {
    let mut order = Vec::with_capacity(pattern.n());
    let mut seen = vec![false; pattern.n()];
    for root in pattern.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in pattern.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct State<'a> {
    pattern: &'a OrientedGraph,
    host: &'a OrientedGraph,
    order: Vec<Vertex>,
    image: Vec<Option<Vertex>>,
    used: Vec<bool>,
}

impl State<'_> {
    fn consistent(&self, p: Vertex, h: Vertex) -> bool {
        let pat = self.pattern;
        pat.out_neighbours(p).iter().all(|&q| match self.image[q] {
            Some(hq) => self.host.has_arc(h, hq),
            None => true,
        }) && pat.in_neighbours(p).iter().all(|&q| match self.image[q] {
            Some(hq) => self.host.has_arc(hq, h),
            None => true,
        })
    }

    fn candidates(&self, p: Vertex) -> Vec<Vertex> {
        let pat = self.pattern;
        for &q in pat.in_neighbours(p) {
            if let Some(hq) = self.image[q] {
                return self.host.out_neighbours(hq).to_vec();
            }
        }
        for &q in pat.out_neighbours(p) {
            if let Some(hq) = self.image[q] {
                return self.host.in_neighbours(hq).to_vec();
            }
        }
        self.host
            .vertices()
            .filter(|&h| {
                self.host.in_degree(h) >= pat.in_degree(p)
                    && self.host.out_degree(h) >= pat.out_degree(p)
            })
            .collect()
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        for h in self.candidates(p) {
            if self.used[h] || !self.consistent(p, h) {
                continue;
            }
            self.image[p] = Some(h);
            self.used[h] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.image[p] = None;
            self.used[h] = false;
        }
        false
    }
}

/// An injective homomorphism of `pattern` into `host`, i.e. a copy of
/// `pattern` as a subgraph of `host`.
pub fn find_subgraph(pattern: &OrientedGraph, host: &OrientedGraph) -> Option<Mapping> {
    if pattern.n() > host.n() || pattern.arc_count() > host.arc_count() {
        return None;
    }
    let mut state = State {
        pattern,
        host,
        order: search_order(pattern),
        image: vec![None; pattern.n()],
        used: vec![false; host.n()],
    };
    state
        .extend(0)
        .then(|| Mapping(state.image.iter().map(|h| h.unwrap()).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn finds_hat_in_h4() {
        let f = find_subgraph(&named::hat(), &named::h4()).unwrap();
        assert_eq!(f, Mapping(vec![0, 3, 1]));
    }

    #[test]
    fn not_induced() {
        let t3 = named::transitive_tournament(3);
        let p3 = named::directed_path(3);
        assert_eq!(find_subgraph(&p3, &t3), Some(Mapping(vec![0, 1, 2])));
    }

    #[test]
    fn injective() {
        // P4 maps onto C3 homomorphically but is not a subgraph of it.
        assert_eq!(
            find_subgraph(&named::directed_path(4), &named::directed_cycle(3)),
            None
        );
        assert!(find_subgraph(&named::directed_cycle(3), &named::directed_cycle(3)).is_some());
    }
}
