//! Constructive ios-injective colouring into T3 for graphs that passed the
//! forbidden-subgraph screen.
//!
//! After the screen every vertex has total degree at most two, so each
//! component is a short oriented path. A component without a directed path
//! of length two alternates sources and sinks; otherwise midpoints of
//! directed paths go to t1, their terminals and hat apices go to t2, and the
//! remaining sources and sinks are fixed from their neighbours.

use crate::decide::DecideError;
use crate::graph::{Mapping, OrientedGraph, Vertex};

const T0: usize = 0;
const T1: usize = 1;
const T2: usize = 2;
const PROBLEM: &str = "ios-t3";

fn fail(message: String) -> DecideError {
    DecideError::internal(PROBLEM, message)
}

fn is_midpoint(g: &OrientedGraph, v: Vertex) -> bool {
    g.in_degree(v) >= 1 && g.out_degree(v) >= 1
}

pub(crate) fn colouring(g: &OrientedGraph) -> Result<Mapping, DecideError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > 2) {
        return Err(fail(format!(
            "vertex {v} has degree {} after the subgraph screen",
            g.degree(v)
        )));
    }
    let mut colour = vec![None; g.n()];
    for comp in g.weak_components() {
        if comp.len() == 1 {
            colour[comp[0]] = Some(T0);
        } else if comp.iter().any(|&v| is_midpoint(g, v)) {
            colour_with_directed_paths(g, &comp, &mut colour)?;
        } else {
            colour_alternating(g, &comp, &mut colour);
        }
    }
    colour
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| fail(format!("vertex {v} left uncoloured"))))
        .collect::<Result<Vec<_>, _>>()
        .map(Mapping)
}

/// Every vertex is a source or a sink.
fn colour_alternating(g: &OrientedGraph, comp: &[Vertex], colour: &mut [Option<usize>]) {
    // A lone hat: its two ends are sources of out-degree one.
    if comp.len() == 3 {
        if let Some(&apex) = comp.iter().find(|&&v| g.in_degree(v) == 2) {
            let ends = g.in_neighbours(apex);
            colour[ends[0]] = Some(T0);
            colour[ends[1]] = Some(T1);
            colour[apex] = Some(T2);
            return;
        }
    }
    for &v in comp {
        if g.in_degree(v) == 0 {
            colour[v] = Some(if g.out_degree(v) == 2 { T0 } else { T1 });
        }
    }
    // Sinks sharing a source of out-degree two form the edges of L.
    for &s in comp {
        if let &[a, b] = g.out_neighbours(s) {
            let (first, second) = match (g.in_degree(a), g.in_degree(b)) {
                (2, _) => (b, a),
                (_, 2) => (a, b),
                _ => (a.min(b), a.max(b)),
            };
            colour[first] = Some(T1);
            colour[second] = Some(T2);
        }
    }
    for &v in comp {
        if colour[v].is_none() {
            colour[v] = Some(T2);
        }
    }
}

fn colour_with_directed_paths(
    g: &OrientedGraph,
    comp: &[Vertex],
    colour: &mut [Option<usize>],
) -> Result<(), DecideError> {
    let in_y = |v: Vertex| is_midpoint(g, v);
    let in_x = |v: Vertex| {
        g.out_degree(v) == 0 && (g.in_degree(v) == 2 || g.in_neighbours(v).iter().any(|&u| in_y(u)))
    };
    for &v in comp {
        match (in_x(v), in_y(v)) {
            (true, true) => return Err(fail(format!("vertex {v} is both terminal and midpoint"))),
            (true, false) => colour[v] = Some(T2),
            (false, true) => colour[v] = Some(T1),
            (false, false) => {}
        }
    }
    // Sinks of in-degree one hanging off a source of out-degree two.
    for &v in comp {
        if colour[v].is_some() || g.in_degree(v) != 1 {
            continue;
        }
        let s = g.in_neighbours(v)[0];
        let outs = g.out_neighbours(s);
        if outs.len() != 2 {
            return Err(fail(format!(
                "sink {v} is not covered by any colouring rule"
            )));
        }
        let sibling = if outs[0] == v { outs[1] } else { outs[0] };
        colour[v] = Some(if in_y(sibling) {
            T2
        } else if in_x(sibling) {
            T1
        } else {
            return Err(fail(format!(
                "sink {v} has sibling {sibling} outside both terminals and midpoints"
            )));
        });
    }
    for &s in comp {
        if colour[s].is_some() {
            continue;
        }
        if g.out_degree(s) == 2 {
            colour[s] = Some(T0);
            continue;
        }
        let v = g.out_neighbours(s)[0];
        if in_y(v) {
            colour[s] = Some(T0);
            continue;
        }
        let other = g.in_neighbours(v).iter().copied().find(|&u| u != s);
        colour[s] = match other {
            Some(u) if in_y(u) => Some(T0),
            Some(u) if g.in_degree(u) == 0 && g.out_degree(u) == 2 => Some(T1),
            _ => return Err(fail(format!("source {s} into {v} matches no hat-end case"))),
        };
    }
    Ok(())
}
