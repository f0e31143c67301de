//! The named oriented graphs used as targets and obstructions.
//!
//! Vertex orders are fixed here so that certificates are reproducible:
//!
//! | name | arcs |
//! |------|------|
//! | `H3` (hat) | 0→1, 2→1 (apex 1) |
//! | `H3c` | 1→0, 1→2 |
//! | `P_n` | i→i+1 |
//! | `C_n` | i→i+1 mod n |
//! | `T_n` | i→j for i<j |
//! | `H4` | 0→3, 1→3, 2→3 |
//! | `A4` | 0→2, 1→2, 2→3 |
//! | `H5` | 2→1, 1→0, 2→3, 3→4 |
//! | `B2` | 0→1, 2→1, 2→3, 4→3 |
//! | `X2` | 0→2, 1→2, 2→3, 2→4 |
//! | `K13_k` | leaves 0..3, centre 3; leaf i<k is an in-arc |
//! | `C4_1` | 0→1, 1→2, 2→3, 0→3 |
//! | `C4_2` | 0→1, 1→2, 0→3, 3→2 |
//! | `C4_alt` | 0→1, 2→1, 2→3, 0→3 |
//!
//! A trailing `c` names the converse (`H4c`, `A4c`, `H5c`, `B2c`).

use crate::graph::{GraphError, OrientedGraph, Vertex};

fn from_arcs(n: usize, arcs: &[(Vertex, Vertex)]) -> OrientedGraph {
    OrientedGraph::build(n, arcs.iter().copied()).expect("named graph is valid")
}

pub fn hat() -> OrientedGraph {
    from_arcs(3, &[(0, 1), (2, 1)])
}

pub fn directed_path(n: usize) -> OrientedGraph {
    let arcs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    from_arcs(n, &arcs)
}

/// Directed cycle; `n` must be at least 3.
pub fn directed_cycle(n: usize) -> OrientedGraph {
    assert!(n >= 3, "directed cycles need at least three vertices");
    let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    from_arcs(n, &arcs)
}

pub fn transitive_tournament(n: usize) -> OrientedGraph {
    let arcs: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    from_arcs(n, &arcs)
}

pub fn h4() -> OrientedGraph {
    from_arcs(4, &[(0, 3), (1, 3), (2, 3)])
}

pub fn a4() -> OrientedGraph {
    from_arcs(4, &[(0, 2), (1, 2), (2, 3)])
}

pub fn h5() -> OrientedGraph {
    from_arcs(5, &[(2, 1), (1, 0), (2, 3), (3, 4)])
}

pub fn b2() -> OrientedGraph {
    from_arcs(5, &[(0, 1), (2, 1), (2, 3), (4, 3)])
}

pub fn x2() -> OrientedGraph {
    from_arcs(5, &[(0, 2), (1, 2), (2, 3), (2, 4)])
}

/// Orientation of K_{1,3} with `k` in-arcs at the centre (vertex 3).
pub fn claw(k: usize) -> OrientedGraph {
    assert!(k <= 3);
    let arcs: Vec<_> = (0..3)
        .map(|leaf| if leaf < k { (leaf, 3) } else { (3, leaf) })
        .collect();
    from_arcs(4, &arcs)
}

/// The four orientation classes of the 4-cycle: directed, one reversed arc,
/// two directed 2-paths with common ends, alternating.
pub fn four_cycle_orientations() -> Vec<(&'static str, OrientedGraph)> {
    vec![
        ("C4", directed_cycle(4)),
        ("C4_1", from_arcs(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])),
        ("C4_2", from_arcs(4, &[(0, 1), (1, 2), (0, 3), (3, 2)])),
        ("C4_alt", from_arcs(4, &[(0, 1), (2, 1), (2, 3), (0, 3)])),
    ]
}

fn indexed(name: &str, prefix: char) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    let rest = rest.strip_prefix('_').unwrap_or(rest);
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

/// Looks a graph up by name. `P_5` and `P5` are both accepted.
pub fn named(name: &str) -> Result<OrientedGraph, GraphError> {
    let unknown = || GraphError::UnknownName(name.to_string());
    let g = match name {
        "H3" => hat(),
        "H3c" => hat().converse(),
        "H4" => h4(),
        "H4c" => h4().converse(),
        "A4" => a4(),
        "A4c" => a4().converse(),
        "H5" => h5(),
        "H5c" => h5().converse(),
        "B2" => b2(),
        "B2c" => b2().converse(),
        "X2" => x2(),
        "C4_1" | "C4_2" | "C4_alt" => {
            four_cycle_orientations()
                .into_iter()
                .find(|(n, _)| *n == name)
                .ok_or_else(unknown)?
                .1
        }
        _ => {
            if let Some(k) = name.strip_prefix("K13_") {
                let k: usize = k.parse().map_err(|_| unknown())?;
                if k > 3 {
                    return Err(unknown());
                }
                claw(k)
            } else if let Some(n) = indexed(name, 'P') {
                if n == 0 {
                    return Err(unknown());
                }
                directed_path(n)
            } else if let Some(n) = indexed(name, 'C') {
                if n < 3 {
                    return Err(unknown());
                }
                directed_cycle(n)
            } else if let Some(n) = indexed(name, 'T') {
                if n == 0 {
                    return Err(unknown());
                }
                transitive_tournament(n)
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(g)
}

/// The finite obstruction list for ios-injective colouring with three
/// colours (transitive target), as subgraphs, in search order.
pub fn t3_obstructions() -> Vec<(&'static str, OrientedGraph)> {
    let mut list = vec![("C3", directed_cycle(3))];
    list.extend(four_cycle_orientations());
    list.extend([
        ("P4", directed_path(4)),
        ("H4", h4()),
        ("H4c", h4().converse()),
        ("A4", a4()),
        ("A4c", a4().converse()),
        ("H5", h5()),
        ("H5c", h5().converse()),
        ("B2", b2()),
        ("B2c", b2().converse()),
    ]);
    list
}
