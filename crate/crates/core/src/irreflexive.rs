//! Deciders whose obstructions are single small subgraphs: ios-injective
//! homomorphism to T1, T2, C3 and T3, ios to T1^r and iot to T1^r.

use crate::certificate::{Certificate, Obstruction};
use crate::decide::DecideError;
use crate::graph::{Mapping, OrientedGraph, Vertex};
use crate::named;
use crate::oracle::{self, SearchProblem};
use crate::subgraph::find_subgraph;
use crate::t3;
use crate::target::{Mode, Target, Tournament};

const IOS_T1: Target = Target::new(Tournament::T1, Mode::Ios);
const IOS_T2: Target = Target::new(Tournament::T2, Mode::Ios);
const IOS_C3: Target = Target::new(Tournament::C3, Mode::Ios);
const IOS_T3: Target = Target::new(Tournament::T3, Mode::Ios);
const IOS_T1R: Target = Target::new(Tournament::T1r, Mode::Ios);
const IOS_T3_NAME: &str = "ios-t3";
const IOT_T1R: Target = Target::new(Tournament::T1r, Mode::Iot);

/// A copy of H3 centred at `v`, which needs in-degree at least two.
pub(crate) fn hat_at(g: &OrientedGraph, v: Vertex) -> Obstruction {
    let ins = g.in_neighbours(v);
    Obstruction::new("H3", named::hat(), Mapping(vec![ins[0], v, ins[1]]))
}

/// A copy of H3^c centred at `v`, which needs out-degree at least two.
pub(crate) fn converse_hat_at(g: &OrientedGraph, v: Vertex) -> Obstruction {
    let outs = g.out_neighbours(v);
    Obstruction::new(
        "H3c",
        named::hat().converse(),
        Mapping(vec![outs[0], v, outs[1]]),
    )
}

/// An oriented path on three vertices through `v` (P3, H3 or H3^c).
fn three_vertex_path(g: &OrientedGraph) -> Option<Obstruction> {
    let v = g.vertices().find(|&v| g.degree(v) >= 2)?;
    let (ins, outs) = (g.in_neighbours(v), g.out_neighbours(v));
    Some(if !ins.is_empty() && !outs.is_empty() {
        Obstruction::new(
            "P3",
            named::directed_path(3),
            Mapping(vec![ins[0], v, outs[0]]),
        )
    } else if ins.len() >= 2 {
        hat_at(g, v)
    } else {
        converse_hat_at(g, v)
    })
}

/// H3 at the first vertex of in-degree ≥ 2, else H3^c at the first vertex of
/// out-degree ≥ 2.
fn hat_obstruction(g: &OrientedGraph) -> Option<Obstruction> {
    if let Some(v) = g.vertices().find(|&v| g.in_degree(v) >= 2) {
        return Some(hat_at(g, v));
    }
    g.vertices()
        .find(|&v| g.out_degree(v) >= 2)
        .map(|v| converse_hat_at(g, v))
}

pub fn decide_ios_t1(g: &OrientedGraph) -> Certificate {
    match g.arcs().first() {
        None => Certificate::yes(IOS_T1, Mapping::constant(g.n(), 0)),
        Some(&(u, v)) => Certificate::no(
            IOS_T1,
            Obstruction::new("T2", named::transitive_tournament(2), Mapping(vec![u, v])),
        ),
    }
}

pub fn decide_ios_t2(g: &OrientedGraph) -> Certificate {
    if let Some(obstruction) = three_vertex_path(g) {
        return Certificate::no(IOS_T2, obstruction);
    }
    let mut colouring = vec![0; g.n()];
    for &(_, v) in g.arcs() {
        colouring[v] = 1;
    }
    Certificate::yes(IOS_T2, Mapping(colouring))
}

/// Follows out-arcs from `start` in a graph of maximum in- and out-degree 1.
/// Returns the visited vertices and whether the walk closed into a cycle.
fn follow(g: &OrientedGraph, start: Vertex) -> (Vec<Vertex>, bool) {
    let mut seq = vec![start];
    let mut v = start;
    while let Some(&w) = g.out_neighbours(v).first() {
        if w == start {
            return (seq, true);
        }
        seq.push(w);
        v = w;
    }
    (seq, false)
}

pub fn decide_ios_c3(g: &OrientedGraph) -> Certificate {
    if let Some(obstruction) = hat_obstruction(g) {
        return Certificate::no(IOS_C3, obstruction);
    }
    let mut colouring = vec![0; g.n()];
    for comp in g.weak_components() {
        let start = comp
            .iter()
            .copied()
            .find(|&v| g.in_degree(v) == 0)
            .unwrap_or(comp[0]);
        let (seq, closed) = follow(g, start);
        if closed && seq.len() % 3 != 0 {
            let len = seq.len();
            return Certificate::no(
                IOS_C3,
                Obstruction::new(format!("C{len}"), named::directed_cycle(len), Mapping(seq)),
            );
        }
        for (i, &v) in seq.iter().enumerate() {
            colouring[v] = i % 3;
        }
    }
    Certificate::yes(IOS_C3, Mapping(colouring))
}

pub fn decide_ios_t3(g: &OrientedGraph) -> Result<Certificate, DecideError> {
    for (name, pattern) in named::t3_obstructions() {
        if let Some(embedding) = find_subgraph(&pattern, g) {
            return Ok(Certificate::no(
                IOS_T3,
                Obstruction::new(name, pattern, embedding),
            ));
        }
    }
    let colouring = t3::colouring(g)?;
    let target = Tournament::T3.graph();
    let valid = oracle::check(&SearchProblem::new(g, &target, Mode::Ios), &colouring)
        .map_err(|e| DecideError::internal(IOS_T3_NAME, e.to_string()))?;
    if !valid {
        return Err(DecideError::internal(
            IOS_T3_NAME,
            format!("constructed colouring {colouring:?} is not ios-injective"),
        ));
    }
    Ok(Certificate::yes(IOS_T3, colouring))
}

pub fn decide_ios_t1r(g: &OrientedGraph) -> Certificate {
    match hat_obstruction(g) {
        Some(obstruction) => Certificate::no(IOS_T1R, obstruction),
        None => Certificate::yes(IOS_T1R, Mapping::constant(g.n(), 0)),
    }
}

pub fn decide_iot_t1r(g: &OrientedGraph) -> Certificate {
    match three_vertex_path(g) {
        Some(obstruction) => Certificate::no(IOT_T1R, obstruction),
        None => Certificate::yes(IOT_T1R, Mapping::constant(g.n(), 0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::OrientedGraph as G;

    fn arcs(n: usize, a: &[(usize, usize)]) -> G {
        G::build(n, a.iter().copied()).unwrap()
    }

    #[test]
    fn t1() {
        let c = decide_ios_t1(&G::empty(5));
        assert_eq!(c.colouring, Some(Mapping::constant(5, 0)));
        let c = decide_ios_t1(&arcs(2, &[(0, 1)]));
        assert_eq!(c.family(), Some("T2"));
        assert_eq!(
            decide_ios_t1(&named::directed_cycle(3)).family(),
            Some("T2")
        );
    }

    #[test]
    fn t2() {
        let three_arcs = arcs(6, &[(0, 1), (3, 2), (4, 5)]);
        let c = decide_ios_t2(&three_arcs);
        assert_eq!(c.colouring, Some(Mapping(vec![0, 1, 1, 0, 0, 1])));
        assert_eq!(decide_ios_t2(&named::directed_path(3)).family(), Some("P3"));
        assert_eq!(decide_ios_t2(&named::hat()).family(), Some("H3"));
    }

    #[test]
    fn c3() {
        let c = decide_ios_c3(&named::directed_cycle(6));
        assert_eq!(c.colouring, Some(Mapping(vec![0, 1, 2, 0, 1, 2])));
        let c = decide_ios_c3(&named::directed_cycle(4));
        assert_eq!(c.family(), Some("C4"));
        assert_eq!(c.obstruction.unwrap().embedding, Mapping(vec![0, 1, 2, 3]));
        assert_eq!(decide_ios_c3(&named::hat()).family(), Some("H3"));
        let path = decide_ios_c3(&arcs(4, &[(2, 0), (0, 3), (3, 1)]));
        assert_eq!(path.colouring, Some(Mapping(vec![1, 0, 0, 2])));
    }

    #[test]
    fn t3() {
        let c = decide_ios_t3(&named::directed_path(3)).unwrap();
        assert_eq!(c.colouring, Some(Mapping(vec![0, 1, 2])));
        assert_eq!(decide_ios_t3(&named::b2()).unwrap().family(), Some("B2"));
        assert!(decide_ios_t3(&named::hat()).unwrap().is_yes());
        assert_eq!(
            decide_ios_t3(&named::directed_path(4)).unwrap().family(),
            Some("P4")
        );
    }

    #[test]
    fn t1r() {
        assert!(decide_ios_t1r(&named::directed_cycle(5)).is_yes());
        assert_eq!(decide_ios_t1r(&named::hat()).family(), Some("H3"));
        assert_eq!(
            decide_ios_t1r(&named::hat().converse()).family(),
            Some("H3c")
        );
    }

    #[test]
    fn iot_t1r() {
        assert!(decide_iot_t1r(&named::directed_path(2)).is_yes());
        assert_eq!(
            decide_iot_t1r(&named::directed_path(3)).family(),
            Some("P3")
        );
        assert_eq!(decide_iot_t1r(&named::h4()).family(), Some("H3"));
    }
}
