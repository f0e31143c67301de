//! ios-injective homomorphism to the reflexive transitive tournament on two
//! vertices: degree screen, list propagation, colouring on success and a
//! glued walk obstruction on failure.

pub mod colouring;
pub mod consistency;
pub mod walks;

pub use colouring::extract_colouring;
pub use consistency::{
    consistency_check, consistency_check_with, CcState, Fifo, RandomOrder, Removal, Rule, Schedule,
};
pub use walks::{
    build_family_element, build_obstruction, reconstruct_walk, reconstruct_walks, FamilyElement,
    Segment, Walk, WalkError,
};

use crate::certificate::{Certificate, Obstruction};
use crate::decide::DecideError;
use crate::graph::{Mapping, OrientedGraph};
use crate::named;
use crate::oracle::{check, SearchProblem};
use crate::target::{Mode, Target, Tournament};

const IOS_T2R: Target = Target::new(Tournament::T2r, Mode::Ios);

/// H4 at a vertex of in-degree ≥ 3, H4^c at out-degree ≥ 3, X2 at a vertex
/// with in- and out-degree 2.
pub fn preliminary_check(g: &OrientedGraph) -> Option<Obstruction> {
    if let Some(v) = g.vertices().find(|&v| g.in_degree(v) >= 3) {
        let mut image = g.in_neighbours(v)[..3].to_vec();
        image.push(v);
        return Some(Obstruction::new("H4", named::h4(), Mapping(image)));
    }
    if let Some(v) = g.vertices().find(|&v| g.out_degree(v) >= 3) {
        let mut image = g.out_neighbours(v)[..3].to_vec();
        image.push(v);
        return Some(Obstruction::new(
            "H4c",
            named::h4().converse(),
            Mapping(image),
        ));
    }
    g.vertices()
        .find(|&v| g.in_degree(v) == 2 && g.out_degree(v) == 2)
        .map(|v| {
            let (ins, outs) = (g.in_neighbours(v), g.out_neighbours(v));
            Obstruction::new(
                "X2",
                named::x2(),
                Mapping(vec![ins[0], ins[1], v, outs[0], outs[1]]),
            )
        })
}

pub fn decide_ios_t2r(g: &OrientedGraph) -> Result<Certificate, DecideError> {
    if let Some(obstruction) = preliminary_check(g) {
        return Ok(Certificate::no(IOS_T2R, obstruction));
    }
    let state = consistency_check(g);
    let Some(y) = state.emptied else {
        return Ok(Certificate::yes(IOS_T2R, extract_colouring(g, &state)?));
    };
    let (w0, w1) = reconstruct_walks(g, &state, y)?;
    let mut diagnostics = Vec::new();
    for w in [&w0, &w1] {
        if let Err(e) = w.conformance() {
            diagnostics.push(format!("walk {:?} of kind {:?}: {e}", w.vertices, w.kind));
        }
    }
    let (f, embedding) = build_obstruction(g, &w0, &w1);
    let locally_injective = check(&SearchProblem::new(&f, g, Mode::Ios), &embedding)
        .map_err(|e| DecideError::internal(IOS_T2R.to_string(), e.to_string()))?;
    let mut obstruction = if locally_injective {
        Obstruction::new("F", f, embedding)
    } else {
        // The walks revisit a neighbourhood; fall back to the component of G
        // itself, on which the propagation fails just the same.
        diagnostics.push(format!(
            "glued walks {:?} and {:?} are not locally injective; using the component",
            w0.vertices, w1.vertices
        ));
        component_obstruction(g, y)
    };
    let mut log: Vec<usize> = w0.removals.iter().chain(&w1.removals).copied().collect();
    log.sort_unstable();
    log.dedup();
    obstruction.log = log.into_iter().map(|i| state.log[i]).collect();
    obstruction.walks = vec![w0, w1];
    let mut cert = Certificate::no(IOS_T2R, obstruction);
    cert.diagnostics = diagnostics;
    Ok(cert)
}

fn component_obstruction(g: &OrientedGraph, y: usize) -> Obstruction {
    let comp = g
        .weak_components()
        .into_iter()
        .find(|c| c.contains(&y))
        .expect("every vertex lies in a component");
    let graph = g.induced(&comp);
    Obstruction::new("component", graph, Mapping(comp))
}
