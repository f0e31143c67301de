//! iot-injective homomorphism to T2^r.
//!
//! A vertex of degree three is an obstruction on its own. Otherwise every
//! component is a path or a cycle, read in a fixed vertex order, and is
//! classified by whether one of its two arc-parity matchings alternates in
//! orientation. A failing component yields a short path whose interior
//! consists of two alternating matchings and whose end arcs repeat the
//! orientation two steps in.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{Certificate, Obstruction};
use crate::decide::DecideError;
use crate::graph::{Mapping, OrientedGraph, Vertex};
use crate::named;
use crate::oracle::{check, SearchProblem};
use crate::target::{Mode, Target, Tournament};

const IOT_T2R: Target = Target::new(Tournament::T2r, Mode::Iot);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("vertex {vertex} has degree {degree}")]
    DegreeTooHigh { vertex: Vertex, degree: usize },
    #[error("graph is not an oriented path in vertex order 0..n")]
    NotAPath,
    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ComponentShape {
    ShortPath,
    AltMatchingPath {
        matching: Vec<(Vertex, Vertex)>,
    },
    AltMatchingCycle4k {
        matching: Vec<(Vertex, Vertex)>,
    },
    /// `locus` lists the vertices of the offending section.
    NonConforming {
        locus: Vec<Vertex>,
    },
}

impl ComponentShape {
    pub fn conforms(&self) -> bool {
        !matches!(self, ComponentShape::NonConforming { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    /// Vertices in path or cycle order.
    pub order: Vec<Vertex>,
    pub cycle: bool,
    pub shape: ComponentShape,
}

/// A connected graph of maximum degree two, read along its vertex order.
struct Traversal {
    order: Vec<Vertex>,
    cycle: bool,
    /// `forward[i]` is true when the arc between positions i and i+1 (mod n
    /// for cycles) points along the order.
    forward: Vec<bool>,
    /// Arc between positions i and i+1, as stored in the graph.
    arcs: Vec<(Vertex, Vertex)>,
}

fn traverse(g: &OrientedGraph, comp: &[Vertex]) -> Traversal {
    let ends: Vec<Vertex> = comp.iter().copied().filter(|&v| g.degree(v) <= 1).collect();
    let cycle = ends.is_empty() && comp.len() > 1;
    let start = if cycle {
        comp[0]
    } else {
        ends.first().copied().unwrap_or(comp[0])
    };
    let mut order = vec![start];
    let mut prev: Option<Vertex> = None;
    let mut v = start;
    loop {
        let next = g
            .neighbours(v)
            .into_iter()
            .filter(|&w| Some(w) != prev && w != start)
            .min();
        match next {
            Some(w) if order.len() < comp.len() => {
                order.push(w);
                prev = Some(v);
                v = w;
            }
            _ => break,
        }
    }
    let steps = if cycle { order.len() } else { order.len() - 1 };
    let mut forward = Vec::with_capacity(steps);
    let mut arcs = Vec::with_capacity(steps);
    for i in 0..steps {
        let (a, b) = (order[i], order[(i + 1) % order.len()]);
        let f = g.has_arc(a, b);
        forward.push(f);
        arcs.push(if f { (a, b) } else { (b, a) });
    }
    Traversal {
        order,
        cycle,
        forward,
        arcs,
    }
}

impl Traversal {
    fn steps(&self) -> usize {
        self.forward.len()
    }

    /// Direction of step `i`, wrapping around a cycle.
    fn dir(&self, i: usize) -> bool {
        self.forward[i % self.steps()]
    }

    /// Steps `i` such that steps `i` and `i + 2` point the same way.
    fn bad(&self, limit: usize) -> Vec<usize> {
        (0..limit)
            .filter(|&i| self.dir(i) == self.dir(i + 2))
            .collect()
    }

    /// The parity class of steps whose matching alternates, if any.
    fn alternating_parity(&self) -> Option<usize> {
        let limit = if self.cycle {
            self.steps()
        } else {
            self.steps().saturating_sub(2)
        };
        let bad = self.bad(limit);
        (0..2).find(|&p| bad.iter().all(|&i| i % 2 != p))
    }

    fn matching(&self, parity: usize) -> Vec<(Vertex, Vertex)> {
        (parity..self.steps())
            .step_by(2)
            .map(|i| self.arcs[i])
            .collect()
    }
}

fn classify(t: &Traversal) -> ComponentShape {
    if !t.cycle && t.order.len() <= 4 {
        return ComponentShape::ShortPath;
    }
    if t.cycle && !t.order.len().is_multiple_of(4) {
        return ComponentShape::NonConforming {
            locus: t.order.clone(),
        };
    }
    match t.alternating_parity() {
        Some(p) if t.cycle => ComponentShape::AltMatchingCycle4k {
            matching: t.matching(p),
        },
        Some(p) => ComponentShape::AltMatchingPath {
            matching: t.matching(p),
        },
        None => ComponentShape::NonConforming {
            locus: t.order.clone(),
        },
    }
}

/// Classifies a connected graph of maximum degree two.
pub fn classify_component(d: &OrientedGraph) -> Result<ComponentReport, ShapeError> {
    if let Some(v) = d.vertices().find(|&v| d.degree(v) > 2) {
        return Err(ShapeError::DegreeTooHigh {
            vertex: v,
            degree: d.degree(v),
        });
    }
    let comps = d.weak_components();
    if comps.len() != 1 {
        return Err(ShapeError::Disconnected);
    }
    let t = traverse(d, &comps[0]);
    Ok(report(t))
}

fn report(t: Traversal) -> ComponentReport {
    let shape = classify(&t);
    ComponentReport {
        order: t.order,
        cycle: t.cycle,
        shape,
    }
}

/// The shortest section running from a bad step of one parity to a bad step
/// of the other, leftmost among the shortest. Returns the section's vertex
/// positions along the (unrolled) order.
fn shortest_section(t: &Traversal) -> Option<(usize, usize)> {
    let n = t.order.len();
    let limit = if t.cycle {
        2 * n + 3
    } else {
        t.steps().saturating_sub(2)
    };
    let bad = t.bad(limit);
    let mut best: Option<(usize, usize)> = None;
    for (a, &i) in bad.iter().enumerate() {
        if let Some(&j) = bad[a + 1..].iter().find(|&&j| (j - i) % 2 == 1) {
            if best.is_none_or(|(bi, bj)| j - i < bj - bi) {
                best = Some((i, j));
            }
        }
    }
    // Section: steps i ..= j + 2, i.e. positions i ..= j + 3.
    best.map(|(i, j)| (i, j + 3))
}

/// A path obstruction for a non-conforming path or cycle component,
/// together with its iot-injective homomorphism into the graph.
fn path_obstruction(t: &Traversal) -> Option<Obstruction> {
    let (lo, hi) = shortest_section(t)?;
    let n = t.order.len();
    let image: Vec<Vertex> = (lo..=hi).map(|p| t.order[p % n]).collect();
    let arcs = (0..hi - lo).map(|k| {
        if t.dir(lo + k) {
            (k, k + 1)
        } else {
            (k + 1, k)
        }
    });
    let p = OrientedGraph::build(hi - lo + 1, arcs).expect("section is an oriented path");
    Some(Obstruction::new("P", p, Mapping(image)))
}

/// The unrolled path of an odd cycle: its n arcs from the first step whose
/// orientation repeats two steps later, then three more arcs repeating the
/// first three, with the wrapping homomorphism into the cycle. Not
/// necessarily minimal; the decider uses the shortest section instead.
pub fn unrolled_odd_cycle(d: &OrientedGraph) -> Result<Option<Obstruction>, ShapeError> {
    let report = classify_component(d)?;
    if !report.cycle || report.order.len() % 2 == 0 {
        return Ok(None);
    }
    let t = traverse(d, &d.weak_components()[0]);
    let n = t.order.len();
    let start = t.bad(n)[0];
    let image: Vec<Vertex> = (start..=start + n + 3).map(|p| t.order[p % n]).collect();
    let arcs = (0..n + 3).map(|k| {
        if t.dir(start + k) {
            (k, k + 1)
        } else {
            (k + 1, k)
        }
    });
    let q = OrientedGraph::build(n + 4, arcs).expect("unrolling is an oriented path");
    Ok(Some(Obstruction::new("Q", q, Mapping(image))))
}

/// Membership in the path family: vertices 0..2k in order with k ≥ 2, the
/// interior matchings alternate, and each end arc repeats the orientation of
/// the arc two steps in.
pub fn p_family_member(n: usize, arcs: &[(Vertex, Vertex)]) -> Result<bool, ShapeError> {
    if n < 2 || arcs.len() != n - 1 {
        return Err(ShapeError::NotAPath);
    }
    let mut forward = vec![None; n - 1];
    for &(a, b) in arcs {
        let (i, f) = if b == a + 1 {
            (a, true)
        } else if a == b + 1 {
            (b, false)
        } else {
            return Err(ShapeError::NotAPath);
        };
        if i >= n - 1 || forward[i].is_some() {
            return Err(ShapeError::NotAPath);
        }
        forward[i] = Some(f);
    }
    let d: Vec<bool> = forward.into_iter().map(|f| f.unwrap()).collect();
    if n < 5 || n.is_multiple_of(2) {
        return Ok(false);
    }
    let m = d.len();
    let interior_alternates = (1..m - 3).all(|i| d[i] != d[i + 2]);
    Ok(interior_alternates && d[0] == d[2] && d[m - 1] == d[m - 3])
}

fn claw_at(g: &OrientedGraph, v: Vertex) -> Obstruction {
    let ins = g.in_neighbours(v);
    let outs = g.out_neighbours(v);
    let leaves: Vec<Vertex> = ins.iter().chain(outs).copied().take(3).collect();
    let k = ins.len().min(3);
    let mut image = leaves;
    image.push(v);
    Obstruction::new(format!("K13_{k}"), named::claw(k), Mapping(image))
}

/// One of the four candidate colourings of a path or cycle along its order,
/// in which every second vertex alternates.
fn candidate(t: &Traversal, base: [usize; 2], colour: &mut [usize]) -> bool {
    let n = t.order.len();
    for (p, &v) in t.order.iter().enumerate() {
        colour[v] = base[p % 2] ^ ((p / 2) & 1);
    }
    let neighbours_differ = (1..n - 1)
        .chain(if t.cycle { vec![0, n - 1] } else { vec![] })
        .all(|p| colour[t.order[(p + n - 1) % n]] != colour[t.order[(p + 1) % n]]);
    let arcs_ok = t
        .arcs
        .iter()
        .all(|&(a, b)| !(colour[a] == 1 && colour[b] == 0));
    neighbours_differ && arcs_ok
}

pub fn decide_iot_t2r(g: &OrientedGraph) -> Result<Certificate, DecideError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) >= 3) {
        return Ok(Certificate::no(IOT_T2R, claw_at(g, v)));
    }
    let mut colour = vec![0; g.n()];
    let mut reports = Vec::new();
    let mut obstruction = None;
    for comp in g.weak_components() {
        let t = traverse(g, &comp);
        let shape = classify(&t);
        if shape.conforms() && comp.len() > 1 {
            let found = [[0, 0], [0, 1], [1, 0], [1, 1]]
                .into_iter()
                .any(|base| candidate(&t, base, &mut colour));
            if !found {
                return Err(DecideError::internal(
                    IOT_T2R.to_string(),
                    format!("conforming component {:?} has no colouring", t.order),
                ));
            }
        } else if !shape.conforms() && obstruction.is_none() {
            obstruction = path_obstruction(&t);
            if obstruction.is_none() {
                return Err(DecideError::internal(
                    IOT_T2R.to_string(),
                    format!("no section found in component {:?}", t.order),
                ));
            }
        }
        reports.push(report(t));
    }
    let mut cert = match obstruction {
        Some(o) => Certificate::no(IOT_T2R, o),
        None => {
            let f = Mapping(colour);
            let target = Tournament::T2r.graph();
            let ok = check(&SearchProblem::new(g, &target, Mode::Iot), &f)
                .map_err(|e| DecideError::internal(IOT_T2R.to_string(), e.to_string()))?;
            if !ok {
                return Err(DecideError::internal(
                    IOT_T2R.to_string(),
                    format!("colouring {f:?} is not iot-injective"),
                ));
            }
            Certificate::yes(IOT_T2R, f)
        }
    };
    cert.components = reports;
    Ok(cert)
}
