//! Forcing walks recovered from the removal log, the path-like graphs they
//! unfold to, and the glued obstruction.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Mapping, OrientedGraph, Vertex};

use super::consistency::{CcState, Removal, Rule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("list of vertex {0} is not empty")]
    NotEmpty(Vertex),
    #[error("removal log has no source for colour t{colour} at vertex {vertex}")]
    ProvenanceGap { vertex: Vertex, colour: usize },
}

/// A maximal run of equally oriented steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    /// True when each arc's tail precedes its head along the walk.
    pub forward: bool,
    pub vertices: Vec<Vertex>,
}

impl Segment {
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Walk {
    /// `(i, j)`: the first vertex forced to t_i forces the last to t_j.
    pub kind: (usize, usize),
    /// Vertex sequence in G, first to last.
    pub vertices: Vec<Vertex>,
    pub segments: Vec<Segment>,
    /// The walk is a single hat or converse hat.
    pub hat_case: bool,
    /// Log indices of the removals along the walk, first to last.
    pub removals: Vec<usize>,
}

fn segments_of(g: &OrientedGraph, vertices: &[Vertex]) -> Vec<Segment> {
    let mut segments: Vec<Segment> = Vec::new();
    for pair in vertices.windows(2) {
        let forward = g.has_arc(pair[0], pair[1]);
        match segments.last_mut() {
            Some(seg) if seg.forward == forward => seg.vertices.push(pair[1]),
            _ => segments.push(Segment {
                forward,
                vertices: pair.to_vec(),
            }),
        }
    }
    segments
}

impl Walk {
    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn arc_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Checks the segment pattern against the expected shape for the kind:
    /// a t0 start leaves backwards, a t1 start forwards; a t1 end arrives
    /// forwards, a t0 end backwards; inner segments have length at least 2.
    /// A hat or converse hat may carry kind (0,1) or (1,0), and a walk with
    /// no arcs is the initial removal at a vertex of out- or in-degree two.
    pub fn conformance(&self) -> Result<(), String> {
        let segs = &self.segments;
        if segs.is_empty() {
            return if self.kind.0 == self.kind.1 {
                Ok(())
            } else {
                Err(format!("empty walk of kind {:?}", self.kind))
            };
        }
        if self.hat_case {
            return match self.kind {
                (0, 1) | (1, 0) => Ok(()),
                kind => Err(format!("hat-shaped walk of kind {kind:?}")),
            };
        }
        let (i, j) = self.kind;
        if segs[0].forward != (i == 1) {
            return Err(format!(
                "kind {:?} starts with the wrong orientation",
                self.kind
            ));
        }
        if segs.last().unwrap().forward != (j == 1) {
            return Err(format!(
                "kind {:?} ends with the wrong orientation",
                self.kind
            ));
        }
        if segs.len() > 2 {
            if let Some(s) = segs[1..segs.len() - 1].iter().find(|s| s.len() < 2) {
                return Err(format!("inner segment {:?} is shorter than 2", s.vertices));
            }
        }
        Ok(())
    }
}

/// Traces the log back from the removal of `colour` at `v` to an Init event.
pub fn reconstruct_walk(
    g: &OrientedGraph,
    state: &CcState,
    v: Vertex,
    colour: usize,
) -> Result<Walk, WalkError> {
    let gap = |vertex, colour| WalkError::ProvenanceGap { vertex, colour };
    let mut idx = state.removal_index(v, colour).ok_or(gap(v, colour))?;
    let mut seq = vec![v];
    let mut removals = vec![idx];
    let start_colour = loop {
        let r: Removal = state.log[idx];
        let (y, forced) = match r.rule {
            Rule::Init => break 1 - r.colour,
            Rule::R1 => (r.cause.ok_or(gap(r.vertex, r.colour))?, 0),
            Rule::R2 => (r.cause.ok_or(gap(r.vertex, r.colour))?, 1),
            Rule::R3 => {
                seq.push(r.via.ok_or(gap(r.vertex, r.colour))?);
                (r.cause.ok_or(gap(r.vertex, r.colour))?, r.colour)
            }
        };
        seq.push(y);
        idx = state
            .removal_index(y, 1 - forced)
            .filter(|&k| k < idx)
            .ok_or(gap(y, 1 - forced))?;
        removals.push(idx);
    };
    seq.reverse();
    removals.reverse();
    let segments = segments_of(g, &seq);
    let hat_case = segments.len() == 2 && segments.iter().all(|s| s.len() == 1);
    Ok(Walk {
        kind: (start_colour, 1 - colour),
        vertices: seq,
        segments,
        hat_case,
        removals,
    })
}

/// The two walks ending at the emptied vertex `y`: the first removes t1
/// (kind (p, 0)), the second removes t0 (kind (q, 1)).
pub fn reconstruct_walks(
    g: &OrientedGraph,
    state: &CcState,
    y: Vertex,
) -> Result<(Walk, Walk), WalkError> {
    if state.list(y) != 0 {
        return Err(WalkError::NotEmpty(y));
    }
    Ok((
        reconstruct_walk(g, state, y, 1)?,
        reconstruct_walk(g, state, y, 0)?,
    ))
}

/// A walk unfolded into a graph, plus leaves at its first vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyElement {
    pub graph: OrientedGraph,
    pub family: (usize, usize),
    pub first_vertex: Vertex,
    pub last_vertex: Vertex,
    pub augment_arcs: Vec<(Vertex, Vertex)>,
    /// Homomorphism into the graph the walk was found in.
    pub embedding: Mapping,
}

/// Incrementally built graph with a map into G.
struct Unfolding<'a> {
    g: &'a OrientedGraph,
    image: Vec<Vertex>,
    arcs: Vec<(Vertex, Vertex)>,
}

impl<'a> Unfolding<'a> {
    fn new(g: &'a OrientedGraph) -> Self {
        Unfolding {
            g,
            image: Vec::new(),
            arcs: Vec::new(),
        }
    }

    fn add(&mut self, image: Vertex) -> Vertex {
        self.image.push(image);
        self.image.len() - 1
    }

    fn join(&mut self, a: Vertex, b: Vertex) {
        let (ga, gb) = (self.image[a], self.image[b]);
        if self.g.has_arc(ga, gb) {
            self.arcs.push((a, b));
        } else {
            self.arcs.push((b, a));
        }
    }

    /// Leaves at `v` for every G-neighbour on the forced side that no arc at
    /// `v` already covers: out-neighbours for a t0 start, in-neighbours for
    /// t1. Returns the added arcs.
    fn augment(&mut self, v: Vertex, start_colour: usize) -> Vec<(Vertex, Vertex)> {
        let gv = self.image[v];
        let out_side = start_colour == 0;
        let covered: Vec<Vertex> = self
            .arcs
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) if out_side => Some(self.image[b]),
                (_, true) if !out_side => Some(self.image[a]),
                _ => None,
            })
            .collect();
        let side = if out_side {
            self.g.out_neighbours(gv)
        } else {
            self.g.in_neighbours(gv)
        };
        let mut added = Vec::new();
        for &w in side {
            if covered.contains(&w) {
                continue;
            }
            let leaf = self.add(w);
            let arc = if out_side { (v, leaf) } else { (leaf, v) };
            self.arcs.push(arc);
            added.push(arc);
        }
        added
    }

    /// Renumbers vertices by `order` and builds the graph.
    fn finish(self, order: &[Vertex]) -> (OrientedGraph, Mapping, Vec<Vertex>) {
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let arcs = self.arcs.iter().map(|&(a, b)| (position[a], position[b]));
        let graph = OrientedGraph::build(order.len(), arcs).expect("unfolded walk is oriented");
        let image = order.iter().map(|&v| self.image[v]).collect();
        (graph, Mapping(image), position)
    }
}

/// Unfolds `w` and adds leaves at its first vertex. Vertices are numbered
/// first vertex, leaves, then the rest of the walk.
pub fn build_family_element(g: &OrientedGraph, w: &Walk) -> FamilyElement {
    let mut u = Unfolding::new(g);
    let path: Vec<Vertex> = w.vertices.iter().map(|&v| u.add(v)).collect();
    for pair in path.windows(2) {
        u.join(pair[0], pair[1]);
    }
    let added = u.augment(path[0], w.kind.0);
    let leaves: Vec<Vertex> = added
        .iter()
        .map(|&(a, b)| if a == path[0] { b } else { a })
        .collect();
    let mut order = vec![path[0]];
    order.extend(&leaves);
    order.extend(&path[1..]);
    let last = *path.last().unwrap();
    let (graph, embedding, position) = u.finish(&order);
    FamilyElement {
        graph,
        family: w.kind,
        first_vertex: position[path[0]],
        last_vertex: position[last],
        augment_arcs: added
            .iter()
            .map(|&(a, b)| (position[a], position[b]))
            .collect(),
        embedding,
    }
}

/// Glues the unfoldings of a (p,0)-walk `w0` and a (q,1)-walk `w1` at their
/// common last vertex and adds leaves at both first vertices. Vertices run
/// from the start of `w1`, through the glue vertex, to the start of `w0`.
pub fn build_obstruction(g: &OrientedGraph, w0: &Walk, w1: &Walk) -> (OrientedGraph, Mapping) {
    debug_assert_eq!(w0.last(), w1.last());
    let (left, right) = (w1, w0);
    let mut u = Unfolding::new(g);
    let mut path: Vec<Vertex> = left.vertices.iter().map(|&v| u.add(v)).collect();
    path.extend(right.vertices.iter().rev().skip(1).map(|&v| u.add(v)));
    for pair in path.windows(2) {
        u.join(pair[0], pair[1]);
    }
    let (head, tail) = (path[0], *path.last().unwrap());
    let leaves_of = |added: Vec<(Vertex, Vertex)>, at: Vertex| -> Vec<Vertex> {
        added
            .iter()
            .map(|&(a, b)| if a == at { b } else { a })
            .collect()
    };
    let added0 = u.augment(head, left.kind.0);
    let leaves0 = leaves_of(added0, head);
    let added1 = u.augment(tail, right.kind.0);
    let leaves1 = leaves_of(added1, tail);
    let mut order = vec![head];
    order.extend(&leaves0);
    order.extend(&path[1..path.len() - 1]);
    order.extend(&leaves1);
    order.push(tail);
    let (graph, embedding, _) = u.finish(&order);
    (graph, embedding)
}
