//! Oriented graphs: validation, structural queries and the converse.
//!
//! Vertices are dense ids `0..n`. Arcs are kept sorted, and per-vertex in/out
//! adjacency lists are sorted as well, so every traversal in the crate is
//! deterministic.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop arc at vertex {0}")]
    LoopArc(Vertex),
    #[error("digon between {0} and {1}")]
    Digon(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("enumeration of graphs on {n} vertices exceeds the bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// An irreflexive, digon-free directed graph.
///
/// The `reflexive` flag is only ever set on target graphs; it means every
/// vertex carries an implicit loop, so equal images across an arc are allowed
/// by a homomorphism. No loop arcs are stored.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphDoc", into = "GraphDoc")]
pub struct OrientedGraph {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    reflexive: bool,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
}

/// Structured document form: `{"n": .., "arcs": [[u, v], ..]}`.
#[derive(Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    reflexive: bool,
}

impl TryFrom<GraphDoc> for OrientedGraph {
    type Error = GraphError;

    fn try_from(doc: GraphDoc) -> Result<Self, GraphError> {
        let g = OrientedGraph::build(doc.n, doc.arcs)?;
        Ok(if doc.reflexive { g.into_reflexive() } else { g })
    }
}

impl From<OrientedGraph> for GraphDoc {
    fn from(g: OrientedGraph) -> Self {
        GraphDoc {
            n: g.n,
            arcs: g.arcs,
            reflexive: g.reflexive,
        }
    }
}

impl OrientedGraph {
    /// Validates and builds a graph. Repeated arcs collapse into one.
    pub fn build<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopArc(u));
            }
            if set.contains(&(v, u)) {
                return Err(GraphError::Digon(u.min(v), u.max(v)));
            }
            set.insert((u, v));
        }
        Ok(Self::from_sorted(n, set.into_iter().collect(), false))
    }

    /// The graph on `n` vertices with no arcs.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new(), false)
    }

    fn from_sorted(n: usize, arcs: Vec<(Vertex, Vertex)>, reflexive: bool) -> Self {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for list in in_adj.iter_mut() {
            list.sort_unstable();
        }
        OrientedGraph {
            n,
            arcs,
            reflexive,
            out_adj,
            in_adj,
        }
    }

    /// Marks every vertex as carrying a loop.
    pub fn into_reflexive(mut self) -> Self {
        self.reflexive = true;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexive
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn out_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v]
    }

    pub fn in_neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v]
    }

    /// In- and out-neighbours merged in ascending order.
    pub fn neighbours(&self, v: Vertex) -> Vec<Vertex> {
        let mut all: Vec<Vertex> = self.in_adj[v]
            .iter()
            .chain(self.out_adj[v].iter())
            .copied()
            .collect();
        all.sort_unstable();
        all
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.out_adj[u].binary_search(&v).is_ok()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// `(in_degree, out_degree)` of `v`.
    pub fn degrees(&self, v: Vertex) -> (usize, usize) {
        (self.in_adj[v].len(), self.out_adj[v].len())
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_adj[v].len()
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_adj[v].len()
    }

    /// Degree in the underlying undirected graph.
    pub fn degree(&self, v: Vertex) -> usize {
        self.in_adj[v].len() + self.out_adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Every arc reversed. The reflexive flag is preserved.
    pub fn converse(&self) -> Self {
        let mut arcs: Vec<_> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        arcs.sort_unstable();
        Self::from_sorted(self.n, arcs, self.reflexive)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut arcs: Vec<_> = self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        arcs.sort_unstable();
        Self::from_sorted(self.n, arcs, self.reflexive)
    }

    /// The subgraph induced by `keep`, renumbered in the given order.
    pub fn induced(&self, keep: &[Vertex]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut arcs: Vec<_> = self
            .arcs
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        arcs.sort_unstable();
        Self::from_sorted(keep.len(), arcs, self.reflexive)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.n;
        let arcs = self
            .arcs
            .iter()
            .copied()
            .chain(other.arcs.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_sorted(self.n + other.n, arcs, self.reflexive && other.reflexive)
    }

    /// Weakly connected components, each sorted, ordered by smallest vertex.
    pub fn weak_components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in self.in_adj[v].iter().chain(self.out_adj[v].iter()) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedGraph(n={}, arcs={:?}", self.n, self.arcs)?;
        if self.reflexive {
            write!(f, ", reflexive")?;
        }
        write!(f, ")")
    }
}

/// A total function from the vertices of one graph to those of another,
/// stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Mapping(pub Vec<Vertex>);

impl Mapping {
    pub fn constant(n: usize, value: Vertex) -> Self {
        Mapping(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, v: Vertex) -> Vertex {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    /// `then ∘ self`: first apply `self`, then `then`.
    pub fn compose(&self, then: &Mapping) -> Mapping {
        Mapping(self.0.iter().map(|&v| then.0[v]).collect())
    }
}

impl fmt::Debug for Mapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mapping{:?}", self.0)
    }
}
