//! Brute-force ground truth for locally-injective homomorphisms.
//!
//! [`check`] tests a given mapping against the definitions; [`search`] runs a
//! backtracking search with forward checking. Variables are picked by
//! smallest remaining domain, ties broken by larger total degree and then by
//! smaller id; values are tried in ascending order. The search is
//! deterministic and carries a node budget so sweeps cannot hang.

use thiserror::Error;

use crate::graph::{Mapping, OrientedGraph, Vertex};
use crate::target::Mode;

pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

/// Targets are encoded as 64-bit domain masks.
pub const MAX_TARGET_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("mapping has {found} entries but the source graph has {expected} vertices")]
    ArityMismatch { expected: usize, found: usize },
    #[error("search exhausted its budget of {budget} nodes")]
    Exhausted { budget: u64 },
    #[error("target has {0} vertices, at most {MAX_TARGET_ORDER} are supported")]
    TargetTooLarge(usize),
}

#[derive(Debug, Clone, Copy)]
pub struct SearchProblem<'a> {
    pub source: &'a OrientedGraph,
    pub target: &'a OrientedGraph,
    pub mode: Mode,
    pub budget: u64,
}

impl<'a> SearchProblem<'a> {
    pub fn new(source: &'a OrientedGraph, target: &'a OrientedGraph, mode: Mode) -> Self {
        SearchProblem {
            source,
            target,
            mode,
            budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

fn distinct(images: impl Iterator<Item = Vertex>) -> bool {
    let mut seen: Vec<Vertex> = images.collect();
    let len = seen.len();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == len
}

/// True iff `f` is a homomorphism of the source to the target that is
/// locally injective in the problem's mode.
pub fn check(problem: &SearchProblem<'_>, f: &Mapping) -> Result<bool, OracleError> {
    let (g, h) = (problem.source, problem.target);
    if f.len() != g.n() {
        return Err(OracleError::ArityMismatch {
            expected: g.n(),
            found: f.len(),
        });
    }
    if f.as_slice().iter().any(|&v| v >= h.n()) {
        return Ok(false);
    }
    for &(u, v) in g.arcs() {
        let (a, b) = (f.image(u), f.image(v));
        let ok = if a == b {
            h.is_reflexive()
        } else {
            h.has_arc(a, b)
        };
        if !ok {
            return Ok(false);
        }
    }
    for x in g.vertices() {
        let ins = g.in_neighbours(x).iter().map(|&w| f.image(w));
        let outs = g.out_neighbours(x).iter().map(|&w| f.image(w));
        let ok = match problem.mode {
            Mode::Ios => distinct(ins) && distinct(outs),
            Mode::Iot => distinct(ins.chain(outs)),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Searcher<'a> {
    source: &'a OrientedGraph,
    /// Allowed images of an out-neighbour of a vertex mapped to `a`.
    succ_mask: Vec<u64>,
    /// Allowed images of an in-neighbour of a vertex mapped to `a`.
    pred_mask: Vec<u64>,
    /// Pairs of source vertices that need distinct images.
    differ: Vec<Vec<Vertex>>,
    domains: Vec<u64>,
    assigned: Vec<Option<Vertex>>,
    trail: Vec<(Vertex, u64)>,
    nodes: u64,
    budget: u64,
}

impl<'a> Searcher<'a> {
    fn new(problem: &SearchProblem<'a>) -> Result<Self, OracleError> {
        let (g, h) = (problem.source, problem.target);
        if h.n() > MAX_TARGET_ORDER {
            return Err(OracleError::TargetTooLarge(h.n()));
        }
        let full = if h.n() == 64 {
            u64::MAX
        } else {
            (1u64 << h.n()) - 1
        };
        let loop_bit = |a: usize| if h.is_reflexive() { 1u64 << a } else { 0 };
        let succ_mask = h
            .vertices()
            .map(|a| {
                h.out_neighbours(a)
                    .iter()
                    .fold(loop_bit(a), |m, &b| m | (1 << b))
            })
            .collect();
        let pred_mask = h
            .vertices()
            .map(|a| {
                h.in_neighbours(a)
                    .iter()
                    .fold(loop_bit(a), |m, &b| m | (1 << b))
            })
            .collect();

        let mut differ = vec![Vec::new(); g.n()];
        let mut add_clique = |group: &[Vertex]| {
            for (i, &u) in group.iter().enumerate() {
                for &v in &group[i + 1..] {
                    differ[u].push(v);
                    differ[v].push(u);
                }
            }
        };
        for x in g.vertices() {
            match problem.mode {
                Mode::Ios => {
                    add_clique(g.in_neighbours(x));
                    add_clique(g.out_neighbours(x));
                }
                Mode::Iot => add_clique(&g.neighbours(x)),
            }
        }
        for list in differ.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }

        Ok(Searcher {
            source: g,
            succ_mask,
            pred_mask,
            differ,
            domains: vec![full; g.n()],
            assigned: vec![None; g.n()],
            trail: Vec::new(),
            nodes: 0,
            budget: problem.budget,
        })
    }

    fn pick(&self) -> Option<Vertex> {
        self.source
            .vertices()
            .filter(|&v| self.assigned[v].is_none())
            .min_by_key(|&v| {
                (
                    self.domains[v].count_ones(),
                    std::cmp::Reverse(self.source.degree(v)),
                    v,
                )
            })
    }

    fn narrow(&mut self, v: Vertex, mask: u64) -> bool {
        if self.assigned[v].is_some() {
            return true;
        }
        let old = self.domains[v];
        let new = old & mask;
        if new != old {
            self.trail.push((v, old));
            self.domains[v] = new;
        }
        new != 0
    }

    fn assign(&mut self, v: Vertex, a: Vertex) -> bool {
        self.assigned[v] = Some(a);
        let g = self.source;
        for &w in g.out_neighbours(v) {
            if !self.narrow(w, self.succ_mask[a]) {
                return false;
            }
        }
        for &w in g.in_neighbours(v) {
            if !self.narrow(w, self.pred_mask[a]) {
                return false;
            }
        }
        for i in 0..self.differ[v].len() {
            let w = self.differ[v][i];
            if !self.narrow(w, !(1u64 << a)) {
                return false;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (v, old) = self.trail.pop().unwrap();
            self.domains[v] = old;
        }
    }

    fn solve(&mut self) -> Result<bool, OracleError> {
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        let mut values = self.domains[v];
        while values != 0 {
            let a = values.trailing_zeros() as usize;
            values &= values - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(OracleError::Exhausted {
                    budget: self.budget,
                });
            }
            let mark = self.trail.len();
            if self.assign(v, a) && self.solve()? {
                return Ok(true);
            }
            self.undo(mark);
            self.assigned[v] = None;
        }
        Ok(false)
    }
}

/// Some locally-injective homomorphism, if one exists.
pub fn search(problem: &SearchProblem<'_>) -> Result<Option<Mapping>, OracleError> {
    search_counting(problem).map(|(m, _)| m)
}

/// Like [`search`], also reporting the number of search nodes visited.
pub fn search_counting(problem: &SearchProblem<'_>) -> Result<(Option<Mapping>, u64), OracleError> {
    let mut s = Searcher::new(problem)?;
    let found = s.solve()?;
    let mapping = found.then(|| Mapping(s.assigned.iter().map(|a| a.unwrap()).collect()));
    Ok((mapping, s.nodes))
}

pub fn exists(problem: &SearchProblem<'_>) -> Result<bool, OracleError> {
    Ok(search(problem)?.is_some())
}

/// A locally-injective homomorphism of `pattern` into the irreflexive graph
/// `host`.
pub fn search_embedding(
    pattern: &OrientedGraph,
    host: &OrientedGraph,
    mode: Mode,
) -> Result<Option<Mapping>, OracleError> {
    debug_assert!(!host.is_reflexive());
    search(&SearchProblem::new(pattern, host, mode))
}
