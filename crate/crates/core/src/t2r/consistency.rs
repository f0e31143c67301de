//! List propagation over {t0, t1} with a removal log.

use std::collections::VecDeque;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{OrientedGraph, Vertex};

/// Colour lists as two-bit masks: bit 0 is t0, bit 1 is t1.
pub type ColourList = u8;
pub const BOTH: ColourList = 0b11;

pub fn bit(colour: usize) -> ColourList {
    1 << colour
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    Init,
    R1,
    R2,
    R3,
}

/// One removal of `colour` from the list of `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Removal {
    pub vertex: Vertex,
    pub colour: usize,
    pub rule: Rule,
    /// The singleton vertex that triggered the removal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cause: Option<Vertex>,
    /// The common neighbour for R3.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub via: Option<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcState {
    pub lists: Vec<ColourList>,
    pub log: Vec<Removal>,
    /// Log index of the removal of each colour at each vertex.
    removed_at: Vec<[Option<usize>; 2]>,
    /// The vertex whose list became empty, if any.
    pub emptied: Option<Vertex>,
}

impl CcState {
    pub fn succeeded(&self) -> bool {
        self.emptied.is_none()
    }

    pub fn list(&self, v: Vertex) -> ColourList {
        self.lists[v]
    }

    /// The single colour left at `v`, if its list is a singleton.
    pub fn forced(&self, v: Vertex) -> Option<usize> {
        match self.lists[v] {
            0b01 => Some(0),
            0b10 => Some(1),
            _ => None,
        }
    }

    pub fn removal_index(&self, v: Vertex, colour: usize) -> Option<usize> {
        self.removed_at[v][colour]
    }
}

/// Order in which pending removals are applied.
pub trait Schedule {
    /// Chooses an index into a non-empty pool of length `len`.
    fn pick(&mut self, len: usize) -> usize;
}

/// Oldest pending removal first.
pub struct Fifo;

impl Schedule for Fifo {
    fn pick(&mut self, _len: usize) -> usize {
        0
    }
}

/// Uniformly random pending removal.
pub struct RandomOrder<R: Rng>(pub R);

impl<R: Rng> Schedule for RandomOrder<R> {
    fn pick(&mut self, len: usize) -> usize {
        self.0.gen_range(0..len)
    }
}

struct Runner<'a> {
    g: &'a OrientedGraph,
    state: CcState,
    pool: VecDeque<Removal>,
}

impl Runner<'_> {
    /// Queues the removals implied by `y` having the singleton list {c}.
    fn fire(&mut self, y: Vertex, c: usize) {
        let g = self.g;
        let mut push = |vertex, colour, rule, via| {
            self.pool.push_back(Removal {
                vertex,
                colour,
                rule,
                cause: Some(y),
                via,
            })
        };
        if c == 0 {
            for &x in g.in_neighbours(y) {
                push(x, 1, Rule::R1, None);
            }
        } else {
            for &x in g.out_neighbours(y) {
                push(x, 0, Rule::R2, None);
            }
        }
        for &s in g.in_neighbours(y) {
            for &x in g.out_neighbours(s) {
                if x != y {
                    push(x, c, Rule::R3, Some(s));
                }
            }
        }
        for &s in g.out_neighbours(y) {
            for &x in g.in_neighbours(s) {
                if x != y {
                    push(x, c, Rule::R3, Some(s));
                }
            }
        }
    }

    /// Applies a removal; returns false once a list is empty.
    fn apply(&mut self, r: Removal) -> bool {
        let v = r.vertex;
        if self.state.lists[v] & bit(r.colour) == 0 {
            return true;
        }
        self.state.lists[v] &= !bit(r.colour);
        self.state.removed_at[v][r.colour] = Some(self.state.log.len());
        self.state.log.push(r);
        if self.state.lists[v] == 0 {
            self.state.emptied = Some(v);
            return false;
        }
        if let Some(c) = self.state.forced(v) {
            self.fire(v, c);
        }
        true
    }
}

/// Runs the propagation until a fixed point or the first empty list.
pub fn consistency_check(g: &OrientedGraph) -> CcState {
    consistency_check_with(g, &mut Fifo)
}

pub fn consistency_check_with(g: &OrientedGraph, schedule: &mut dyn Schedule) -> CcState {
    let mut run = Runner {
        g,
        state: CcState {
            lists: vec![BOTH; g.n()],
            log: Vec::new(),
            removed_at: vec![[None; 2]; g.n()],
            emptied: None,
        },
        pool: VecDeque::new(),
    };
    for v in g.vertices() {
        let init = |colour| Removal {
            vertex: v,
            colour,
            rule: Rule::Init,
            cause: None,
            via: None,
        };
        if g.out_degree(v) >= 2 && !run.apply(init(1)) {
            return run.state;
        }
        if g.in_degree(v) >= 2 && !run.apply(init(0)) {
            return run.state;
        }
    }
    while !run.pool.is_empty() {
        let i = schedule.pick(run.pool.len());
        let r = if i == 0 {
            run.pool.pop_front()
        } else {
            run.pool.swap_remove_back(i)
        }
        .expect("index in range");
        if !run.apply(r) {
            break;
        }
    }
    run.state
}
