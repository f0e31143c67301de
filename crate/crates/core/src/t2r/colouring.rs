//! Turning a successful propagation into a homomorphism to T2^r.
//!
//! Vertices with singleton lists keep their colour. Vertices with both
//! colours left have in- and out-degree at most one, so they split into
//! maximal directed runs; a run is coloured constantly. Two runs must
//! differ when they leave the same vertex of out-degree two or enter the
//! same vertex of in-degree two, and these constraints form paths and even
//! cycles, which are 2-coloured alternately.

use std::collections::{BTreeMap, VecDeque};

use crate::decide::DecideError;
use crate::graph::{Mapping, OrientedGraph, Vertex};
use crate::oracle::{check, SearchProblem};
use crate::target::{Mode, Tournament};

use super::consistency::{CcState, BOTH};

const PROBLEM: &str = "ios-t2r";

/// Maximal directed runs of free vertices, each listed from tail to head.
fn free_runs(g: &OrientedGraph, state: &CcState) -> Vec<Vec<Vertex>> {
    let free = |v: Vertex| state.list(v) == BOTH;
    let free_pred = |v: Vertex| g.in_neighbours(v).iter().copied().find(|&u| free(u));
    let free_succ = |v: Vertex| g.out_neighbours(v).iter().copied().find(|&w| free(w));
    let mut seen = vec![false; g.n()];
    let mut runs = Vec::new();
    let walk = |start: Vertex, seen: &mut Vec<bool>| {
        let mut run = vec![start];
        seen[start] = true;
        let mut v = start;
        while let Some(w) = free_succ(v) {
            if seen[w] {
                break;
            }
            seen[w] = true;
            run.push(w);
            v = w;
        }
        run
    };
    for v in g.vertices() {
        if free(v) && !seen[v] && free_pred(v).is_none() {
            runs.push(walk(v, &mut seen));
        }
    }
    // Whatever is left lies on free directed cycles.
    for v in g.vertices() {
        if free(v) && !seen[v] {
            runs.push(walk(v, &mut seen));
        }
    }
    runs
}

pub fn extract_colouring(g: &OrientedGraph, state: &CcState) -> Result<Mapping, DecideError> {
    if !state.succeeded() {
        return Err(DecideError::internal(
            PROBLEM,
            "propagation did not succeed",
        ));
    }
    let mut colour: Vec<Option<usize>> = g.vertices().map(|v| state.forced(v)).collect();
    let runs = free_runs(g, state);
    let mut run_of = vec![usize::MAX; g.n()];
    for (i, run) in runs.iter().enumerate() {
        for &v in run {
            run_of[v] = i;
        }
    }

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); runs.len()];
    let mut link = |group: &[Vertex]| {
        if let &[a, b] = group {
            if run_of[a] != usize::MAX && run_of[b] != usize::MAX {
                adj[run_of[a]].push(run_of[b]);
                adj[run_of[b]].push(run_of[a]);
            }
        }
    };
    for z in g.vertices() {
        link(g.out_neighbours(z));
        link(g.in_neighbours(z));
    }

    let mut run_colour: Vec<Option<usize>> = vec![None; runs.len()];
    // Components of the constraint graph, keyed by their smallest start id.
    let mut components: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    let mut seen = vec![false; runs.len()];
    for i in 0..runs.len() {
        if seen[i] || adj[i].is_empty() {
            continue;
        }
        let mut members = vec![i];
        seen[i] = true;
        let mut head = 0;
        while head < members.len() {
            let r = members[head];
            head += 1;
            for &s in &adj[r] {
                if !seen[s] {
                    seen[s] = true;
                    members.push(s);
                }
            }
        }
        let key = members.iter().map(|&r| runs[r][0]).min().unwrap();
        components.insert(key, members);
    }
    for members in components.values() {
        let endpoint = members
            .iter()
            .copied()
            .filter(|&r| adj[r].len() == 1)
            .min_by_key(|&r| runs[r][0]);
        let root =
            endpoint.unwrap_or_else(|| *members.iter().min_by_key(|&&r| runs[r][0]).unwrap());
        run_colour[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(r) = queue.pop_front() {
            let c = run_colour[r].unwrap();
            for &s in &adj[r] {
                match run_colour[s] {
                    None => {
                        run_colour[s] = Some(1 - c);
                        queue.push_back(s);
                    }
                    Some(d) if d == c => {
                        return Err(DecideError::internal(
                            PROBLEM,
                            format!(
                                "odd constraint cycle through runs starting at {} and {}",
                                runs[r][0], runs[s][0]
                            ),
                        ));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    for (i, run) in runs.iter().enumerate() {
        let c = run_colour[i].unwrap_or(1);
        for &v in run {
            colour[v] = Some(c);
        }
    }

    let f = Mapping(
        colour
            .into_iter()
            .map(|c| c.expect("every vertex coloured"))
            .collect(),
    );
    let target = Tournament::T2r.graph();
    let ok = check(&SearchProblem::new(g, &target, Mode::Ios), &f)
        .map_err(|e| DecideError::internal(PROBLEM, e.to_string()))?;
    if !ok {
        return Err(DecideError::internal(
            PROBLEM,
            format!("extracted colouring {f:?} is not ios-injective"),
        ));
    }
    Ok(f)
}
