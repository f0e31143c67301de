//! Plain-text graph format.
//!
//! ```text
//! # comments run to end of line
//! 3 3
//! 0 1
//! 1 2
//! 2 0
//! ```
//!
//! The header is `n m`; exactly `m` arc lines `u v` (arc u→v) follow. Blank
//! lines are ignored. [`serialize`] writes the canonical form: arcs sorted,
//! no comments.

use std::fmt::Write as _;

use crate::graph::{GraphError, OrientedGraph};

fn parse_error(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let field = fields
            .next()
            .ok_or_else(|| parse_error(line, "expected two integers"))?;
        field
            .parse()
            .map_err(|_| parse_error(line, format!("`{field}` is not a non-negative integer")))
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(parse_error(line, "expected two integers"));
    }
    Ok((a, b))
}

pub fn parse(text: &str) -> Result<OrientedGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(header_line, header)?;

    let mut arcs = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, body) in lines {
        if arcs.len() == m {
            return Err(parse_error(line, format!("more than {m} arc lines")));
        }
        let (u, v) = two_numbers(line, body)?;
        OrientedGraph::build(n, [(u, v)]).map_err(|e| parse_error(line, e.to_string()))?;
        arcs.push((u, v, line));
        last_line = line;
    }
    if arcs.len() != m {
        return Err(parse_error(
            last_line,
            format!("header announces {m} arcs, found {}", arcs.len()),
        ));
    }
    // Digons only show up across lines; report the line of the second arc.
    let mut seen = std::collections::BTreeSet::new();
    for &(u, v, line) in &arcs {
        if seen.contains(&(v, u)) {
            return Err(parse_error(
                line,
                GraphError::Digon(u.min(v), u.max(v)).to_string(),
            ));
        }
        seen.insert((u, v));
    }
    OrientedGraph::build(n, arcs.into_iter().map(|(u, v, _)| (u, v)))
}

pub fn serialize(g: &OrientedGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.arc_count());
    for &(u, v) in g.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
