//! Trails, Euler circuits and certificate checking.

use std::collections::HashSet;
use std::fmt;

use crate::coloring::{normalize, ColorClassGraph, Component, EdgeColoring};
use crate::error::{Error, Result};

/// A walk that never repeats an edge, all of whose edges share one color.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trail {
    pub color: usize,
    /// `v_0 .. v_length`; never empty.
    pub vertices: Vec<usize>,
    pub closed: bool,
}

impl Trail {
    /// Zero-length trail sitting at `vertex`.
    pub fn empty(color: usize, vertex: usize) -> Self {
        Self {
            color,
            vertices: vec![vertex],
            closed: false,
        }
    }

    /// Builds a trail, marking it closed when it returns to its start.
    pub fn from_vertices(color: usize, vertices: Vec<usize>) -> Self {
        let closed = vertices.len() > 1 && vertices.first() == vertices.last();
        Self {
            color,
            vertices,
            closed,
        }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Consecutive vertex pairs.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

/// First reason a trail fails to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrailDefect {
    BadColor,
    RepeatedEdge,
    NotAWalk,
    BadClosure,
    BadVertex,
}

impl fmt::Display for TrailDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrailDefect::BadColor => "BadColor",
            TrailDefect::RepeatedEdge => "RepeatedEdge",
            TrailDefect::NotAWalk => "NotAWalk",
            TrailDefect::BadClosure => "BadClosure",
            TrailDefect::BadVertex => "BadVertex",
        })
    }
}

/// Checks `trail` against `coloring`, reporting the first defect met while
/// walking it.
pub fn check_trail(coloring: &EdgeColoring, trail: &Trail) -> std::result::Result<(), TrailDefect> {
    let n = coloring.n();
    let Some(&start) = trail.vertices.first() else {
        return Err(TrailDefect::NotAWalk);
    };
    if start >= n {
        return Err(TrailDefect::BadVertex);
    }
    if trail.color >= coloring.k() {
        return Err(TrailDefect::BadColor);
    }
    let mut used = HashSet::with_capacity(trail.len());
    for (a, b) in trail.steps() {
        if b >= n {
            return Err(TrailDefect::BadVertex);
        }
        if a == b {
            return Err(TrailDefect::NotAWalk);
        }
        if coloring.color(a, b) != trail.color {
            return Err(TrailDefect::BadColor);
        }
        if !used.insert(normalize(a, b)) {
            return Err(TrailDefect::RepeatedEdge);
        }
    }
    let returns = !trail.is_empty() && trail.vertices.last() == Some(&start);
    if trail.closed != returns {
        return Err(TrailDefect::BadClosure);
    }
    Ok(())
}

/// `true` iff the trail is a valid monochromatic trail of `coloring`.
pub fn verify(coloring: &EdgeColoring, trail: &Trail) -> bool {
    check_trail(coloring, trail).is_ok()
}

/// Euler circuit of one even, connected component of `g` (Hierholzer).
///
/// The circuit starts and ends at the component's smallest vertex. From the
/// vertex on top of the stack the smallest neighbor over an unused edge is
/// pushed; a vertex with no unused edges is popped to the output, and the
/// circuit is the reversed output.
pub fn euler_circuit(g: &ColorClassGraph, component: &Component) -> Result<Trail> {
    if component.vertices.is_empty() {
        return Err(Error::EmptyComponent);
    }
    let n = g.n();
    let mut inside = vec![false; n];
    for &v in &component.vertices {
        if v >= n {
            return Err(Error::BadVertex { vertex: v, n });
        }
        inside[v] = true;
    }

    // local adjacency over edges with both ends in the component
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut edge_count = 0;
    for &(u, v) in g.edges() {
        match (inside[u], inside[v]) {
            (true, true) => {
                adjacency[u].push((v, edge_count));
                adjacency[v].push((u, edge_count));
                edge_count += 1;
            }
            (false, false) => {}
            _ => return Err(Error::NotConnected),
        }
    }
    if edge_count == 0 {
        return Err(Error::EmptyComponent);
    }
    for &v in &component.vertices {
        let degree = adjacency[v].len();
        if degree % 2 == 1 {
            return Err(Error::NotEven { vertex: v, degree });
        }
        if degree == 0 {
            return Err(Error::NotConnected);
        }
        // neighbors come from ascending edge lists, but (u, v) order is by
        // the smaller end, so sort explicitly
        adjacency[v].sort_unstable();
    }

    let start = component.min_vertex();
    let mut used = vec![false; edge_count];
    let mut next = vec![0usize; n];
    let mut stack = vec![start];
    let mut out = Vec::with_capacity(edge_count + 1);
    while let Some(&v) = stack.last() {
        let list = &adjacency[v];
        while next[v] < list.len() && used[list[next[v]].1] {
            next[v] += 1;
        }
        if let Some(&(w, e)) = list.get(next[v]) {
            used[e] = true;
            stack.push(w);
        } else {
            out.push(v);
            stack.pop();
        }
    }
    out.reverse();
    if out.len() != edge_count + 1 {
        return Err(Error::NotConnected);
    }
    Ok(Trail {
        color: g.color(),
        vertices: out,
        closed: true,
    })
}
