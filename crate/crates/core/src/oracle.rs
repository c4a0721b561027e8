//! Exact, exponential-time ground truth for small graphs: longest trails and
//! circuits by backtracking, and the worst two-coloring of tiny `K_n`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::circuit::Trail;
use crate::coloring::{color_class, pair_count, pairs, ColorClassGraph, EdgeColoring};
use crate::error::{Error, Result};

/// Default edge-count guard for the exact searches.
pub const EDGE_LIMIT: usize = 25;
/// Edge sets are bit masks, so no override may exceed this.
pub const MAX_EDGE_LIMIT: usize = 64;
/// Largest `n` searched without opting in.
pub const WORST_CASE_MAX_N: usize = 6;
/// Largest `n` searched with the opt-in.
pub const WORST_CASE_EXTENDED_N: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Trail,
    Circuit,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Trail => "trail",
            Mode::Circuit => "circuit",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "trail" => Ok(Mode::Trail),
            "circuit" => Ok(Mode::Circuit),
            other => Err(format!("unknown mode '{other}'")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub length: usize,
    pub witness: Trail,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

struct Search {
    closed: bool,
    adjacency: Vec<Vec<(usize, usize)>>,
    /// Edges of each vertex's component.
    component_mask: Vec<u64>,
    /// Edges with both ends at least `v`, per `v`.
    suffix_mask: Vec<u64>,
    stop_at: usize,
    best: usize,
    best_path: Vec<usize>,
    path: Vec<usize>,
    nodes: u64,
}

impl Search {
    fn new(g: &ColorClassGraph, closed: bool) -> Self {
        let n = g.n();
        let mut adjacency = vec![Vec::new(); n];
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let mut component_mask = vec![0u64; n];
        let mut stop_at = 0;
        for comp in crate::coloring::components(g) {
            let mut mask = 0u64;
            let mut odd = 0;
            for &v in &comp.vertices {
                for &(_, id) in &adjacency[v] {
                    mask |= 1 << id;
                }
                odd += adjacency[v].len() % 2;
            }
            for &v in &comp.vertices {
                component_mask[v] = mask;
            }
            // a trail leaves at most two odd vertices unbalanced, a circuit
            // none; each removed edge fixes at most two
            let ub = if closed {
                comp.edge_count - odd / 2
            } else {
                comp.edge_count - odd.saturating_sub(2) / 2
            };
            stop_at = stop_at.max(ub);
        }

        let mut suffix_mask = vec![0u64; n + 1];
        for v in (0..n).rev() {
            suffix_mask[v] = suffix_mask[v + 1];
            for &(w, id) in &adjacency[v] {
                if w > v {
                    suffix_mask[v] |= 1 << id;
                }
            }
        }

        Self {
            closed,
            adjacency,
            component_mask,
            suffix_mask,
            stop_at,
            best: 0,
            best_path: Vec::new(),
            path: Vec::new(),
            nodes: 0,
        }
    }

    fn done(&self) -> bool {
        self.best >= self.stop_at
    }

    fn run(&mut self) {
        for start in 0..self.adjacency.len() {
            if self.done() {
                break;
            }
            if self.adjacency[start].is_empty() {
                continue;
            }
            let allowed = if self.closed {
                self.component_mask[start] & self.suffix_mask[start]
            } else {
                self.component_mask[start]
            };
            self.path.clear();
            self.path.push(start);
            self.extend(start, start, 0, allowed);
        }
    }

    fn extend(&mut self, start: usize, v: usize, used: u64, allowed: u64) {
        self.nodes += 1;
        let length = self.path.len() - 1;
        let counts = !self.closed || (v == start && length > 0);
        if counts && length > self.best {
            self.best = length;
            self.best_path.clone_from(&self.path);
            if self.done() {
                return;
            }
        }
        let remaining = (allowed & !used).count_ones() as usize;
        if length + remaining <= self.best {
            return;
        }
        for i in 0..self.adjacency[v].len() {
            let (w, id) = self.adjacency[v][i];
            let bit = 1u64 << id;
            if used & bit != 0 || allowed & bit == 0 {
                continue;
            }
            self.path.push(w);
            self.extend(start, w, used | bit, allowed);
            self.path.pop();
            if self.done() {
                return;
            }
        }
    }
}

fn exact(g: &ColorClassGraph, closed: bool, limit: usize, stop_at: usize) -> Result<OracleResult> {
    let limit = limit.min(MAX_EDGE_LIMIT);
    if g.edge_count() > limit {
        return Err(Error::TooLarge {
            size: g.edge_count(),
            limit,
        });
    }
    let mut search = Search::new(g, closed);
    search.stop_at = search.stop_at.min(stop_at);
    if search.stop_at > 0 {
        search.run();
    }
    let witness = if search.best == 0 {
        Trail::empty(g.color(), 0)
    } else {
        Trail::from_vertices(g.color(), search.best_path)
    };
    Ok(OracleResult {
        length: search.best,
        witness,
        nodes: search.nodes,
    })
}

/// Longest trail of `g` by exhaustive search.
///
/// Start vertices and neighbors are tried in ascending order and only strict
/// improvements are kept, so the witness is the lexicographically least
/// longest trail.
pub fn longest_trail_exact(g: &ColorClassGraph) -> Result<OracleResult> {
    exact(g, false, EDGE_LIMIT, usize::MAX)
}

/// Longest closed trail of `g`; zero for forests.
pub fn longest_circuit_exact(g: &ColorClassGraph) -> Result<OracleResult> {
    exact(g, true, EDGE_LIMIT, usize::MAX)
}

/// Either search with an explicit edge guard (capped at [`MAX_EDGE_LIMIT`]).
pub fn longest_exact_with_limit(g: &ColorClassGraph, mode: Mode, limit: usize) -> Result<OracleResult> {
    exact(g, mode == Mode::Circuit, limit, usize::MAX)
}

/// Best monochromatic trail or circuit over all colors of a coloring;
/// ties go to the lowest color.
pub fn longest_monochromatic(coloring: &EdgeColoring, mode: Mode, limit: usize) -> Result<OracleResult> {
    let mut best: Option<OracleResult> = None;
    for color in 0..coloring.k() {
        let g = color_class(coloring, color)?;
        let r = longest_exact_with_limit(&g, mode, limit)?;
        if best.as_ref().is_none_or(|b| r.length > b.length) {
            best = Some(r);
        }
    }
    Ok(best.expect("k >= 1"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorstCase {
    pub n: usize,
    pub mode: Mode,
    /// Minimum over two-colorings of the longest monochromatic trail/circuit.
    pub value: usize,
    pub witness: EdgeColoring,
    /// Longest monochromatic trail/circuit of the witness coloring.
    pub witness_trail: Trail,
    /// Colorings enumerated (edge `{0,1}` fixed to color 0).
    pub colorings: u64,
}

/// Coloring number `index`: pair rank 0 is color 0, pair rank `r >= 1` takes
/// bit `r - 1` of `index`.
pub fn indexed_coloring(n: usize, index: u64) -> EdgeColoring {
    let colors = (0..pair_count(n))
        .map(|r| if r == 0 { 0 } else { (index >> (r - 1) & 1) as u16 })
        .collect();
    EdgeColoring::from_ranked(n, 2, colors).expect("valid two-coloring")
}

fn indexed_classes(n: usize, index: u64) -> [ColorClassGraph; 2] {
    let mut edges = [Vec::new(), Vec::new()];
    for (r, e) in pairs(n).enumerate() {
        let c = if r == 0 { 0 } else { (index >> (r - 1) & 1) as usize };
        edges[c].push(e);
    }
    let [red, blue] = edges;
    [
        ColorClassGraph::from_edges(n, 0, red).expect("simple"),
        ColorClassGraph::from_edges(n, 1, blue).expect("simple"),
    ]
}

/// Scans `range` in order; returns the first index attaining the smallest
/// value. Colorings that reach the running minimum are cut short.
fn scan(n: usize, closed: bool, range: std::ops::Range<u64>) -> Option<(usize, u64)> {
    let mut best: Option<(usize, u64)> = None;
    'colorings: for index in range {
        let cutoff = best.map_or(usize::MAX, |b| b.0);
        let mut classes = indexed_classes(n, index);
        classes.sort_by_key(|g| std::cmp::Reverse(g.edge_count()));
        let mut value = 0;
        for g in &classes {
            let r = exact(g, closed, MAX_EDGE_LIMIT, cutoff).expect("within guard");
            if r.length >= cutoff {
                continue 'colorings;
            }
            value = value.max(r.length);
        }
        best = Some((value, index));
    }
    best
}

/// Minimum, over all two-colorings of `K_n`, of the longest monochromatic
/// trail (or circuit).
///
/// Edge `{0,1}` is fixed to color 0, which covers every coloring up to the
/// color swap. The space is split into contiguous chunks; the result, ties
/// broken by smallest coloring index, does not depend on `threads`.
pub fn worst_case_search(n: usize, mode: Mode, allow_n7: bool, threads: usize) -> Result<WorstCase> {
    let limit = if allow_n7 {
        WORST_CASE_EXTENDED_N
    } else {
        WORST_CASE_MAX_N
    };
    if n > limit {
        return Err(Error::TooLarge { size: n, limit });
    }
    if n < 1 {
        return Err(Error::BadN { n, min: 1 });
    }
    let closed = mode == Mode::Circuit;
    let colorings = 1u64 << pair_count(n).saturating_sub(1);
    let chunks = (threads.max(1) as u64 * 16).min(colorings);
    let bounds: Vec<std::ops::Range<u64>> = (0..chunks)
        .map(|i| (colorings * i / chunks)..(colorings * (i + 1) / chunks))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool");
    let (value, index) = pool
        .install(|| {
            bounds
                .into_par_iter()
                .filter_map(|range| scan(n, closed, range))
                .min()
        })
        .expect("at least one coloring");

    let witness = indexed_coloring(n, index);
    let witness_trail = longest_monochromatic(&witness, mode, MAX_EDGE_LIMIT)?.witness;
    Ok(WorstCase {
        n,
        mode,
        value,
        witness,
        witness_trail,
        colorings,
    })
}
