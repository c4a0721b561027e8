//! Minimum-degree peeling.

use std::collections::BTreeSet;

use crate::coloring::ColorClassGraph;
use crate::scalar::Scalar;

/// Result of [`min_degree_peel`].
#[derive(Clone, Debug, PartialEq)]
pub struct PeelReport<S> {
    /// `2|E| / n` of the input.
    pub average_degree: S,
    pub threshold: S,
    /// Sorted ascending; every survivor has at least `threshold` surviving
    /// neighbors.
    pub survivors: Vec<usize>,
    /// `None` when nothing survives.
    pub min_degree: Option<usize>,
    pub edge_count: usize,
    /// Vertices in the order they were deleted.
    pub removal_order: Vec<usize>,
}

impl<S> PeelReport<S> {
    pub fn is_empty(&self) -> bool {
        self.survivors.is_empty()
    }
}

/// Repeatedly deletes the smallest vertex whose current degree is below `d`.
///
/// The survivors form the largest subgraph of minimum degree at least `d`,
/// which is nonempty whenever the average degree is at least `2d`.
pub fn min_degree_peel<S: Scalar>(g: &ColorClassGraph, d: S) -> PeelReport<S> {
    let n = g.n();
    let mut degree = g.degrees();
    let mut alive = vec![true; n];
    let below = |deg: usize| S::from_count(deg) < d;
    let mut pending: BTreeSet<usize> = (0..n).filter(|&v| below(degree[v])).collect();
    let mut removal_order = Vec::new();
    while let Some(v) = pending.pop_first() {
        alive[v] = false;
        removal_order.push(v);
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
                if below(degree[w]) {
                    pending.insert(w);
                }
            }
        }
    }

    let survivors: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let edge_count = g
        .edges()
        .iter()
        .filter(|&&(u, v)| alive[u] && alive[v])
        .count();
    let average_degree = if n == 0 {
        S::zero()
    } else {
        S::from_count(2 * g.edge_count()) / S::from_count(n)
    };
    PeelReport {
        average_degree,
        threshold: d,
        min_degree: survivors.iter().map(|&v| degree[v]).min(),
        survivors,
        edge_count,
        removal_order,
    }
}
