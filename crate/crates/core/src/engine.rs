//! The circuit pipeline: eulerize, take the residual component with the most
//! edges, and walk it with an Euler circuit.

use crate::circuit::{euler_circuit, Trail};
use crate::coloring::{components, Component, EdgeColoring};
use crate::error::{Error, Result};
use crate::eulerize::{eulerize, EulerizedColoring, ParityForest};

/// Coefficient of the `n^{3/2}` slack subtracted from the leading term.
pub const SLACK: f64 = 2.0;

/// Lower bound promised for the longest monochromatic circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guarantee {
    /// `max(0, floor(lead(n, k) - SLACK * n^{3/2}))`.
    pub bound: u64,
    /// Smallest `n` for which the bound is positive (for this `k`).
    pub n_min: usize,
}

fn leading_coefficient(k: usize) -> f64 {
    if k == 2 {
        2.0 / 9.0
    } else {
        1.0 / (8.0 * (k * k) as f64)
    }
}

fn raw_bound(n: usize, k: usize, slack: f64) -> f64 {
    let n = n as f64;
    leading_coefficient(k) * n * n - slack * n * n.sqrt()
}

fn clamp_floor(x: f64) -> u64 {
    if x <= 0.0 {
        0
    } else {
        x.floor() as u64
    }
}

/// `2n²/9 − 2n^{3/2}` for two colors and `n²/(8k²) − 2n^{3/2}` for `k ≥ 3`,
/// floored and clamped at zero.
pub fn guarantee_threshold(n: usize, k: usize) -> Result<Guarantee> {
    guarantee_threshold_with(n, k, SLACK)
}

/// [`guarantee_threshold`] with an explicit slack coefficient.
pub fn guarantee_threshold_with(n: usize, k: usize, slack: f64) -> Result<Guarantee> {
    if k < 2 {
        return Err(Error::BadK { k, min: 2 });
    }
    // the bound is zero up to (slack / lead)², increasing afterwards
    let root = slack / leading_coefficient(k);
    let mut n_min = (root * root).floor().max(1.0) as usize;
    while clamp_floor(raw_bound(n_min, k, slack)) == 0 {
        n_min += 1;
    }
    Ok(Guarantee {
        bound: clamp_floor(raw_bound(n, k, slack)),
        n_min,
    })
}

/// Outcome of [`solve`].
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub color: usize,
    /// Residual component the circuit walks; `None` when every residual
    /// class is empty.
    pub component: Option<Component>,
    /// Closed unless it has length zero.
    pub circuit: Trail,
    pub forests: Vec<ParityForest>,
    /// Zero when `k < 2`.
    pub threshold: u64,
    pub threshold_met: bool,
}

impl SolveReport {
    pub fn length(&self) -> usize {
        self.circuit.len()
    }

    pub fn forest_sizes(&self) -> Vec<usize> {
        self.forests.iter().map(ParityForest::len).collect()
    }
}

/// Components of every residual class.
pub fn residual_components(eulerized: &EulerizedColoring) -> Vec<Vec<Component>> {
    eulerized.residual.iter().map(components).collect()
}

/// Picks the residual component with most edges: ties go to the lowest
/// color, then the smallest vertex.
fn richest(per_color: Vec<Vec<Component>>) -> Option<Component> {
    per_color
        .into_iter()
        .flatten()
        .filter(|c| c.edge_count > 0)
        .min_by(|a, b| {
            b.edge_count
                .cmp(&a.edge_count)
                .then(a.color.cmp(&b.color))
                .then(a.min_vertex().cmp(&b.min_vertex()))
        })
}

/// Monochromatic circuit through every edge of the richest Eulerian
/// component left after removing one parity forest per color.
pub fn solve(coloring: &EdgeColoring) -> SolveReport {
    let eulerized = eulerize(coloring);
    let chosen = richest(residual_components(&eulerized));
    let (color, circuit) = match &chosen {
        Some(component) => {
            let circuit = euler_circuit(&eulerized.residual[component.color], component)
                .expect("residual components are even and connected");
            (component.color, circuit)
        }
        None => (0, Trail::empty(0, 0)),
    };
    let threshold = guarantee_threshold(coloring.n(), coloring.k())
        .map(|g| g.bound)
        .unwrap_or(0);
    SolveReport {
        color,
        threshold_met: circuit.len() as u64 >= threshold,
        component: chosen,
        circuit,
        forests: eulerized.forests,
        threshold,
    }
}
