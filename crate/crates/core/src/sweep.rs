//! Batch runs over coloring families, one CSV row per instance.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::circuit::verify;
use crate::coloring::{max_component_edges, EdgeColoring};
use crate::constructions::{extremal_bipartite_split, random_coloring};
use crate::engine::solve;
use crate::error::Result;
use crate::trace::{case_diagnose, Case};

pub const CSV_HEADER: &str = "n,k,family,seed,circuit_len,threshold,max_comp_edges,n1,case,runtime_ms";

/// Rows with `n` below this are left out of the inversion deviation.
pub const INVERSION_MIN_N: usize = 90;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Extremal,
    Random,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Extremal => "extremal",
            Family::Random => "random",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "extremal" => Ok(Family::Extremal),
            "random" => Ok(Family::Random),
            other => Err(format!("unknown sweep family '{other}'")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub family: Family,
    pub ns: Vec<usize>,
    /// Ignored by the extremal family, which runs once per `n` with seed 0.
    pub seeds: Vec<u64>,
    /// Ignored by the extremal family (always two colors).
    pub k: usize,
    pub threads: usize,
    /// Record wall time; otherwise `runtime_ms` is 0 and output is
    /// reproducible byte for byte.
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub family: Family,
    pub seed: u64,
    pub circuit_len: usize,
    pub threshold: u64,
    pub max_comp_edges: usize,
    /// Two-color instances only.
    pub n1: Option<usize>,
    pub case: Option<Case>,
    pub runtime_ms: u64,
    /// Whether the circuit certificate verified against the instance.
    pub certificate_valid: bool,
}

impl SweepRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.k,
            self.family,
            self.seed,
            self.circuit_len,
            self.threshold,
            self.max_comp_edges,
            self.n1.map(|x| x.to_string()).unwrap_or_default(),
            self.case.map(|x| x.to_string()).unwrap_or_default(),
            self.runtime_ms
        )
    }
}

pub fn instances(config: &SweepConfig) -> Vec<(usize, u64)> {
    let seeds: &[u64] = match config.family {
        Family::Extremal => &[0],
        Family::Random => &config.seeds,
    };
    config
        .ns
        .iter()
        .flat_map(|&n| seeds.iter().map(move |&s| (n, s)))
        .collect()
}

pub fn generate(family: Family, n: usize, k: usize, seed: u64) -> Result<EdgeColoring> {
    match family {
        Family::Extremal => extremal_bipartite_split(n),
        Family::Random => random_coloring(n, k, seed),
    }
}

pub fn run_instance(family: Family, n: usize, k: usize, seed: u64, timing: bool) -> Result<SweepRow> {
    let started = Instant::now();
    let coloring = generate(family, n, k, seed)?;
    let report = solve(&coloring);
    let certificate_valid = verify(&coloring, &report.circuit);
    let max_comp_edges = max_component_edges(&coloring).global;
    let diagnosis = case_diagnose(&coloring).ok();
    let runtime_ms = if timing {
        started.elapsed().as_millis() as u64
    } else {
        0
    };
    Ok(SweepRow {
        n,
        k: coloring.k(),
        family,
        seed,
        circuit_len: report.length(),
        threshold: report.threshold,
        max_comp_edges,
        n1: diagnosis.as_ref().map(|d| d.n1),
        case: diagnosis.map(|d| d.case),
        runtime_ms,
        certificate_valid,
    })
}

/// Runs every instance; rows come back ordered by `(n, seed)` whatever the
/// thread count.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.max(1))
        .build()
        .expect("thread pool");
    let mut work = instances(config);
    work.sort_unstable();
    pool.install(|| {
        work.par_iter()
            .map(|&(n, seed)| run_instance(config.family, n, config.k, seed, config.timing))
            .collect()
    })
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    out
}

/// `|E − 2n²/9| / (2n²/9)`.
pub fn split_deviation(n: usize, edges: usize) -> f64 {
    let target = 2.0 * (n * n) as f64 / 9.0;
    (edges as f64 - target).abs() / target
}

/// `|n − 3√(ℓ/2)| / n`: how far `n` is from the trail Ramsey estimate for
/// length `ℓ`.
pub fn inversion_deviation(n: usize, length: usize) -> f64 {
    let estimate = 3.0 * (length as f64 / 2.0).sqrt();
    (n as f64 - estimate).abs() / n as f64
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepSummary {
    /// Max of [`split_deviation`] over rows.
    pub max_split_deviation: f64,
    /// Max of [`inversion_deviation`] (with `ℓ = max_comp_edges`) over rows
    /// with `n >= INVERSION_MIN_N`; `None` if there are none.
    pub max_inversion_deviation: Option<f64>,
    pub invalid_certificates: usize,
    pub below_threshold: usize,
}

pub fn summarize(rows: &[SweepRow]) -> SweepSummary {
    let max_split_deviation = rows
        .iter()
        .map(|r| split_deviation(r.n, r.max_comp_edges))
        .fold(0.0, f64::max);
    let max_inversion_deviation = rows
        .iter()
        .filter(|r| r.n >= INVERSION_MIN_N)
        .map(|r| inversion_deviation(r.n, r.max_comp_edges))
        .reduce(f64::max);
    SweepSummary {
        max_split_deviation,
        max_inversion_deviation,
        invalid_certificates: rows.iter().filter(|r| !r.certificate_valid).count(),
        below_threshold: rows
            .iter()
            .filter(|r| (r.circuit_len as u64) < r.threshold)
            .count(),
    }
}
