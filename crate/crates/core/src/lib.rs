//! Long monochromatic circuits in edge-colored complete graphs.
//!
//! Every color class of a coloring of `K_n` is made even by deleting a
//! parity-correcting forest; the residual component with the most edges is
//! then walked by an Euler circuit, which serves as a checkable certificate.
//! For two colors that circuit has length at least `2n²/9 − O(n^{3/2})`, which
//! the split coloring from [`constructions::extremal_bipartite_split`] shows
//! to be tight. Around the pipeline sit the case-analysis trace
//! ([`trace`]), constructions, and exact small-case oracles ([`oracle`]).
//!
//! Graph data is integral; thresholds and bound evaluations are generic over
//! the [`scalar`] traits, with aliases below for the common instantiations.

pub mod circuit;
pub mod coloring;
pub mod constructions;
pub mod engine;
pub mod error;
pub mod eulerize;
pub mod format;
pub mod oracle;
pub mod peel;
pub mod scalar;
pub mod sweep;
pub mod trace;

pub use circuit::{check_trail, euler_circuit, verify, Trail, TrailDefect};
pub use coloring::{
    color_class, components, degree_parity, max_component_edges, ColorClassGraph, Component,
    ComponentMaxima, DegreeParity, EdgeColoring,
};
pub use engine::{guarantee_threshold, solve, Guarantee, SolveReport};
pub use error::{Error, Result};
pub use eulerize::{eulerize, parity_forest, EulerizedColoring, ParityForest};
pub use peel::{min_degree_peel, PeelReport};
pub use scalar::{Real, Scalar};
pub use trace::{case_diagnose, proof_trace, Case, CaseDiagnosis, CaseTrace, Inequality};

/// Exact rational scalar.
pub type Rational = num_rational::Ratio<i64>;

/// Case trace evaluated in double precision.
pub type CaseTraceF64 = CaseTrace<f64>;
/// Case trace evaluated in single precision.
pub type CaseTraceF32 = CaseTrace<f32>;
pub type InequalityF64 = Inequality<f64>;

/// Peeling with a floating-point threshold.
pub type PeelReportF64 = PeelReport<f64>;
/// Peeling with an exact rational threshold.
pub type PeelReportExact = PeelReport<Rational>;
