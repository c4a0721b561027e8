//! Two-color case analysis of a coloring.
//!
//! Colors follow a fixed convention: 0 is red, 1 is blue. Everything is
//! measured on the eulerized coloring, where `U1` is the largest blue
//! residual component and `n1` its order. The trace evaluates each counting
//! step of the lower-bound argument on the actual instance and records the
//! two sides; it never rejects an input.

use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::coloring::{components, pair_count, Component, EdgeColoring};
use crate::engine::guarantee_threshold;
use crate::error::{Error, Result};
use crate::eulerize::{eulerize, EulerizedColoring};
use crate::scalar::Real;

pub const RED: usize = 0;
pub const BLUE: usize = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// `n1 < n/3`
    A,
    /// `n/3 <= n1 <= 2n/3`
    B,
    /// `2n/3 < n1 <= n - 2√n`
    C,
    /// `n1 > n - 2√n`
    D,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::A => "A",
            Case::B => "B",
            Case::C => "C",
            Case::D => "D",
        })
    }
}

/// `n1 <= n - 2√n`, decided in integers.
fn leaves_root_gap(n: usize, n1: usize) -> bool {
    n1 <= n && {
        let gap = (n - n1) as u128;
        gap * gap >= 4 * n as u128
    }
}

/// Case label for a largest-component order `n1`. Boundaries are compared
/// exactly and checked in order, so for small `n` where the ranges overlap
/// the earlier case wins.
pub fn case_of(n: usize, n1: usize) -> Case {
    if 3 * n1 < n {
        Case::A
    } else if 3 * n1 <= 2 * n {
        Case::B
    } else if leaves_root_gap(n, n1) {
        Case::C
    } else {
        Case::D
    }
}

/// Largest component by order; ties keep the deterministic component order.
fn largest_by_order(components: &[Component]) -> &Component {
    components
        .iter()
        .reduce(|best, c| if c.vertex_count() > best.vertex_count() { c } else { best })
        .expect("n >= 1")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseDiagnosis {
    pub n: usize,
    /// Order of the largest blue residual component.
    pub n1: usize,
    pub case: Case,
    /// Same quantity measured on the input coloring before eulerization.
    pub input_n1: usize,
    /// Diagnosis with the colors exchanged (largest red residual component).
    pub swapped_n1: usize,
    pub swapped_case: Case,
}

fn require_two_colors(coloring: &EdgeColoring) -> Result<()> {
    match coloring.k() {
        2 => Ok(()),
        k => Err(Error::BadK { k, min: 2 }),
    }
}

fn diagnosis(eulerized: &EulerizedColoring) -> CaseDiagnosis {
    let base = &eulerized.base;
    let n = base.n();
    let input_blue = crate::coloring::color_class(base, BLUE).expect("k = 2");
    let n1 = largest_by_order(&components(&eulerized.residual[BLUE])).vertex_count();
    let swapped_n1 = largest_by_order(&components(&eulerized.residual[RED])).vertex_count();
    CaseDiagnosis {
        n,
        n1,
        case: case_of(n, n1),
        input_n1: largest_by_order(&components(&input_blue)).vertex_count(),
        swapped_n1,
        swapped_case: case_of(n, swapped_n1),
    }
}

/// Case label and `n1` of a two-coloring.
pub fn case_diagnose(coloring: &EdgeColoring) -> Result<CaseDiagnosis> {
    require_two_colors(coloring)?;
    Ok(diagnosis(&eulerize(coloring)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    AtLeast,
    AtMost,
    Greater,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
            Relation::Greater => ">",
        })
    }
}

/// One inequality evaluated on an instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Inequality<S> {
    pub name: &'static str,
    pub lhs: S,
    pub relation: Relation,
    pub rhs: S,
    pub holds: bool,
}

impl<S: Real> Inequality<S> {
    fn new(name: &'static str, lhs: S, relation: Relation, rhs: S) -> Self {
        let holds = match relation {
            Relation::AtLeast => lhs >= rhs,
            Relation::AtMost => lhs <= rhs,
            Relation::Greater => lhs > rhs,
        };
        Self {
            name,
            lhs,
            relation,
            rhs,
            holds,
        }
    }
}

impl<S: Real> fmt::Display for Inequality<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:.3} {} {:.3} {}",
            self.name,
            self.lhs,
            self.relation,
            self.rhs,
            if self.holds { "ok" } else { "fails" }
        )
    }
}

/// Full instance-level evaluation of the case analysis.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseTrace<S> {
    pub diagnosis: CaseDiagnosis,
    /// Vertex set of the largest blue residual component.
    pub u1: Vec<usize>,
    /// `U1`'s share of the largest red component of the bipartite red graph
    /// between `U1` and its complement; set for cases B and C.
    pub v1: Option<Vec<usize>>,
    /// Case D only: whether the largest red component also has more than
    /// `n - 2√n` vertices.
    pub hypothesis_met: Option<bool>,
    pub inequalities: Vec<Inequality<S>>,
}

impl<S> CaseTrace<S> {
    pub fn case(&self) -> Case {
        self.diagnosis.case
    }

    pub fn n1(&self) -> usize {
        self.diagnosis.n1
    }

    pub fn get(&self, name: &str) -> Option<&Inequality<S>> {
        self.inequalities.iter().find(|i| i.name == name)
    }
}

struct Instance<'a, S> {
    eulerized: &'a EulerizedColoring,
    n: usize,
    nf: S,
    sqrt_n: S,
    in_u1: Vec<bool>,
    out: Vec<Inequality<S>>,
}

impl<S: Real> Instance<'_, S> {
    fn count(&self, x: usize) -> S {
        S::from_count(x)
    }

    fn push(&mut self, name: &'static str, lhs: S, relation: Relation, rhs: S) {
        self.out.push(Inequality::new(name, lhs, relation, rhs));
    }

    fn red_edges(&self) -> &[(usize, usize)] {
        self.eulerized.residual[RED].edges()
    }

    fn threshold(&self) -> S {
        self.count(guarantee_threshold(self.n, 2).expect("k = 2").bound as usize)
    }

    /// Residual edges (either color) with both ends selected.
    fn edges_inside(&self, keep: &[bool]) -> usize {
        self.eulerized
            .residual
            .iter()
            .flat_map(|g| g.edges())
            .filter(|&&(u, v)| keep[u] && keep[v])
            .count()
    }

    /// Red component (in the whole residual red class) containing `v`.
    fn red_component_edges(&self, v: usize) -> usize {
        components(&self.eulerized.residual[RED])
            .into_iter()
            .find(|c| c.contains(v))
            .map_or(0, |c| c.edge_count)
    }

    /// Counting steps shared by cases B and C. Returns `V1` and the edge count
    /// of the red component containing it.
    fn large_red_component(&mut self, n1: usize) -> (Vec<usize>, usize) {
        let n = self.n;
        let (nf, sqrt_n, n1f) = (self.nf, self.sqrt_n, self.count(n1));
        let two = S::lit(2.0);
        let outside = n - n1;
        let outside_f = self.count(outside);

        let cross: Vec<(usize, usize)> = self
            .red_edges()
            .iter()
            .copied()
            .filter(|&(u, v)| self.in_u1[u] != self.in_u1[v])
            .collect();
        let cross_rhs = n1f * outside_f - two * nf;
        self.push("red_cross_edges", self.count(cross.len()), Relation::AtLeast, cross_rhs);

        let mut into_u1 = vec![0usize; n];
        for &(u, v) in &cross {
            let w = if self.in_u1[u] { v } else { u };
            into_u1[w] += 1;
        }
        let max_cross = (0..n).filter(|&w| !self.in_u1[w]).map(|w| into_u1[w]).max();
        if let Some(max_cross) = max_cross {
            let degree_rhs = n1f - two * nf / outside_f;
            self.push("max_cross_degree", self.count(max_cross), Relation::AtLeast, degree_rhs);
            self.push("cross_degree_floor", degree_rhs, Relation::AtLeast, n1f - sqrt_n);
        }

        let mut sets = UnionFind::<usize>::new(n);
        for &(u, v) in &cross {
            sets.union(u, v);
        }
        let mut share = vec![0usize; n];
        for v in (0..n).filter(|&v| self.in_u1[v]) {
            share[sets.find_mut(v)] += 1;
        }
        // the first root reached in vertex order wins ties
        let mut best_root = None;
        for v in (0..n).filter(|&v| self.in_u1[v]) {
            let root = sets.find_mut(v);
            if best_root.is_none_or(|b: usize| share[root] > share[b]) {
                best_root = Some(root);
            }
        }
        let best_root = best_root.expect("U1 is nonempty");
        let v1: Vec<usize> = (0..n)
            .filter(|&v| self.in_u1[v] && sets.find_mut(v) == best_root)
            .collect();
        self.push("v1_size", self.count(v1.len()), Relation::AtLeast, n1f - sqrt_n);

        let v1_component = self.red_component_edges(v1[0]);
        self.push(
            "v1_component_edges",
            self.count(v1_component),
            Relation::AtLeast,
            (n1f - sqrt_n) * outside_f - two * nf,
        );
        (v1, v1_component)
    }
}

/// Evaluates the case analysis of a two-coloring on the instance.
pub fn proof_trace<S: Real>(coloring: &EdgeColoring) -> Result<CaseTrace<S>> {
    require_two_colors(coloring)?;
    let eulerized = eulerize(coloring);
    let diagnosis = diagnosis(&eulerized);
    let n = coloring.n();
    let blue_components = components(&eulerized.residual[BLUE]);
    let u1_component = largest_by_order(&blue_components).clone();
    let mut in_u1 = vec![false; n];
    for &v in &u1_component.vertices {
        in_u1[v] = true;
    }
    let nf = S::from_count(n);
    let mut inst = Instance {
        eulerized: &eulerized,
        n,
        nf,
        sqrt_n: nf.sqrt(),
        in_u1,
        out: Vec::new(),
    };
    let (two, three, nine) = (S::lit(2.0), S::lit(3.0), S::lit(9.0));
    let n1 = diagnosis.n1;
    let n1f = S::from_count(n1);
    let threshold = inst.threshold();
    let mut v1 = None;
    let mut hypothesis_met = None;

    match diagnosis.case {
        Case::A => {
            // blue components are small, so red is nearly all of K_n
            let rhs = nf * nf / three - two * nf;
            let input_red = coloring.color_counts()[RED];
            inst.push("input_red_edges", inst.count(input_red), Relation::AtLeast, rhs);
            let residual_red = inst.red_edges().len();
            inst.push("residual_red_edges", inst.count(residual_red), Relation::AtLeast, rhs);
            inst.push(
                "red_average_degree",
                two * inst.count(residual_red) / nf,
                Relation::AtLeast,
                two * nf / three - S::lit(4.0),
            );
            let best_red = components(&eulerized.residual[RED])[0].edge_count;
            inst.push("conclusion", inst.count(best_red), Relation::AtLeast, threshold);
        }
        Case::B => {
            let (set, red_edges) = inst.large_red_component(n1);
            let outside = S::from_count(n - n1);
            let sqrt_n = inst.sqrt_n;
            let case_bound = (nf / three - sqrt_n) * two * nf / three - two * nf;
            inst.push(
                "case_b_floor",
                (n1f - sqrt_n) * outside - two * nf,
                Relation::AtLeast,
                case_bound,
            );
            inst.push("case_b_component", inst.count(red_edges), Relation::AtLeast, case_bound);
            inst.push("conclusion", inst.count(red_edges), Relation::AtLeast, threshold);
            v1 = Some(set);
        }
        Case::C => {
            let (set, red_edges) = inst.large_red_component(n1);
            let sqrt_n = inst.sqrt_n;
            let outside = S::from_count(n - n1);
            let pairs_u1 = S::from_count(pair_count(n1));
            let induced = inst.edges_inside(&inst.in_u1);
            inst.push(
                "u1_induced_edges",
                inst.count(induced),
                Relation::AtLeast,
                pairs_u1 - two * nf,
            );
            let mut in_v1 = vec![false; n];
            for &v in &set {
                in_v1[v] = true;
            }
            let touching = eulerized
                .residual
                .iter()
                .flat_map(|g| g.edges())
                .filter(|&&(u, v)| inst.in_u1[u] && inst.in_u1[v] && (in_v1[u] || in_v1[v]))
                .count();
            inst.push(
                "u1_edges_touching_v1",
                inst.count(touching),
                Relation::AtLeast,
                pairs_u1 - three * nf,
            );
            let v1_out = inst
                .red_edges()
                .iter()
                .filter(|&&(u, v)| (in_v1[u] && !inst.in_u1[v]) || (in_v1[v] && !inst.in_u1[u]))
                .count();
            let combined = touching + v1_out;
            inst.push(
                "combined_edges",
                inst.count(combined),
                Relation::AtLeast,
                pairs_u1 + n1f * outside - sqrt_n * outside - S::lit(5.0) * nf,
            );
            inst.push(
                "combined_floor",
                pairs_u1 + n1f * outside,
                Relation::AtLeast,
                S::lit(4.0) * nf * nf / nine - nf,
            );
            let blue_edges = u1_component.edge_count;
            let richer = red_edges.max(blue_edges);
            inst.push(
                "richer_component",
                inst.count(richer),
                Relation::AtLeast,
                inst.count(combined) / two,
            );
            inst.push("conclusion", inst.count(richer), Relation::AtLeast, threshold);
            v1 = Some(set);
        }
        Case::D => {
            let red_components = components(&eulerized.residual[RED]);
            let r1 = largest_by_order(&red_components);
            let gap_floor = nf - two * inst.sqrt_n;
            inst.push(
                "red_order_hypothesis",
                S::from_count(r1.vertex_count()),
                Relation::Greater,
                gap_floor,
            );
            let met = !leaves_root_gap(n, r1.vertex_count());
            hypothesis_met = Some(met);
            if met {
                let mut in_both = vec![false; n];
                for &v in &r1.vertices {
                    in_both[v] = inst.in_u1[v];
                }
                let common = in_both.iter().filter(|&&b| b).count();
                let n32 = nf * inst.sqrt_n;
                let four = S::lit(4.0);
                inst.push(
                    "pairs_outside_intersection",
                    S::from_count(pair_count(n) - pair_count(common)),
                    Relation::AtMost,
                    four * n32,
                );
                let inside = inst.edges_inside(&in_both);
                let floor = S::from_count(pair_count(n)) - four * n32 - two * nf;
                inst.push("intersection_edges", inst.count(inside), Relation::AtLeast, floor);
                let richer = r1.edge_count.max(u1_component.edge_count);
                inst.push("richer_component", inst.count(richer), Relation::AtLeast, floor / two);
                inst.push("conclusion", inst.count(richer), Relation::AtLeast, threshold);
            } else {
                inst.push(
                    "blue_component_edges",
                    inst.count(u1_component.edge_count),
                    Relation::AtLeast,
                    threshold,
                );
            }
        }
    }

    let inequalities = inst.out;
    Ok(CaseTrace {
        diagnosis,
        u1: u1_component.vertices,
        v1,
        hypothesis_met,
        inequalities,
    })
}
