//! Parity-correcting forests: delete an acyclic edge set from each color
//! class so that every vertex is left with even degree.

use std::collections::VecDeque;

use crate::coloring::{color_class, ColorClassGraph, EdgeColoring};

/// Acyclic edge set whose removal leaves every vertex of a color class with
/// even degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityForest {
    pub color: usize,
    /// Normalized `(u, v)`, `u < v`, ascending.
    pub edges: Vec<(usize, usize)>,
}

impl ParityForest {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Computes the parity forest of `g`.
///
/// Each component gets a breadth-first tree rooted at its smallest vertex,
/// neighbors visited in ascending order. Non-root vertices are then processed
/// in reverse discovery order; the edge to the parent is selected exactly
/// when the vertex's class degree minus its selected forest degree is odd.
/// Since every component has an even number of odd vertices, the root ends
/// up balanced as well.
pub fn parity_forest(g: &ColorClassGraph) -> ParityForest {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] || g.degree(root) == 0 {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut forest_degree = vec![0usize; n];
    let mut edges = Vec::new();
    for &v in order.iter().rev() {
        let p = parent[v];
        if p == usize::MAX {
            continue;
        }
        if (g.degree(v) - forest_degree[v]) % 2 == 1 {
            forest_degree[v] += 1;
            forest_degree[p] += 1;
            edges.push(if v < p { (v, p) } else { (p, v) });
        }
    }
    edges.sort_unstable();
    ParityForest {
        color: g.color(),
        edges,
    }
}

/// A coloring together with its per-color parity forests and even residual
/// classes.
#[derive(Clone, Debug)]
pub struct EulerizedColoring {
    pub base: EdgeColoring,
    pub residual: Vec<ColorClassGraph>,
    pub forests: Vec<ParityForest>,
}

impl EulerizedColoring {
    pub fn removed_edges(&self) -> usize {
        self.forests.iter().map(ParityForest::len).sum()
    }

    pub fn forest_sizes(&self) -> Vec<usize> {
        self.forests.iter().map(ParityForest::len).collect()
    }
}

/// Applies [`parity_forest`] to every color class.
pub fn eulerize(coloring: &EdgeColoring) -> EulerizedColoring {
    let (residual, forests) = (0..coloring.k())
        .map(|color| {
            let class = color_class(coloring, color).expect("color < k");
            let forest = parity_forest(&class);
            (class.without_edges(&forest.edges), forest)
        })
        .unzip();
    EulerizedColoring {
        base: coloring.clone(),
        residual,
        forests,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{components, degree_parity};

    fn graph(n: usize, edges: &[(usize, usize)]) -> ColorClassGraph {
        ColorClassGraph::from_edges(n, 0, edges.iter().copied()).unwrap()
    }

    fn complete(n: usize) -> ColorClassGraph {
        graph(n, &crate::coloring::pairs(n).collect::<Vec<_>>())
    }

    /// Every subset of the edges whose removal leaves all degrees even.
    fn even_residual_subsets(g: &ColorClassGraph) -> Vec<Vec<(usize, usize)>> {
        let m = g.edge_count();
        (0u32..1 << m)
            .map(|mask| {
                (0..m)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| g.edges()[i])
                    .collect::<Vec<_>>()
            })
            .filter(|subset| degree_parity(&g.without_edges(subset)).all_even())
            .collect()
    }

    #[test]
    fn even_cycle_needs_nothing() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(parity_forest(&c4).is_empty());
    }

    #[test]
    fn path_uses_both_edges() {
        let path = graph(3, &[(0, 1), (1, 2)]);
        let oracle = even_residual_subsets(&path);
        // the empty set is excluded (endpoints odd), only the full set remains
        assert_eq!(oracle, vec![vec![(0, 1), (1, 2)]]);
        assert_eq!(parity_forest(&path).edges, vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn k4_gives_star_at_smallest_vertex() {
        let k4 = complete(4);
        let forest = parity_forest(&k4);
        assert_eq!(forest.edges, vec![(0, 1), (0, 2), (0, 3)]);
        assert!(even_residual_subsets(&k4).contains(&forest.edges));
        let residual = k4.without_edges(&forest.edges);
        assert_eq!(residual.edges(), &[(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn k_3_6_removes_star_of_six() {
        // vertices 0..3 on one side, 3..9 on the other
        let edges: Vec<_> = (0..3).flat_map(|a| (3..9).map(move |b| (a, b))).collect();
        let forest = parity_forest(&graph(9, &edges));
        assert_eq!(forest.edges, (3..9).map(|b| (0, b)).collect::<Vec<_>>());
    }

    #[test]
    fn forest_respects_component_bound() {
        let g = graph(
            10,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (5, 6), (6, 7), (7, 8), (8, 9)],
        );
        let forest = parity_forest(&g);
        let nontrivial = components(&g).iter().filter(|c| c.edge_count > 0).count();
        let touched = (0..10).filter(|&v| g.degree(v) > 0).count();
        assert!(forest.len() <= touched - nontrivial);
        assert!(degree_parity(&g.without_edges(&forest.edges)).all_even());
    }

    #[test]
    fn eulerize_all_red_k5_removes_nothing() {
        let c = EdgeColoring::from_fn(5, 2, |_, _| 0).unwrap();
        let e = eulerize(&c);
        assert_eq!(e.removed_edges(), 0);
        assert_eq!(e.residual[0].edge_count(), 10);
    }

    #[test]
    fn eulerize_all_red_k4_leaves_triangle() {
        let c = EdgeColoring::from_fn(4, 2, |_, _| 0).unwrap();
        let e = eulerize(&c);
        assert_eq!(e.forest_sizes(), vec![3, 0]);
        assert_eq!(e.residual[0].edge_count(), 3);
    }
}
