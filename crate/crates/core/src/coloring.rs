//! Edge-colored complete graphs, their color classes and monochromatic
//! components.

use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};

/// Largest supported number of colors (colors are stored as `u16`).
pub const MAX_COLORS: usize = u16::MAX as usize + 1;

/// Number of unordered pairs of an `n`-vertex set.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Rank of the pair `{u, v}` (`u < v`) in ascending `(u, v)` order.
#[inline]
pub fn pair_rank(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Orders a pair so that the smaller id comes first.
#[inline]
pub fn normalize(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Iterates all pairs `(u, v)`, `u < v < n`, in ascending order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> + Clone {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// A k-coloring of the edges of the complete graph `K_n`.
///
/// Colors live in a dense array indexed by [`pair_rank`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    k: usize,
    colors: Vec<u16>,
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EdgeColoring")
            .field("n", &self.n)
            .field("k", &self.k)
            .finish_non_exhaustive()
    }
}

impl EdgeColoring {
    /// Builds a coloring from explicit `(u, v, color)` triples.
    ///
    /// Every pair must appear exactly once (in either orientation).
    pub fn new<I>(n: usize, k: usize, assignment: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        check_params(n, k)?;
        let mut colors: Vec<Option<u16>> = vec![None; pair_count(n)];
        for (a, b, color) in assignment {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::BadVertex { vertex, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            if color >= k {
                return Err(Error::ColorOutOfRange { color, k });
            }
            let (u, v) = normalize(a, b);
            let slot = &mut colors[pair_rank(n, u, v)];
            if slot.is_some() {
                return Err(Error::DuplicateEdge { u, v });
            }
            *slot = Some(color as u16);
        }
        let colors = pairs(n)
            .zip(colors)
            .map(|((u, v), c)| c.ok_or(Error::MissingEdge { u, v }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, k, colors })
    }

    /// Builds a coloring from a total function on pairs `u < v`.
    pub fn from_fn<F>(n: usize, k: usize, mut color_of: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> usize,
    {
        check_params(n, k)?;
        let colors = pairs(n)
            .map(|(u, v)| {
                let color = color_of(u, v);
                if color >= k {
                    Err(Error::ColorOutOfRange { color, k })
                } else {
                    Ok(color as u16)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, k, colors })
    }

    /// Builds a coloring from colors listed in ascending pair order.
    pub fn from_ranked(n: usize, k: usize, colors: Vec<u16>) -> Result<Self> {
        check_params(n, k)?;
        if colors.len() != pair_count(n) {
            let (u, v) = pairs(n)
                .nth(colors.len().min(pair_count(n)))
                .unwrap_or((0, 0));
            return Err(Error::MissingEdge { u, v });
        }
        if let Some(&bad) = colors.iter().find(|&&c| c as usize >= k) {
            return Err(Error::ColorOutOfRange {
                color: bad as usize,
                k,
            });
        }
        Ok(Self { n, k, colors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Color of the edge `{u, v}`. Panics if `u == v` or either is out of range.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> usize {
        assert!(u != v, "no edge at a single vertex {u}");
        let (u, v) = normalize(u, v);
        assert!(v < self.n, "vertex {v} out of range");
        self.colors[pair_rank(self.n, u, v)] as usize
    }

    /// Colors in ascending pair order.
    pub fn ranked_colors(&self) -> &[u16] {
        &self.colors
    }

    /// `(u, v, color)` for every pair, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + Clone + '_ {
        pairs(self.n)
            .zip(self.colors.iter())
            .map(|((u, v), &c)| (u, v, c as usize))
    }

    /// Number of edges of each color.
    pub fn color_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.k];
        for &c in &self.colors {
            counts[c as usize] += 1;
        }
        counts
    }

    /// Returns the same coloring with colors `a` and `b` exchanged.
    pub fn swap_colors(&self, a: usize, b: usize) -> Self {
        let (a, b) = (a as u16, b as u16);
        let colors = self
            .colors
            .iter()
            .map(|&c| match c {
                c if c == a => b,
                c if c == b => a,
                c => c,
            })
            .collect();
        Self {
            colors,
            ..self.clone()
        }
    }
}

fn check_params(n: usize, k: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::BadN { n, min: 1 });
    }
    if k < 1 {
        return Err(Error::BadK { k, min: 1 });
    }
    if k > MAX_COLORS {
        return Err(Error::TooLarge {
            size: k,
            limit: MAX_COLORS,
        });
    }
    Ok(())
}

/// The simple graph formed by the edges of one color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorClassGraph {
    n: usize,
    color: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl ColorClassGraph {
    /// Builds a graph on `n` vertices from an edge list; rejects loops and
    /// duplicate edges.
    pub fn from_edges<I>(n: usize, color: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::BadVertex { vertex, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            list.push(normalize(a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }
        Ok(Self::from_sorted(n, color, list))
    }

    fn from_sorted(n: usize, color: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self {
            n,
            color,
            edges,
            adjacency,
        }
    }

    /// Number of vertices of the host `K_n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn color(&self) -> usize {
        self.color
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// The graph with `removed` edges deleted. Edges not present are ignored.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Self {
        let mut removed: Vec<(usize, usize)> =
            removed.iter().map(|&(u, v)| normalize(u, v)).collect();
        removed.sort_unstable();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| removed.binary_search(e).is_err())
            .collect();
        Self::from_sorted(self.n, self.color, edges)
    }

    /// Subgraph induced by the vertices for which `keep` is true.
    pub fn induced(&self, keep: &[bool]) -> Self {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| keep[u] && keep[v])
            .collect();
        Self::from_sorted(self.n, self.color, edges)
    }
}

/// Returns the class of one color as a graph.
pub fn color_class(coloring: &EdgeColoring, color: usize) -> Result<ColorClassGraph> {
    if color >= coloring.k() {
        return Err(Error::ColorOutOfRange {
            color,
            k: coloring.k(),
        });
    }
    let edges = coloring
        .edges()
        .filter(|&(_, _, c)| c == color)
        .map(|(u, v, _)| (u, v))
        .collect();
    Ok(ColorClassGraph::from_sorted(coloring.n(), color, edges))
}

/// A maximal connected vertex set of a color class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub color: usize,
    /// Sorted ascending.
    pub vertices: Vec<usize>,
    pub edge_count: usize,
}

impl Component {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn min_vertex(&self) -> usize {
        self.vertices[0]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Sort key: edge count descending, vertex count descending, smallest id
/// ascending.
fn component_order(a: &Component, b: &Component) -> std::cmp::Ordering {
    b.edge_count
        .cmp(&a.edge_count)
        .then(b.vertex_count().cmp(&a.vertex_count()))
        .then(a.min_vertex().cmp(&b.min_vertex()))
}

fn collect_components<I>(n: usize, color: usize, edges: I) -> Vec<Component>
where
    I: Iterator<Item = (usize, usize)> + Clone,
{
    let mut sets = UnionFind::<usize>::new(n);
    for (u, v) in edges.clone() {
        sets.union(u, v);
    }
    let mut by_root: BTreeMap<usize, Component> = BTreeMap::new();
    for v in 0..n {
        by_root
            .entry(sets.find_mut(v))
            .or_insert_with(|| Component {
                color,
                vertices: Vec::new(),
                edge_count: 0,
            })
            .vertices
            .push(v);
    }
    for (u, _) in edges {
        if let Some(c) = by_root.get_mut(&sets.find_mut(u)) {
            c.edge_count += 1;
        }
    }
    let mut components: Vec<Component> = by_root.into_values().collect();
    components.sort_by(component_order);
    components
}

/// Connected components of a color class (isolated vertices included), in
/// deterministic order: edges desc, vertices desc, smallest vertex asc.
pub fn components(g: &ColorClassGraph) -> Vec<Component> {
    collect_components(g.n(), g.color(), g.edges().iter().copied())
}

/// Per-vertex degree parity of a color class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeParity {
    /// `true` where the degree is odd.
    pub odd: Vec<bool>,
}

impl DegreeParity {
    pub fn is_odd(&self, v: usize) -> bool {
        self.odd[v]
    }

    pub fn odd_vertices(&self) -> Vec<usize> {
        (0..self.odd.len()).filter(|&v| self.odd[v]).collect()
    }

    pub fn all_even(&self) -> bool {
        !self.odd.iter().any(|&o| o)
    }
}

pub fn degree_parity(g: &ColorClassGraph) -> DegreeParity {
    DegreeParity {
        odd: (0..g.n()).map(|v| g.degree(v) % 2 == 1).collect(),
    }
}

/// Largest monochromatic component edge counts of a coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentMaxima {
    /// Maximum component edge count of each color.
    pub per_color: Vec<usize>,
    /// Maximum over all colors.
    pub global: usize,
    /// First component attaining `global`: lowest color, then component order.
    pub witness: Component,
}

/// Components of every color class, computed in one pass over the pairs.
pub fn all_components(coloring: &EdgeColoring) -> Vec<Vec<Component>> {
    let n = coloring.n();
    (0..coloring.k())
        .map(|color| {
            let edges = coloring
                .edges()
                .filter(move |&(_, _, c)| c == color)
                .map(|(u, v, _)| (u, v));
            collect_components(n, color, edges)
        })
        .collect()
}

pub fn max_component_edges(coloring: &EdgeColoring) -> ComponentMaxima {
    let per_color_components = all_components(coloring);
    let per_color: Vec<usize> = per_color_components
        .iter()
        .map(|cs| cs[0].edge_count)
        .collect();
    let global = per_color.iter().copied().max().unwrap_or(0);
    let witness = per_color_components
        .into_iter()
        .find(|cs| cs[0].edge_count == global)
        .and_then(|cs| cs.into_iter().next())
        .expect("n >= 1 gives every color at least one component");
    ComponentMaxima {
        per_color,
        global,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn constant(n: usize, k: usize, color: usize) -> EdgeColoring {
        EdgeColoring::from_fn(n, k, |_, _| color).unwrap()
    }

    #[test]
    fn pair_rank_is_ascending_enumeration() {
        for n in 1..12 {
            for (i, (u, v)) in pairs(n).enumerate() {
                assert_eq!(pair_rank(n, u, v), i);
            }
            assert_eq!(pairs(n).count(), pair_count(n));
        }
    }

    #[test]
    fn new_coloring_constant() {
        let c = EdgeColoring::new(3, 2, [(0, 1, 0), (0, 2, 0), (2, 1, 0)]).unwrap();
        assert_eq!(c.color_counts(), vec![3, 0]);
        assert_eq!(c.color(1, 2), 0);
    }

    #[test]
    fn new_coloring_single_vertex() {
        let c = EdgeColoring::new(1, 2, []).unwrap();
        assert_eq!(c.color_counts(), vec![0, 0]);
    }

    #[test]
    fn new_coloring_rejects_bad_input() {
        assert_eq!(
            EdgeColoring::new(3, 2, [(0, 1, 0), (0, 2, 1)]),
            Err(Error::MissingEdge { u: 1, v: 2 })
        );
        assert_eq!(
            EdgeColoring::new(3, 2, [(0, 1, 0), (0, 2, 2), (1, 2, 0)]),
            Err(Error::ColorOutOfRange { color: 2, k: 2 })
        );
        assert_eq!(
            EdgeColoring::new(3, 2, [(0, 1, 0), (1, 0, 1)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        );
        assert!(matches!(
            EdgeColoring::new(0, 2, []),
            Err(Error::BadN { .. })
        ));
        assert!(matches!(
            EdgeColoring::new(2, 0, []),
            Err(Error::BadK { .. })
        ));
    }

    #[test]
    fn color_class_of_complete_and_empty() {
        let c = constant(4, 2, 0);
        let red = color_class(&c, 0).unwrap();
        assert_eq!(red.edge_count(), 6);
        assert!(red.degrees().iter().all(|&d| d == 3));
        let blue = color_class(&c, 1).unwrap();
        assert_eq!(blue.edge_count(), 0);
        assert!(blue.degrees().iter().all(|&d| d == 0));
        assert!(matches!(
            color_class(&c, 2),
            Err(Error::ColorOutOfRange { .. })
        ));
    }

    #[test]
    fn components_of_complete_and_empty() {
        let red = color_class(&constant(4, 2, 0), 0).unwrap();
        let cs = components(&red);
        assert_eq!(cs.len(), 1);
        assert_eq!((cs[0].vertex_count(), cs[0].edge_count), (4, 6));

        let empty = ColorClassGraph::from_edges(5, 0, []).unwrap();
        let cs = components(&empty);
        assert_eq!(cs.len(), 5);
        assert!(cs.iter().all(|c| c.vertex_count() == 1 && c.edge_count == 0));
        assert_eq!(
            cs.iter().map(Component::min_vertex).collect::<Vec<_>>(),
            vec![0, 1, 2, 3, 4]
        );
    }

    #[test]
    fn component_order_breaks_ties() {
        // triangle {3,4,5}, path 0-1-2 plus 6-7 and a 3-edge star at 8
        let g = ColorClassGraph::from_edges(
            12,
            0,
            [(3, 4), (4, 5), (3, 5), (0, 1), (1, 2), (6, 7), (8, 9), (8, 10), (8, 11)],
        )
        .unwrap();
        let cs = components(&g);
        let keys: Vec<_> = cs
            .iter()
            .map(|c| (c.edge_count, c.vertex_count(), c.min_vertex()))
            .collect();
        assert_eq!(keys, vec![(3, 4, 8), (3, 3, 3), (2, 3, 0), (1, 2, 6)]);
    }

    #[test]
    fn degree_parity_examples() {
        let c4 = ColorClassGraph::from_edges(4, 0, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(degree_parity(&c4).all_even());
        let k4 = color_class(&constant(4, 1, 0), 0).unwrap();
        assert_eq!(degree_parity(&k4).odd_vertices(), vec![0, 1, 2, 3]);
        let path = ColorClassGraph::from_edges(3, 0, [(0, 1), (1, 2)]).unwrap();
        let p = degree_parity(&path);
        assert_eq!(p.odd_vertices(), vec![0, 2]);
        assert!(!p.is_odd(1));
    }

    #[test]
    fn from_edges_rejects_loops_and_duplicates() {
        assert_eq!(
            ColorClassGraph::from_edges(3, 0, [(1, 1)]),
            Err(Error::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            ColorClassGraph::from_edges(3, 0, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            ColorClassGraph::from_edges(3, 0, [(0, 3)]),
            Err(Error::BadVertex { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn max_component_edges_all_red() {
        let m = max_component_edges(&constant(5, 2, 0));
        assert_eq!(m.global, 10);
        assert_eq!(m.per_color, vec![10, 0]);
        assert_eq!(m.witness.color, 0);
    }

    #[test]
    fn tiny_n_is_legal() {
        for n in [1, 2] {
            let c = constant(n, 2, 1);
            let m = max_component_edges(&c);
            assert_eq!(m.global, pair_count(n));
            let blue = color_class(&c, 1).unwrap();
            assert_eq!(components(&blue).len(), 1);
        }
    }

    #[test]
    fn swap_colors_exchanges_classes() {
        let c = EdgeColoring::from_fn(6, 3, |u, v| (u + v) % 3).unwrap();
        let s = c.swap_colors(0, 2);
        for (u, v, col) in c.edges() {
            assert_eq!(s.color(u, v), [2, 1, 0][col]);
        }
    }
}
