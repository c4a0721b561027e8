use super::field::PrimeField;
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

/// Affine plane of prime order `q` with every point blown up to `m`
/// vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffinePlaneParams {
    pub q: usize,
    pub m: usize,
}

impl AffinePlaneParams {
    pub fn new(q: usize, m: usize) -> Result<Self> {
        let p = Self { q, m };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if self.m < 1 {
            return Err(Error::BadM);
        }
        PrimeField::new(self.q).map(|_| ())
    }

    /// `q² m` vertices.
    pub fn n(&self) -> usize {
        self.q * self.q * self.m
    }

    /// One color per parallel class: `q + 1`.
    pub fn k(&self) -> usize {
        self.q + 1
    }
}

/// Colors `K_{q²m}` by the parallel classes of `AG(2, q)`.
///
/// Vertex `i` sits on point `⌊i/m⌋`, points indexed row-major as
/// `x·q + y`. An edge between different points takes the class of the line
/// through them: slope `s = Δy/Δx` gives color `s`, vertical lines color `q`.
/// Edges inside a blob take color 0.
pub fn affine_plane_coloring(params: AffinePlaneParams) -> Result<EdgeColoring> {
    params.validate()?;
    let AffinePlaneParams { q, m } = params;
    let field = PrimeField::new(q)?;
    let point = |v: usize| {
        let p = v / m;
        (p / q, p % q)
    };
    EdgeColoring::from_fn(params.n(), params.k(), |u, v| {
        let ((x1, y1), (x2, y2)) = (point(u), point(v));
        if (x1, y1) == (x2, y2) {
            return 0;
        }
        let dx = field.sub(x2, x1);
        let dy = field.sub(y2, y1);
        match field.inv(dx) {
            Some(inv) => field.mul(dy, inv),
            None => q,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{all_components, color_class, max_component_edges};

    #[test]
    fn q2_m1_is_three_perfect_matchings() {
        let c = affine_plane_coloring(AffinePlaneParams::new(2, 1).unwrap()).unwrap();
        assert_eq!((c.n(), c.k()), (4, 3));
        for color in 0..3 {
            let g = color_class(&c, color).unwrap();
            assert_eq!(g.edge_count(), 2);
            assert!(g.degrees().iter().all(|&d| d == 1));
        }
        for comps in all_components(&c) {
            assert!(comps.iter().all(|comp| comp.vertex_count() == 2));
        }
    }

    #[test]
    fn q3_m1_is_disjoint_triangles() {
        let c = affine_plane_coloring(AffinePlaneParams::new(3, 1).unwrap()).unwrap();
        assert_eq!((c.n(), c.k()), (9, 4));
        for comps in all_components(&c) {
            assert_eq!(comps.len(), 3);
            assert!(comps.iter().all(|x| x.vertex_count() == 3 && x.edge_count == 3));
        }
    }

    #[test]
    fn q2_m2_components() {
        let c = affine_plane_coloring(AffinePlaneParams::new(2, 2).unwrap()).unwrap();
        assert_eq!((c.n(), c.k()), (8, 3));
        let per_color = all_components(&c);
        for comps in &per_color {
            assert!(comps.iter().all(|x| x.vertex_count() == 4));
        }
        // color 0 also carries the blob edges: two K_4's
        let m = max_component_edges(&c);
        assert_eq!(m.global, 6);
        assert_eq!(m.per_color, vec![6, 4, 4]);
    }

    #[test]
    fn rejects_bad_params() {
        assert_eq!(AffinePlaneParams::new(4, 1), Err(Error::NotPrime { value: 4 }));
        assert_eq!(AffinePlaneParams::new(3, 0), Err(Error::BadM));
        assert_eq!(
            affine_plane_coloring(AffinePlaneParams { q: 6, m: 1 }),
            Err(Error::NotPrime { value: 6 })
        );
    }
}
