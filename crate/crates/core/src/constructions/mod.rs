//! Colorings used as test corpus: the tight two-color split, affine-plane
//! colorings and seeded random colorings.

mod affine;
mod field;
mod prng;

pub use affine::{affine_plane_coloring, AffinePlaneParams};
pub use field::PrimeField;
pub use prng::PrngState;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

/// Blue cliques on `[0, ⌊n/3⌋)` and the remaining vertices, red complete
/// bipartite graph between them. Red is color 0, blue color 1.
pub fn extremal_bipartite_split(n: usize) -> Result<EdgeColoring> {
    if n < 2 {
        return Err(Error::BadN { n, min: 2 });
    }
    let split = n / 3;
    EdgeColoring::from_fn(n, 2, |u, v| usize::from((u < split) == (v < split)))
}

/// Colors drawn from a splitmix64 stream, one output per pair in ascending
/// `(u, v)` order, reduced mod `k`.
pub fn random_coloring(n: usize, k: usize, seed: u64) -> Result<EdgeColoring> {
    let mut rng = PrngState::new(seed);
    EdgeColoring::from_fn(n, k, |_, _| (rng.next_u64() % k as u64) as usize)
}
