use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

/// splitmix64 generator; the state is the seed and advances by
/// `0x9E3779B97F4A7C15` per output.
#[derive(Clone, Debug)]
pub struct PrngState(SplitMix64);

impl PrngState {
    pub fn new(seed: u64) -> Self {
        Self(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }
}
