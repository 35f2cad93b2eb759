//! Seeded random sources.
//!
//! Every randomized routine takes an explicit `u64` seed. Independent
//! substreams are obtained by selecting a ChaCha stream id, so task `i` of a
//! sweep can draw from `stream(seed, i)` without coordinating with its
//! siblings.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn stream(seed: u64, index: u64) -> Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Derives a child seed; used when a seed must be handed to an API that
/// builds its own generator.
pub fn child_seed(seed: u64, index: u64) -> u64 {
    use rand::RngCore;
    stream(seed, index.wrapping_add(1)).next_u64()
}
