//! Random streams for Monte Carlo chunks.
//!
//! Each chunk gets its own ChaCha8 keystream: the key is derived from the
//! run seed and the 64-bit stream id is the chunk index, so the draws of a
//! chunk depend on `(seed, chunk)` only and never on scheduling.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub type Stream = ChaCha8Rng;

pub fn chunk_stream(seed: u64, chunk: u64) -> Stream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

/// Fair coin in `{-1, +1}`.
#[inline]
pub fn coin(rng: &mut impl RngCore) -> f64 {
    if rng.next_u64() >> 63 == 1 {
        1.0
    } else {
        -1.0
    }
}
