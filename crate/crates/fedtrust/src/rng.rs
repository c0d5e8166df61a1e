//! Deterministic random-stream derivation.
//!
//! Every source of randomness in a run is a ChaCha stream derived from the
//! master seed, a purpose label and integer indices (round, agent id, ...).
//! Streams for different purposes never share state, so adding or removing
//! a consumer (e.g. the trust subsystem) cannot shift the randomness seen by
//! another, and serial and parallel execution draw identical values.

use rand_chacha::ChaCha12Rng;
use rand::SeedableRng;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(mut hash: u64, bytes: &[u8]) -> u64 {
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(FNV_PRIME);
    }
    hash
}

/// Derive an independent ChaCha stream from `(master, label, indices)`.
pub fn stream(master: u64, label: &str, indices: &[u64]) -> ChaCha12Rng {
    let mut hash = fnv1a(FNV_OFFSET, &master.to_le_bytes());
    hash = fnv1a(hash, label.as_bytes());
    for &ix in indices {
        hash = fnv1a(hash, &ix.to_le_bytes());
    }
    ChaCha12Rng::seed_from_u64(hash)
}

/// Purpose labels used throughout the simulator.
pub mod labels {
    pub const INIT: &str = "init";
    pub const CENTERS: &str = "centers";
    pub const SAMPLES: &str = "samples";
    pub const HOLDOUT: &str = "holdout";
    pub const PARTITION: &str = "partition";
    pub const CORRUPT: &str = "corrupt";
    pub const SELECT: &str = "select";
    pub const TRAIN: &str = "train";
    pub const POISON: &str = "poison";
    pub const TOPOLOGY: &str = "topology";
}
