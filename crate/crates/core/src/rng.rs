//! Deterministic seed derivation. Every randomized task gets its own
//! sub-seed from a master seed plus a path of indices, so sweeps produce
//! identical results regardless of evaluation order or parallelism.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer; good avalanche, cheap, stable across platforms.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derive a sub-seed from `master` and a path such as `[grid_index, trial]`.
pub fn derive_seed(master: u64, path: &[u64]) -> u64 {
    let mut s = splitmix64(master);
    for &p in path {
        s = splitmix64(s ^ p.wrapping_mul(0x2545_f491_4f6c_dd1d));
    }
    s
}

/// Deterministic generator for a derived seed.
pub fn rng_for(master: u64, path: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, path))
}
