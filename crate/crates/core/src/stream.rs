//! Seeded random streams. ChaCha8 gives 2^64 independent streams per seed,
//! which is the splittable counter scheme the Monte Carlo study uses for
//! per-replication reproducibility under parallel execution.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The random stream type used throughout the crate. Each stream is owned by
/// exactly one logical task at a time.
pub type RandomStream = ChaCha8Rng;

/// Stream for a master seed (stream index 0).
pub fn master_stream(seed: u64) -> RandomStream {
    substream(seed, 0)
}

/// Independent substream `index` of the master seed.
pub fn substream(seed: u64, index: u64) -> RandomStream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
