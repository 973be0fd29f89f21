//! Seeded random streams. Every consumer draws from its own stream keyed by
//! a purpose tag, so results do not depend on the order of computations.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn stream(seed: u64, purpose: &str, key: u64) -> ChaCha8Rng {
    // FNV-1a over the tag and key.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in purpose.bytes().chain(key.to_le_bytes()) {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(h);
    rng
}
