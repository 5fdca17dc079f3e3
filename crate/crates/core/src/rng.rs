//! Seeding and reproducible random streams.
//!
//! Every randomised routine in this crate draws from a ChaCha8 stream seeded
//! with a 64-bit value, so identical seeds give bit-identical results on any
//! platform. Derived seeds (benchmark tasks, per-offspring streams) come from
//! FNV-1a over a printable key, so adding new task kinds never reshuffles
//! existing streams.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A 64-bit seed for any of the crate's randomised routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

impl Seed {
    /// The deterministic generator behind this seed.
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Derive a child seed from a textual key, e.g. `"n=30|p=0.5|trial=4"`.
    pub fn derive(self, key: &str) -> Seed {
        let mut h = fnv1a64(key.as_bytes());
        h ^= self.0;
        // one splitmix64 round so nearby keys land far apart
        h = h.wrapping_add(0x9e37_79b9_7f4a_7c15);
        h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        Seed(h ^ (h >> 31))
    }
}

impl From<u64> for Seed {
    fn from(value: u64) -> Self {
        Seed(value)
    }
}

/// FNV-1a over raw bytes; the documented hash for seed derivation.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}
