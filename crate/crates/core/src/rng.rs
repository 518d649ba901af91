//! Seeded letter streams for the Monte-Carlo routines.
//!
//! Trial `i` of a run with seed `s` draws from its own xoshiro256++ generator,
//! seeded through splitmix64 from the key `mix64(s ^ mix64(i))`. Results are
//! therefore reproducible bit for bit and independent of how trials are
//! scheduled across threads.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

/// Identifier recorded next to every Monte-Carlo estimate.
pub const RNG_ALGORITHM: &str = "xoshiro256++/splitmix64 seed, key mix64(seed ^ mix64(trial))";

/// The splitmix64 output function.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The generator for one trial.
pub fn trial_stream(seed: u64, trial: u64) -> Xoshiro256PlusPlus {
    Xoshiro256PlusPlus::seed_from_u64(mix64(seed ^ mix64(trial)))
}

/// Fair coin flips, 64 per generator output, most significant bit first.
pub struct LetterStream<R> {
    rng: R,
    bits: u64,
    left: u32,
}

impl<R: RngCore> LetterStream<R> {
    pub fn new(rng: R) -> Self {
        LetterStream {
            rng,
            bits: 0,
            left: 0,
        }
    }

    /// `true` picks `A`, `false` picks `B`.
    #[inline]
    pub fn next_is_a(&mut self) -> bool {
        if self.left == 0 {
            self.bits = self.rng.next_u64();
            self.left = 64;
        }
        let bit = self.bits >> 63;
        self.bits <<= 1;
        self.left -= 1;
        bit == 0
    }
}
