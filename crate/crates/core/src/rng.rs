//! Seeded 64-bit PRNG used by the census sampler.
//!
//! The generator is SplitMix64 and is part of the external contract: reports
//! produced from a given seed must be bit-identical across implementations.
//! The state walks by a fixed increment per draw, so a stream can be
//! fast-forwarded in O(1), which is what makes sharded sampling deterministic.

pub const SPLITMIX64_INCREMENT: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, Copy)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Stream seeded with `seed` after `steps` draws have been consumed.
    pub fn advanced(seed: u64, steps: u64) -> Self {
        SplitMix64 {
            state: seed.wrapping_add(steps.wrapping_mul(SPLITMIX64_INCREMENT)),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(SPLITMIX64_INCREMENT);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `0..bound` by modulo reduction (the reduction is part
    /// of the documented contract; the bias at census-sized bounds is
    /// negligible and, more importantly, reproducible).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}
