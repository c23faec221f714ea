//! Counter-based, splittable SplitMix64 streams.
//!
//! Output `i` of a stream with key `k` is `mix64(k + (i + 1)·γ)` where `γ` is
//! the 64-bit golden-ratio increment, so any output can be computed without
//! touching the others. Child streams are keyed by `mix64(k ⊕ (id + 1)·γ)`,
//! which lets a simulation hand every trial its own stream and get the same
//! draws whatever the number of worker threads.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// The SplitMix64 finalizer.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CounterRng {
    key: u64,
    counter: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> Self {
        CounterRng {
            key: seed,
            counter: 0,
        }
    }

    /// Independent stream number `id` derived from this stream's key.
    pub fn child(&self, id: u64) -> Self {
        CounterRng {
            key: mix64(self.key ^ id.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)),
            counter: 0,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix64(
            self.key
                .wrapping_add(self.counter.wrapping_mul(GOLDEN_GAMMA)),
        )
    }

    /// Uniform on the open interval `(0, 1)` with 53 bits of resolution.
    pub fn next_open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }
}
