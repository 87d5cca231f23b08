//! Deterministic pseudo-random streams.
//!
//! All randomness flows from one seed; each check derives its own substream
//! by hashing its id, so adding a check never perturbs the samples another
//! check sees. A hand-rolled SplitMix64 keeps the byte stream stable across
//! platforms and dependency upgrades.

use crate::scalar::Cplx;

#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    /// Substream for a named check under a global seed.
    pub fn for_check(global_seed: u64, check_id: &str) -> Self {
        Rng::new(global_seed ^ fnv1a(check_id.as_bytes()))
    }

    pub fn next_u64(&mut self) -> u64 {
        // SplitMix64
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.f64()
    }

    /// Complex number with both parts uniform in [lo, hi).
    pub fn cplx(&mut self, lo: f64, hi: f64) -> Cplx {
        Cplx::new(self.range(lo, hi), self.range(lo, hi))
    }

    /// Standard normal via Box-Muller.
    pub fn normal(&mut self) -> f64 {
        let u1 = self.f64().max(1e-300);
        let u2 = self.f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    /// Complex number with independent standard-normal parts.
    pub fn cplx_normal(&mut self) -> Cplx {
        Cplx::new(self.normal(), self.normal())
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xCBF2_9CE4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}
