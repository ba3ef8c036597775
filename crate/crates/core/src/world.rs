//! The scalar world, measurement noise, and hammer feedback.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Golden-ratio increment of the SplitMix64 generator.
const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output finalizer.
#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One SplitMix64 step from `state`: advance by the golden gamma and mix.
#[inline]
pub fn splitmix64(state: u64) -> u64 {
    mix64(state.wrapping_add(GOLDEN_GAMMA))
}

/// Maps 64 random bits to `[-1, 1)` using the top 53 bits.
#[inline]
pub fn unit_symmetric(bits: u64) -> f64 {
    const SCALE: f64 = 1.0 / (1u64 << 52) as f64;
    (bits >> 11) as f64 * SCALE - 1.0
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WorldState {
    pub value: f64,
    pub initial_value: f64,
}

impl WorldState {
    pub fn new(value: f64) -> Self {
        WorldState {
            value,
            initial_value: value,
        }
    }

    /// Cumulative change since tick 0.
    pub fn delta(&self) -> f64 {
        self.value - self.initial_value
    }
}

/// Level-scaled uniform measurement noise, `η·ψ^level·ξ` with `ξ ~ U[-1, 1]`.
///
/// Each agent owns an independent counter-based stream, so a draw depends
/// only on `(seed, agent, counter)` and never on scheduling order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseModel {
    pub eta: f64,
    pub psi: f64,
    pub seed: u64,
}

impl NoiseModel {
    pub fn new(eta: f64, psi: f64, seed: u64) -> Result<Self> {
        if !(eta.is_finite() && eta >= 0.0) {
            return Err(Error::invalid(format!("eta must be finite and >= 0, got {eta}")));
        }
        if !(psi.is_finite() && psi > 0.0) {
            return Err(Error::invalid(format!("psi must be finite and > 0, got {psi}")));
        }
        Ok(NoiseModel { eta, psi, seed })
    }

    /// Noise half-width at `level`.
    pub fn amplitude(&self, level: u32) -> f64 {
        self.eta * self.psi.powi(level as i32)
    }

    /// Raw `ξ` for `(agent, counter)`.
    pub fn xi(&self, agent: usize, draw_counter: u64) -> f64 {
        let start = splitmix64(self.seed ^ splitmix64(agent as u64));
        let state = start.wrapping_add(draw_counter.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
        unit_symmetric(mix64(state))
    }

    pub fn sample(&self, agent: usize, level: u32, draw_counter: u64) -> f64 {
        if self.eta == 0.0 {
            return 0.0;
        }
        self.amplitude(level) * self.xi(agent, draw_counter)
    }
}

/// Free-function form of [`NoiseModel::sample`].
pub fn sample_noise(model: &NoiseModel, agent: usize, level: u32, draw_counter: u64) -> f64 {
    model.sample(agent, level, draw_counter)
}

/// One hammer blow: `W <- W + (ε/N)·(action - W)`.
pub fn apply_hammer(
    world: WorldState,
    action: f64,
    agent_count: usize,
    epsilon: f64,
) -> WorldState {
    if epsilon == 0.0 {
        return world;
    }
    let gain = epsilon / agent_count as f64;
    WorldState {
        value: world.value + gain * (action - world.value),
        ..world
    }
}
