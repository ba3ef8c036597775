//! Agent state and the three per-agent steps: measure, judge, act.
//!
//! An agent's whole view of the world is a six-vector
//! `(W, J, A, J*, J+, J-)`: its own observation, judgement and action, plus
//! the judgements it last collected from its parent and its two children.
//! Judging and acting are both dot products of that vector with a fixed
//! weight vector.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const CONSERVATIVE_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct AgentState {
    /// Latest noisy observation of the world.
    pub w: f64,
    /// Latest own judgement; the only value neighbours ever read.
    pub j: f64,
    /// Latest action.
    pub a: f64,
    /// Parent judgement as collected at the last measurement.
    pub j_parent: f64,
    /// First child's judgement as collected at the last measurement.
    pub j_child_a: f64,
    /// Second child's judgement as collected at the last measurement.
    pub j_child_b: f64,
}

impl AgentState {
    /// Every field set to `c`.
    pub fn uniform(c: f64) -> Self {
        AgentState {
            w: c,
            j: c,
            a: c,
            j_parent: c,
            j_child_a: c,
            j_child_b: c,
        }
    }

    /// Fields in dot-product order `(W, J, A, J*, J+, J-)`.
    pub fn as_array(&self) -> [f64; 6] {
        [
            self.w,
            self.j,
            self.a,
            self.j_parent,
            self.j_child_a,
            self.j_child_b,
        ]
    }

    pub fn from_array(v: [f64; 6]) -> Self {
        AgentState {
            w: v[0],
            j: v[1],
            a: v[2],
            j_parent: v[3],
            j_child_a: v[4],
            j_child_b: v[5],
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_array().iter().all(|x| x.is_finite())
    }
}

/// Six weights aligned with [`AgentState::as_array`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightVector {
    weights: [f64; 6],
    conservative: bool,
    // Field with the largest weight; conservative products are evaluated
    // relative to it so that an all-equal state maps to itself exactly.
    pivot: usize,
}

impl WeightVector {
    pub fn new(weights: [f64; 6]) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(Error::invalid(format!("non-finite weight in {weights:?}")));
        }
        let sum: f64 = weights.iter().sum();
        let mut pivot = 0;
        for (k, w) in weights.iter().enumerate() {
            if *w > weights[pivot] {
                pivot = k;
            }
        }
        Ok(WeightVector {
            weights,
            conservative: (sum - 1.0).abs() <= CONSERVATIVE_TOL,
            pivot,
        })
    }

    pub fn weights(&self) -> [f64; 6] {
        self.weights
    }

    /// True when the weights sum to one (within 1e-12).
    pub fn is_conservative(&self) -> bool {
        self.conservative
    }

    /// Multiplies every weight by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if factor == 1.0 {
            return Ok(*self);
        }
        WeightVector::new(self.weights.map(|w| w * factor))
    }

    /// Dot product with the state, evaluated in fixed field order.
    ///
    /// For conservative weights this is computed as
    /// `x[p] + sum_k w[k] * (x[k] - x[p])`, which is algebraically the same
    /// sum but maps a constant vector to that constant bit-exactly.
    pub fn apply(&self, state: &AgentState) -> f64 {
        let x = state.as_array();
        if self.conservative {
            let anchor = x[self.pivot];
            let mut acc = anchor;
            for (w, v) in self.weights.iter().zip(x) {
                acc += w * (v - anchor);
            }
            acc
        } else {
            let mut acc = 0.0;
            for (w, v) in self.weights.iter().zip(x) {
                acc += w * v;
            }
            acc
        }
    }
}

/// `(1 - 3θ, 0, 0, θ, θ, θ)`: own observation blended with the three
/// collected neighbour judgements.
pub fn judgement_weights(theta: f64) -> Result<WeightVector> {
    if !theta.is_finite() {
        return Err(Error::invalid(format!("theta must be finite, got {theta}")));
    }
    WeightVector::new([1.0 - 3.0 * theta, 0.0, 0.0, theta, theta, theta])
}

/// `(0, φ, 0, 1 - φ, 0, 0)`: own judgement blended with the parent's.
pub fn action_weights(phi: f64) -> Result<WeightVector> {
    if !phi.is_finite() {
        return Err(Error::invalid(format!("phi must be finite, got {phi}")));
    }
    WeightVector::new([0.0, phi, 0.0, 1.0 - phi, 0.0, 0.0])
}

/// Measurement step: observe the world and collect neighbour judgements.
///
/// `noise` is the already-scaled additive error for this agent and draw.
/// `J` and `A` are left untouched.
pub fn step_measure(
    state: AgentState,
    world_value: f64,
    noise: f64,
    parent_j: f64,
    child_a_j: f64,
    child_b_j: f64,
) -> Result<AgentState> {
    let inputs = [world_value, noise, parent_j, child_a_j, child_b_j];
    if inputs.iter().any(|x| !x.is_finite()) {
        return Err(Error::invalid(format!(
            "non-finite measurement input {inputs:?}"
        )));
    }
    Ok(AgentState {
        w: world_value + noise,
        j_parent: parent_j,
        j_child_a: child_a_j,
        j_child_b: child_b_j,
        ..state
    })
}

/// Judgement step: `J <- ω·σ`.
pub fn step_judge(state: AgentState, sigma: &WeightVector) -> AgentState {
    AgentState {
        j: sigma.apply(&state),
        ..state
    }
}

/// Action step: `A <- ω·α`.
pub fn step_act(state: AgentState, alpha: &WeightVector) -> AgentState {
    AgentState {
        a: alpha.apply(&state),
        ..state
    }
}
