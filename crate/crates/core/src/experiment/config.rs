//! Flat `key = value` run configuration.
//!
//! ```text
//! # four-level tree, hammer on
//! levels = 4
//! epsilon = 2e-3
//! ```
//!
//! Keys are exactly the [`SimConfig`] field names. Missing keys take their
//! defaults, unknown or repeated keys are rejected, and `#` starts a comment.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dynamics::{action_weights, judgement_weights};
use crate::error::{Error, Result};
use crate::scheduler::{ModelParams, ScheduleConfig, Simulation};
use crate::topology::MAX_LEVELS;
use crate::world::NoiseModel;

/// What kind of world the agents live in. Only a fixed scalar world (which
/// may still be moved by hammer blows) exists today; the tag keeps room in
/// the file format for others.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WorldKind {
    #[default]
    Scalar,
}

impl FromStr for WorldKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "scalar" => Ok(WorldKind::Scalar),
            other => Err(format!("unsupported world kind `{other}` (expected `scalar`)")),
        }
    }
}

impl fmt::Display for WorldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WorldKind::Scalar => f.write_str("scalar"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub levels: u32,
    pub theta: f64,
    pub phi: f64,
    pub sigma_scale: f64,
    pub alpha_scale: f64,
    pub eta: f64,
    pub psi: f64,
    pub epsilon: f64,
    pub ratio: u32,
    pub seed: u64,
    pub world0: f64,
    /// `None` means ten full top-level cycles, `10 * ratio^levels`.
    pub max_ticks: Option<u64>,
    pub record_every: u64,
    pub world_kind: WorldKind,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            levels: 4,
            theta: 0.1,
            phi: 0.2,
            sigma_scale: 1.0,
            alpha_scale: 1.0,
            eta: 1e-3,
            psi: std::f64::consts::SQRT_2,
            epsilon: 0.0,
            ratio: 3,
            seed: 0,
            world0: 3.0,
            max_ticks: None,
            record_every: 1,
            world_kind: WorldKind::Scalar,
        }
    }
}

/// Every recognised key, in document order.
pub const KEYS: [&str; 14] = [
    "levels",
    "theta",
    "phi",
    "sigma_scale",
    "alpha_scale",
    "eta",
    "psi",
    "epsilon",
    "ratio",
    "seed",
    "world0",
    "max_ticks",
    "record_every",
    "world_kind",
];

fn parse_real(key: &str, value: &str) -> Result<f64> {
    let v: f64 = value
        .parse()
        .map_err(|_| Error::validation(key, format!("`{value}` is not a number")))?;
    if !v.is_finite() {
        return Err(Error::validation(key, "must be finite"));
    }
    Ok(v)
}

fn parse_uint<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::validation(key, format!("`{value}` is not a non-negative integer")))
}

impl SimConfig {
    /// Sets one field from its textual value. Does not run [`validate`].
    ///
    /// [`validate`]: SimConfig::validate
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        match key {
            "levels" => self.levels = parse_uint(key, value)?,
            "theta" => self.theta = parse_real(key, value)?,
            "phi" => self.phi = parse_real(key, value)?,
            "sigma_scale" => self.sigma_scale = parse_real(key, value)?,
            "alpha_scale" => self.alpha_scale = parse_real(key, value)?,
            "eta" => self.eta = parse_real(key, value)?,
            "psi" => self.psi = parse_real(key, value)?,
            "epsilon" => self.epsilon = parse_real(key, value)?,
            "ratio" => self.ratio = parse_uint(key, value)?,
            "seed" => self.seed = parse_uint(key, value)?,
            "world0" => self.world0 = parse_real(key, value)?,
            "max_ticks" => self.max_ticks = Some(parse_uint(key, value)?),
            "record_every" => self.record_every = parse_uint(key, value)?,
            "world_kind" => {
                self.world_kind = value.parse().map_err(|e| Error::validation(key, e))?
            }
            other => return Err(Error::validation(other, "unknown key")),
        }
        Ok(())
    }

    /// Sets a numeric field from a real value; integer fields require an
    /// exactly integral, non-negative value.
    pub fn set_numeric(&mut self, key: &str, value: f64) -> Result<()> {
        if !value.is_finite() {
            return Err(Error::invalid(format!("value for `{key}` must be finite")));
        }
        match key {
            "levels" | "ratio" | "seed" | "max_ticks" | "record_every" => {
                if value < 0.0 || value.fract() != 0.0 || value > u64::MAX as f64 {
                    return Err(Error::invalid(format!(
                        "`{key}` needs a non-negative integer, got {value}"
                    )));
                }
                self.set(key, &format!("{}", value as u64))
            }
            "world_kind" => Err(Error::invalid("`world_kind` is not numeric")),
            _ if KEYS.contains(&key) => self.set(key, &format!("{value:?}")),
            _ => Err(Error::invalid(format!("unknown parameter `{key}`"))),
        }
    }

    /// Checks structural bounds; the error names the offending key.
    pub fn validate(&self) -> Result<()> {
        if self.levels < 1 {
            return Err(Error::validation("levels", "must be at least 1"));
        }
        if self.levels > MAX_LEVELS {
            return Err(Error::validation(
                "levels",
                format!("must be at most {MAX_LEVELS}"),
            ));
        }
        if self.ratio < 2 {
            return Err(Error::validation("ratio", "must be at least 2"));
        }
        if (self.ratio as u64)
            .checked_pow(self.levels)
            .and_then(|p| p.checked_mul(10))
            .is_none()
        {
            return Err(Error::validation("ratio", "ratio^levels overflows the tick counter"));
        }
        for (key, v) in [
            ("theta", self.theta),
            ("phi", self.phi),
            ("sigma_scale", self.sigma_scale),
            ("alpha_scale", self.alpha_scale),
            ("epsilon", self.epsilon),
            ("world0", self.world0),
        ] {
            if !v.is_finite() {
                return Err(Error::validation(key, "must be finite"));
            }
        }
        if !(self.eta.is_finite() && self.eta >= 0.0) {
            return Err(Error::validation("eta", "must be finite and >= 0"));
        }
        if !(self.psi.is_finite() && self.psi > 0.0) {
            return Err(Error::validation("psi", "must be finite and > 0"));
        }
        if self.max_ticks == Some(0) {
            return Err(Error::validation("max_ticks", "must be at least 1"));
        }
        if self.record_every < 1 {
            return Err(Error::validation("record_every", "must be at least 1"));
        }
        Ok(())
    }

    /// Soft range notes: outside these ranges some weights go negative.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !(0.0..=1.0 / 3.0).contains(&self.theta) {
            out.push(format!(
                "theta = {} lies outside [0, 1/3]; judgement weights will have a negative entry",
                self.theta
            ));
        }
        if !(0.0..=1.0).contains(&self.phi) {
            out.push(format!(
                "phi = {} lies outside [0, 1]; action weights will have a negative entry",
                self.phi
            ));
        }
        out
    }

    pub fn agent_count(&self) -> usize {
        (1usize << self.levels) - 1
    }

    /// Run length in ticks; defaults to `10 * ratio^levels`.
    pub fn max_ticks(&self) -> u64 {
        self.max_ticks
            .unwrap_or_else(|| 10 * (self.ratio as u64).saturating_pow(self.levels))
    }

    pub fn schedule(&self) -> Result<ScheduleConfig> {
        ScheduleConfig::new(self.levels, self.ratio)
    }

    pub fn model_params(&self) -> Result<ModelParams> {
        Ok(ModelParams {
            sigma: judgement_weights(self.theta)?.scaled(self.sigma_scale)?,
            alpha: action_weights(self.phi)?.scaled(self.alpha_scale)?,
            noise: NoiseModel::new(self.eta, self.psi, self.seed)?,
            epsilon: self.epsilon,
        })
    }

    /// Fresh simulation at tick 0: agents inactive, world at `world0`.
    pub fn build_simulation(&self) -> Result<Simulation> {
        self.validate()?;
        Simulation::new(self.schedule()?, self.model_params()?, self.world0)
    }

    /// Serializes every set key as a document [`parse_config`] accepts.
    pub fn to_document(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{k} = {v}");
        };
        line("levels", self.levels.to_string());
        line("theta", format!("{:?}", self.theta));
        line("phi", format!("{:?}", self.phi));
        line("sigma_scale", format!("{:?}", self.sigma_scale));
        line("alpha_scale", format!("{:?}", self.alpha_scale));
        line("eta", format!("{:?}", self.eta));
        line("psi", format!("{:?}", self.psi));
        line("epsilon", format!("{:?}", self.epsilon));
        line("ratio", self.ratio.to_string());
        line("seed", self.seed.to_string());
        line("world0", format!("{:?}", self.world0));
        if let Some(t) = self.max_ticks {
            line("max_ticks", t.to_string());
        }
        line("record_every", self.record_every.to_string());
        line("world_kind", self.world_kind.to_string());
        out
    }
}

/// Splits `key = value`, dropping any trailing `#` comment.
fn split_assignment(raw: &str) -> Option<std::result::Result<(&str, &str), String>> {
    let text = raw.split('#').next().unwrap_or("").trim();
    if text.is_empty() {
        return None;
    }
    Some(match text.split_once('=') {
        Some((k, v)) if !k.trim().is_empty() && !v.trim().is_empty() => Ok((k.trim(), v.trim())),
        _ => Err(format!("expected `key = value`, found `{text}`")),
    })
}

/// Parses and validates a config document.
pub fn parse_config(text: &str) -> Result<SimConfig> {
    let mut cfg = SimConfig::default();
    let mut seen: Vec<&str> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let (key, value) = match split_assignment(raw) {
            None => continue,
            Some(Ok(kv)) => kv,
            Some(Err(reason)) => return Err(Error::Parse { line: n + 1, reason }),
        };
        if seen.contains(&key) {
            return Err(Error::validation(key, "given more than once"));
        }
        seen.push(key);
        cfg.set(key, value)?;
    }
    cfg.validate()?;
    for w in cfg.warnings() {
        log::warn!("{w}");
    }
    Ok(cfg)
}
