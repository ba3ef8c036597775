//! Success metrics.
//!
//! Every metric is a sum of squared differences `X_Q = Σ_i (A_i - Q_i)²`
//! between each agent's action and some reference value `Q_i`. Zero means
//! complete success under that notion of success.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dynamics::AgentState;
use crate::error::{Error, Result};
use crate::scheduler::ScheduleConfig;

/// Read-only view of the world and every agent at the end of one tick.
#[derive(Clone, Copy, Debug)]
pub struct Snapshot<'a> {
    pub tick: u64,
    pub world_value: f64,
    pub states: &'a [AgentState],
}

impl<'a> Snapshot<'a> {
    pub fn new(tick: u64, world_value: f64, states: &'a [AgentState]) -> Self {
        Snapshot {
            tick,
            world_value,
            states,
        }
    }

    pub fn mean_judgement(&self) -> f64 {
        if self.states.is_empty() {
            return 0.0;
        }
        self.states.iter().map(|s| s.j).sum::<f64>() / self.states.len() as f64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MetricKind {
    /// D0: action vs own observation.
    Naive,
    /// D1: action vs the true world value.
    Absolute,
    /// D2: action vs own judgement.
    Perceived,
    /// D3: action vs the parent judgement the agent last collected.
    Bootlicker,
    /// D4: action vs the ur-parent's judgement.
    Authoritarian,
    /// D5: action vs the tree's mean judgement.
    Democratic,
}

impl MetricKind {
    pub const ALL: [MetricKind; 6] = [
        MetricKind::Naive,
        MetricKind::Absolute,
        MetricKind::Perceived,
        MetricKind::Bootlicker,
        MetricKind::Authoritarian,
        MetricKind::Democratic,
    ];

    /// Output column name for the raw sum.
    pub fn column(self) -> &'static str {
        match self {
            MetricKind::Naive => "x_naive",
            MetricKind::Absolute => "x_abs",
            MetricKind::Perceived => "x_perc",
            MetricKind::Bootlicker => "x_boot",
            MetricKind::Authoritarian => "x_auth",
            MetricKind::Democratic => "x_demo",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.column())
    }
}

impl FromStr for MetricKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let key = key.strip_prefix("x_").unwrap_or(&key);
        Ok(match key {
            "naive" | "d0" => MetricKind::Naive,
            "abs" | "absolute" | "d1" => MetricKind::Absolute,
            "perc" | "perceived" | "d2" => MetricKind::Perceived,
            "boot" | "bootlicker" | "d3" => MetricKind::Bootlicker,
            "auth" | "authoritarian" | "d4" => MetricKind::Authoritarian,
            "demo" | "democratic" | "d5" => MetricKind::Democratic,
            _ => return Err(Error::invalid(format!("unknown metric kind `{s}`"))),
        })
    }
}

/// Reference `Q_i` with tree-level aggregates already computed.
#[inline]
fn reference(snapshot: &Snapshot<'_>, kind: MetricKind, i: usize, mean_j: f64) -> f64 {
    let s = &snapshot.states[i];
    match kind {
        MetricKind::Naive => s.w,
        MetricKind::Absolute => snapshot.world_value,
        MetricKind::Perceived => s.j,
        MetricKind::Bootlicker => s.j_parent,
        MetricKind::Authoritarian => snapshot.states[0].j,
        MetricKind::Democratic => mean_j,
    }
}

pub fn reference_value(snapshot: &Snapshot<'_>, kind: MetricKind, i: usize) -> Result<f64> {
    if i >= snapshot.states.len() {
        return Err(Error::invalid(format!(
            "agent index {i} out of range for {} agents",
            snapshot.states.len()
        )));
    }
    let mean_j = if kind == MetricKind::Democratic {
        snapshot.mean_judgement()
    } else {
        0.0
    };
    Ok(reference(snapshot, kind, i, mean_j))
}

pub fn success_metric(snapshot: &Snapshot<'_>, kind: MetricKind) -> f64 {
    let mean_j = snapshot.mean_judgement();
    sum_sq(snapshot, kind, mean_j)
}

fn sum_sq(snapshot: &Snapshot<'_>, kind: MetricKind, mean_j: f64) -> f64 {
    let mut acc = 0.0;
    for (i, s) in snapshot.states.iter().enumerate() {
        let d = s.a - reference(snapshot, kind, i, mean_j);
        acc += d * d;
    }
    acc
}

/// One row of the output time series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricsRecord {
    pub tick: u64,
    /// Time in units of top-level steps, `tick / R^(L-1)`.
    pub t_norm: f64,
    pub world: f64,
    pub delta_world: f64,
    /// Raw sums, indexed by [`MetricKind::index`].
    pub raw: [f64; 6],
    /// Raw sums divided by the agent count.
    pub per_agent: [f64; 6],
}

impl MetricsRecord {
    pub fn raw(&self, kind: MetricKind) -> f64 {
        self.raw[kind.index()]
    }

    pub fn per_agent(&self, kind: MetricKind) -> f64 {
        self.per_agent[kind.index()]
    }

    /// The sixteen column names, in output order.
    pub fn columns() -> Vec<String> {
        let mut cols: Vec<String> = ["tick", "t_norm", "world", "delta_world"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        cols.extend(MetricKind::ALL.iter().map(|k| k.column().to_string()));
        cols.extend(MetricKind::ALL.iter().map(|k| format!("{}_pa", k.column())));
        cols
    }

    /// The fifteen floating-point columns following `tick`.
    pub fn values(&self) -> [f64; 15] {
        let mut out = [0.0; 15];
        out[0] = self.t_norm;
        out[1] = self.world;
        out[2] = self.delta_world;
        out[3..9].copy_from_slice(&self.raw);
        out[9..15].copy_from_slice(&self.per_agent);
        out
    }
}

pub fn metrics_record(
    snapshot: &Snapshot<'_>,
    schedule: &ScheduleConfig,
    initial_world: f64,
) -> MetricsRecord {
    let n = snapshot.states.len().max(1) as f64;
    let mean_j = snapshot.mean_judgement();
    let mut raw = [0.0; 6];
    let mut per_agent = [0.0; 6];
    for kind in MetricKind::ALL {
        let x = sum_sq(snapshot, kind, mean_j);
        raw[kind.index()] = x;
        per_agent[kind.index()] = x / n;
    }
    MetricsRecord {
        tick: snapshot.tick,
        t_norm: snapshot.tick as f64 / schedule.top_period() as f64,
        world: snapshot.world_value,
        delta_world: snapshot.world_value - initial_world,
        raw,
        per_agent,
    }
}
