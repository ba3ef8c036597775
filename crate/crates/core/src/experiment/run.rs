use serde::Serialize;

use crate::error::Result;
use crate::metrics::{metrics_record, MetricKind, MetricsRecord};

use super::config::SimConfig;

/// Per-agent absolute metric below which a run counts as converged.
pub const CONVERGENCE_THRESHOLD: f64 = 1e-6;

/// Runs a simulation from the inactive initial state.
///
/// Records are taken at the end of every `record_every`-th tick, plus the
/// final tick, so the last record always describes the end state.
pub fn run(config: &SimConfig) -> Result<Vec<MetricsRecord>> {
    let mut sim = config.build_simulation()?;
    let schedule = *sim.schedule();
    let initial_world = sim.world().initial_value;
    let total = config.max_ticks();
    let mut records = Vec::with_capacity((total / config.record_every + 1) as usize);
    for tick in 0..total {
        sim.advance_tick()?;
        if tick % config.record_every == 0 || tick + 1 == total {
            records.push(metrics_record(&sim.snapshot(), &schedule, initial_world));
        }
    }
    Ok(records)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunSummary {
    /// Per-agent metrics of the last record, indexed by [`MetricKind::index`].
    pub final_per_agent: [f64; 6],
    /// First recorded tick with per-agent absolute metric below
    /// [`CONVERGENCE_THRESHOLD`].
    pub convergence_tick: Option<u64>,
    pub final_delta_world: f64,
}

impl RunSummary {
    pub fn from_records(records: &[MetricsRecord]) -> Self {
        let last = records.last();
        RunSummary {
            final_per_agent: last.map(|r| r.per_agent).unwrap_or([f64::NAN; 6]),
            convergence_tick: records
                .iter()
                .find(|r| r.per_agent(MetricKind::Absolute) < CONVERGENCE_THRESHOLD)
                .map(|r| r.tick),
            final_delta_world: last.map(|r| r.delta_world).unwrap_or(0.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;

    use super::*;

    #[test]
    fn single_agent_worked_example() {
        let cfg = SimConfig {
            levels: 1,
            eta: 0.0,
            max_ticks: Some(6),
            ..SimConfig::default()
        };
        let records = run(&cfg).unwrap();
        assert_eq!(records.len(), 6);
        let r = records[2];
        assert_eq!(r.tick, 2);
        assert_abs_diff_eq!(r.raw(MetricKind::Perceived), 2.8224, epsilon = 1e-12);
        assert_abs_diff_eq!(r.raw(MetricKind::Absolute), 6.6564, epsilon = 1e-12);
    }

    #[test]
    fn record_every_keeps_last_tick() {
        let cfg = SimConfig {
            levels: 2,
            max_ticks: Some(10),
            record_every: 4,
            ..SimConfig::default()
        };
        let ticks: Vec<u64> = run(&cfg).unwrap().iter().map(|r| r.tick).collect();
        assert_eq!(ticks, vec![0, 4, 8, 9]);
    }

    #[test]
    fn summary() {
        let cfg = SimConfig {
            levels: 3,
            eta: 0.0,
            ..SimConfig::default()
        };
        let s = RunSummary::from_records(&run(&cfg).unwrap());
        assert!(s.convergence_tick.is_some());
        assert_eq!(s.final_delta_world, 0.0);
        assert!(s.final_per_agent.iter().all(|x| *x < 1e-9));
    }
}
