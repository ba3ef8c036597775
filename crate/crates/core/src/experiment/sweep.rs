use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::metrics::MetricsRecord;

use super::config::{SimConfig, KEYS};
use super::run::{run, RunSummary};

/// One point of a one-dimensional parameter sweep.
#[derive(Clone, Debug)]
pub struct SweepPoint {
    pub value: f64,
    pub config: SimConfig,
    pub summary: RunSummary,
    pub records: Vec<MetricsRecord>,
}

/// Runs `base` once per value of `axis`, in parallel. Results keep the order
/// of `values`.
pub fn sweep(base: &SimConfig, axis: &str, values: &[f64]) -> Result<Vec<SweepPoint>> {
    if !KEYS.contains(&axis) || axis == "world_kind" {
        return Err(Error::invalid(format!("unknown sweep axis `{axis}`")));
    }
    let configs = values
        .iter()
        .map(|&v| {
            let mut cfg = base.clone();
            cfg.set_numeric(axis, v)?;
            cfg.validate()?;
            Ok((v, cfg))
        })
        .collect::<Result<Vec<_>>>()?;
    configs
        .into_par_iter()
        .map(|(value, config)| {
            let records = run(&config)?;
            Ok(SweepPoint {
                value,
                summary: RunSummary::from_records(&records),
                config,
                records,
            })
        })
        .collect()
}
