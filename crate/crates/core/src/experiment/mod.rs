//! Configuration, runs, sweeps, and output.

mod config;
mod output;
mod run;
mod scenarios;
mod sweep;

pub use self::config::{parse_config, SimConfig, WorldKind, KEYS};
pub use self::output::{write_jsonl, write_series, SCHEMA_VERSION};
pub use self::run::{run, RunSummary, CONVERGENCE_THRESHOLD};
pub use self::scenarios::{write_scenarios, Scenario, HAMMER_EPSILON, SCENARIO_LEVELS};
pub use self::sweep::{sweep, SweepPoint};
pub use crate::metrics::MetricsRecord;
