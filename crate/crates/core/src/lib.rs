//! Hierarchical decision dynamics on a binary agent tree.
//!
//! Agents sit on a complete binary tree. Each one repeatedly cycles through
//! three steps: it measures a scalar world value (with level-dependent noise)
//! while collecting its parent's and children's judgements, forms a new
//! judgement as a weighted sum of its six-element state, and then acts as
//! another weighted sum. Upper levels step more slowly than lower ones, and
//! actions can optionally push ("hammer") the world toward themselves.
//!
//! The crate is organised bottom-up:
//!
//! - [`topology`]: tree index arithmetic (parent, children, level).
//! - [`dynamics`]: agent state and the measure / judge / act step functions.
//! - [`world`]: world value, reproducible noise streams, and hammer feedback.
//! - [`scheduler`]: multi-rate tick loop driving every agent's cycle.
//! - [`metrics`]: six success metrics computed from a snapshot.
//! - [`experiment`]: config files, runs, sweeps, and CSV / JSONL output.
//!
//! ```
//! use hierdyn::experiment::{run, SimConfig};
//!
//! let mut cfg = SimConfig::default();
//! cfg.eta = 0.0;
//! cfg.levels = 3;
//! let records = run(&cfg).unwrap();
//! let last = records.last().unwrap();
//! assert!(last.per_agent(hierdyn::metrics::MetricKind::Absolute) < 1e-9);
//! ```

pub mod dynamics;
pub mod error;
pub mod experiment;
pub mod metrics;
pub mod scheduler;
pub mod topology;
pub mod world;

pub use error::{Error, Result};
