use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use crate::error::Result;

use super::config::SimConfig;
use super::output::write_series;
use super::run::run;

/// Hammer prefactor used by the two hammer scenarios.
pub const HAMMER_EPSILON: f64 = 2e-3;

/// The four noise / feedback combinations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scenario {
    NoiselessNoHammer,
    NoisyNoHammer,
    NoiselessHammer,
    NoisyHammer,
}

impl Scenario {
    pub const ALL: [Scenario; 4] = [
        Scenario::NoiselessNoHammer,
        Scenario::NoisyNoHammer,
        Scenario::NoiselessHammer,
        Scenario::NoisyHammer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::NoiselessNoHammer => "noiseless_nohammer",
            Scenario::NoisyNoHammer => "noisy_nohammer",
            Scenario::NoiselessHammer => "noiseless_hammer",
            Scenario::NoisyHammer => "noisy_hammer",
        }
    }

    pub fn is_noisy(self) -> bool {
        matches!(self, Scenario::NoisyNoHammer | Scenario::NoisyHammer)
    }

    pub fn has_hammer(self) -> bool {
        matches!(self, Scenario::NoiselessHammer | Scenario::NoisyHammer)
    }

    /// Defaults with noise and hammer switched per scenario.
    pub fn config(self, levels: u32) -> SimConfig {
        let base = SimConfig::default();
        SimConfig {
            levels,
            eta: if self.is_noisy() { base.eta } else { 0.0 },
            epsilon: if self.has_hammer() { HAMMER_EPSILON } else { 0.0 },
            ..base
        }
    }

    pub fn file_name(self, levels: u32) -> String {
        format!("{}_L{levels}.csv", self.name())
    }
}

/// Tree depths each scenario is run at.
pub const SCENARIO_LEVELS: [u32; 2] = [4, 6];

/// Runs all four scenarios at four and six levels and writes eight CSVs
/// into `out_dir`. Returns the written paths.
pub fn write_scenarios(out_dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();
    for scenario in Scenario::ALL {
        for levels in SCENARIO_LEVELS {
            let records = run(&scenario.config(levels))?;
            let path = out_dir.join(scenario.file_name(levels));
            write_series(&records, BufWriter::new(File::create(&path)?))?;
            written.push(path);
        }
    }
    Ok(written)
}
