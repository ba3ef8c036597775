//! Malleable world: each action nudges the world toward itself. Prints the
//! world's cumulative change once per top-level cycle.
//!
//! cargo run --release --example hammer_drift

use hierdyn::experiment::{run, Scenario};
use hierdyn::metrics::MetricKind;

fn main() -> hierdyn::Result<()> {
    for scenario in [Scenario::NoiselessHammer, Scenario::NoisyHammer] {
        let cfg = scenario.config(4);
        let records = run(&cfg)?;
        let cycle = 3 * (cfg.ratio as u64).pow(cfg.levels - 1);
        println!("{} (epsilon = {})", scenario.name(), cfg.epsilon);
        for r in records.iter().filter(|r| r.tick % cycle == 0) {
            println!(
                "  t_norm {:>5.1}  world {:.9}  delta {:+.6e}  x_abs_pa {:.3e}",
                r.t_norm,
                r.world,
                r.delta_world,
                r.per_agent(MetricKind::Absolute)
            );
        }
    }
    Ok(())
}
