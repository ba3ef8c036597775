//! Scales the judgement and action weights below one (non-conservative)
//! and compares how far a hammered world moves.
//!
//! cargo run --release --example damped_weights

use hierdyn::experiment::{run, Scenario, SimConfig};

fn main() -> hierdyn::Result<()> {
    for scale in [1.0, 0.99, 0.95, 0.9] {
        let cfg = SimConfig {
            sigma_scale: scale,
            alpha_scale: scale,
            ..Scenario::NoiselessHammer.config(4)
        };
        let last = *run(&cfg)?.last().expect("non-empty run");
        println!(
            "scale {scale:<5} final world {:.6}  delta {:+.6e}  x_abs_pa {:.3e}",
            last.world,
            last.delta_world,
            last.per_agent[1]
        );
    }
    Ok(())
}
