//! Per-agent noise streams are counter based: any draw can be recomputed
//! from (seed, agent, counter) alone.
//!
//! cargo run --example noise_streams

use hierdyn::world::{sample_noise, NoiseModel};

fn main() -> hierdyn::Result<()> {
    let model = NoiseModel::new(1e-3, std::f64::consts::SQRT_2, 42)?;
    for level in 0..4 {
        println!("level {level}: amplitude {:.6e}", model.amplitude(level));
    }
    println!("agent 5, level 2, draws 0..5:");
    for counter in 0..5 {
        println!("  #{counter}: {:+.6e}", sample_noise(&model, 5, 2, counter));
    }
    let replay = sample_noise(&model, 5, 2, 3);
    println!("replayed #3: {replay:+.6e}");
    Ok(())
}
