//! Foggy, fixed world: metrics settle on a noise floor. Averages the last
//! fifth of each run over many seeds and ranks the six metrics.
//!
//! cargo run --release --example noisy_metrics -- [seeds]

use hierdyn::experiment::{run, Scenario};
use hierdyn::metrics::MetricKind;

fn main() -> hierdyn::Result<()> {
    let seeds: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(20);
    let mut means = [0.0; 6];
    for seed in 0..seeds {
        let cfg = hierdyn::experiment::SimConfig {
            seed,
            ..Scenario::NoisyNoHammer.config(4)
        };
        let records = run(&cfg)?;
        let tail = &records[records.len() * 4 / 5..];
        for k in MetricKind::ALL {
            let m = tail.iter().map(|r| r.per_agent(k)).sum::<f64>() / tail.len() as f64;
            means[k.index()] += m / seeds as f64;
        }
    }
    let mut ranked: Vec<_> = MetricKind::ALL.iter().map(|k| (means[k.index()], *k)).collect();
    ranked.sort_by(|a, b| b.0.total_cmp(&a.0));
    println!("plateau per-agent metrics over {seeds} seeds (worst first):");
    for (v, k) in ranked {
        println!("  {:<8} {v:.4e}", k.column());
    }
    Ok(())
}
