//! Sweeps the judgement weight and prints a one-line summary per value.
//!
//! cargo run --release --example parameter_sweep -- [axis] [v1,v2,...]

use hierdyn::experiment::{sweep, SimConfig};
use hierdyn::metrics::MetricKind;

fn main() -> hierdyn::Result<()> {
    let mut args = std::env::args().skip(1);
    let axis = args.next().unwrap_or_else(|| "theta".to_string());
    let values: Vec<f64> = args
        .next()
        .unwrap_or_else(|| "0,0.05,0.1,0.2,0.3".to_string())
        .split(',')
        .map(|v| v.trim().parse().expect("numeric sweep value"))
        .collect();
    let base = SimConfig {
        epsilon: 2e-3,
        ..SimConfig::default()
    };
    println!("{axis:>10} {:>12} {:>12} {:>10} {:>14}", "x_abs_pa", "x_perc_pa", "converged", "delta_world");
    for p in sweep(&base, &axis, &values)? {
        let s = &p.summary;
        println!(
            "{:>10} {:>12.3e} {:>12.3e} {:>10} {:>+14.6e}",
            p.value,
            s.final_per_agent[MetricKind::Absolute.index()],
            s.final_per_agent[MetricKind::Perceived.index()],
            s.convergence_tick.map(|t| t.to_string()).unwrap_or_else(|| "-".into()),
            s.final_delta_world
        );
    }
    Ok(())
}
