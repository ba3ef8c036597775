//! Clear, fixed world: every metric decays to zero. Prints per-agent
//! metrics at each top-level cycle for a four- and a six-level tree.
//!
//! cargo run --release --example noiseless_convergence

use hierdyn::experiment::{run, Scenario};
use hierdyn::metrics::MetricKind;

fn main() -> hierdyn::Result<()> {
    for levels in [4, 6] {
        let cfg = Scenario::NoiselessNoHammer.config(levels);
        let records = run(&cfg)?;
        let cycle = 3 * (cfg.ratio as u64).pow(levels - 1);
        println!("levels = {levels} ({} agents)", cfg.agent_count());
        print!("{:>8}", "t_norm");
        for k in MetricKind::ALL {
            print!("{:>12}", k.column());
        }
        println!();
        for r in records.iter().filter(|r| r.tick % cycle == 0) {
            print!("{:>8.1}", r.t_norm);
            for k in MetricKind::ALL {
                print!("{:>12.3e}", r.per_agent(k));
            }
            println!();
        }
        println!();
    }
    Ok(())
}
