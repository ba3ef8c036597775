//! One agent alone: it is its own parent and both of its own children.
//! Walks through a few measure / judge / act cycles and prints the state.
//!
//! cargo run --example single_agent

use hierdyn::experiment::SimConfig;

fn main() -> hierdyn::Result<()> {
    let cfg = SimConfig {
        levels: 1,
        eta: 0.0,
        ..SimConfig::default()
    };
    let mut sim = cfg.build_simulation()?;
    println!("tick step      W        J        A       J*");
    for _ in 0..9 {
        let mut kind = None;
        sim.advance_tick_observed(|e| kind = Some(e.kind))?;
        let s = sim.states()[0];
        println!(
            "{:>4} {:>4} {:>8.4} {:>8.4} {:>8.4} {:>8.4}",
            sim.ticks_done() - 1,
            kind.map(|k| k.to_string()).unwrap_or_default(),
            s.w,
            s.j,
            s.a,
            s.j_parent
        );
    }
    Ok(())
}
