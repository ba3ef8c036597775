//! Prints which step each level takes on each tick.
//!
//! cargo run --example timing_diagram -- [levels] [ratio]

use hierdyn::experiment::SimConfig;

fn main() -> hierdyn::Result<()> {
    let mut args = std::env::args().skip(1);
    let levels: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let ratio: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let cfg = SimConfig {
        levels,
        ratio,
        ..SimConfig::default()
    };
    let mut sim = cfg.build_simulation()?;
    let ticks = 3 * (ratio as usize).pow(levels - 1);
    let mut rows = vec![vec!['.'; ticks]; levels as usize];
    for _ in 0..ticks {
        sim.advance_tick_observed(|e| rows[e.level as usize][e.tick as usize] = e.kind.letter())?;
    }
    for (level, row) in rows.iter().enumerate() {
        println!("level {level}: {}", row.iter().collect::<String>());
    }
    Ok(())
}
