use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hierdyn::experiment::{
    parse_config, sweep, write_jsonl, write_scenarios, write_series, SimConfig,
};
use hierdyn::metrics::MetricKind;
use hierdyn::{Error, Result};

/// Hierarchical decision dynamics on a binary agent tree.
#[derive(Parser, Debug)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one simulation and write its metric time series.
    Run {
        /// Config file; defaults are used when omitted.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override a config key, e.g. `--set levels=6`. Repeatable.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run one simulation per value of a single parameter.
    Sweep {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        axis: String,
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        values: Vec<f64>,
        /// Directory for per-run CSVs and `summary.csv`; summary goes to
        /// stdout when omitted.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Run the four noise/hammer scenarios at 4 and 6 levels.
    Scenarios {
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
}

fn load_config(path: Option<&Path>, overrides: &[String]) -> Result<SimConfig> {
    let mut cfg = match path {
        Some(p) => parse_config(&fs::read_to_string(p)?)?,
        None => SimConfig::default(),
    };
    for item in overrides {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidArgument(format!("--set expects KEY=VALUE, got `{item}`")))?;
        cfg.set(key.trim(), value)?;
    }
    cfg.validate()?;
    for w in cfg.warnings() {
        log::warn!("{w}");
    }
    Ok(cfg)
}

fn open_sink(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_summary<W: Write>(axis: &str, points: &[hierdyn::experiment::SweepPoint], mut w: W) -> Result<()> {
    let metric_cols: Vec<String> = MetricKind::ALL
        .iter()
        .map(|k| format!("{}_pa", k.column()))
        .collect();
    writeln!(w, "{axis},{},convergence_tick,delta_world", metric_cols.join(","))?;
    for p in points {
        let metrics: Vec<String> = p
            .summary
            .final_per_agent
            .iter()
            .map(|x| format!("{x:.16e}"))
            .collect();
        let conv = p
            .summary
            .convergence_tick
            .map(|t| t.to_string())
            .unwrap_or_default();
        writeln!(
            w,
            "{:?},{},{conv},{:.16e}",
            p.value,
            metrics.join(","),
            p.summary.final_delta_world
        )?;
    }
    w.flush()?;
    Ok(())
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run {
            config,
            out,
            overrides,
            format,
        } => {
            let cfg = load_config(config.as_deref(), &overrides)?;
            let records = hierdyn::experiment::run(&cfg)?;
            let sink = open_sink(out.as_deref())?;
            match format {
                Format::Csv => write_series(&records, sink),
                Format::Jsonl => write_jsonl(&cfg, &records, sink),
            }
        }
        Command::Sweep {
            config,
            axis,
            values,
            out_dir,
        } => {
            let cfg = load_config(config.as_deref(), &[])?;
            let points = sweep(&cfg, &axis, &values)?;
            match out_dir {
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    for p in &points {
                        let path = dir.join(format!("{axis}_{:?}.csv", p.value));
                        write_series(&p.records, BufWriter::new(File::create(path)?))?;
                    }
                    write_summary(&axis, &points, BufWriter::new(File::create(dir.join("summary.csv"))?))
                }
                None => write_summary(&axis, &points, io::stdout().lock()),
            }
        }
        Command::Scenarios { out_dir } => {
            for path in write_scenarios(&out_dir)? {
                eprintln!("wrote {}", path.display());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
