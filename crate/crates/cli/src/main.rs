// Copyright 2026 The rabisim Authors
// SPDX-License-Identifier: Apache-2.0

//! `rabisim` command-line front end.
//!
//! Exit codes: 0 success, 1 runtime failure, 2 configuration error,
//! 3 steady-state timeout (outputs are still written).

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::anyhow;
use clap::{Parser, Subcommand};

use config::{RunConfig, Units};

#[derive(Debug, Parser)]
#[command(name = "rabisim", version, about = "Flux qubit coupled to a resonator beyond the rotating-wave approximation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// TOML config, or a JSON sidecar from a previous run.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Built-in parameter set; keys in --config override it.
    #[arg(long, global = true)]
    preset: Option<String>,
    /// Output directory.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    /// Worker threads for sweeps and calibration.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Fock-space truncation; overrides the config.
    #[arg(long, global = true)]
    n_fock: Option<usize>,
    /// Accept Bloch-Siegert results with lambda >= 0.2.
    #[arg(long, global = true)]
    allow_nonperturbative: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenenergies and labels against flux.
    Levels,
    /// Transition table at one flux point.
    Elements,
    /// Doublet matrix-element ratios against coupling.
    Ratio,
    /// Steady-state spectroscopy trace at one flux point.
    Trace,
    /// Steady-state map over flux and drive frequency.
    Sweep,
    /// Time evolution from a chosen initial state.
    Evolve,
    /// Single steady state at `flux` and `omega_d`.
    Steady,
    /// Grid-search calibration against a measured trace.
    Calibrate {
        /// CSV with drive frequency and P_sw in the first two columns.
        #[arg(long)]
        measured: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Levels => "levels",
            Command::Elements => "elements",
            Command::Ratio => "ratio",
            Command::Trace => "trace",
            Command::Sweep => "sweep",
            Command::Evolve => "evolve",
            Command::Steady => "steady",
            Command::Calibrate { .. } => "calibrate",
        }
    }
}

enum Failure {
    Config(anyhow::Error),
    Runtime(anyhow::Error),
}

fn build_config(cli: &Cli) -> anyhow::Result<RunConfig> {
    let base = match &cli.preset {
        Some(name) => config::preset(name)?,
        None => RunConfig::default(),
    };
    let mut cfg = match &cli.config {
        Some(path) => config::load(path)?.merged_over(base)?,
        None => base,
    };
    if let Some(n) = cli.n_fock {
        cfg.n_fock = Some(n);
    }
    if cli.allow_nonperturbative {
        cfg.allow_nonperturbative = Some(true);
    }
    Ok(cfg.effective())
}

/// Library errors that stem from the configuration rather than the run.
fn is_config_error(e: &anyhow::Error) -> bool {
    use rabisim::Error;
    matches!(
        e.downcast_ref::<Error>(),
        Some(
            Error::Config(_)
                | Error::Domain(_)
                | Error::InvalidTruncation(_)
                | Error::NonPerturbative(_)
                | Error::UnknownStrategy { .. }
                | Error::StepTooLarge { .. }
        )
    )
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let cfg = build_config(cli).map_err(Failure::Config)?;
    let res = cfg.resolve().map_err(Failure::Config)?;
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Runtime(anyhow!(e)))?;
    }
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Levels => commands::levels(&res),
        Command::Elements => commands::elements(&res),
        Command::Ratio => commands::ratio(&res),
        Command::Trace => commands::trace(&res),
        Command::Sweep => commands::sweep_map(&res),
        Command::Evolve => commands::evolve_trajectory(&res),
        Command::Steady => commands::steady(&res),
        Command::Calibrate { measured } => {
            let units = cfg.units.unwrap_or_default();
            commands::calibrate_trace(&res, measured, move |f| match units {
                Units::Lab => rabisim::constants::ghz(f),
                Units::Si => f,
            })
        }
    };
    let artifact = outcome.map_err(|e| if is_config_error(&e) { Failure::Config(e) } else { Failure::Runtime(e) })?;
    let elapsed = start.elapsed().as_secs_f64();
    for w in &artifact.warnings {
        eprintln!("warning: {w}");
    }
    let (csv, json) = output::write(&cli.out, cli.command.name(), &cfg, &artifact, elapsed).map_err(Failure::Runtime)?;
    eprintln!("wrote {} and {}", csv.display(), json.display());
    if let Some(t) = &artifact.timeout {
        eprintln!("steady state did not converge:");
        eprintln!("{}", serde_json::to_string_pretty(t).unwrap_or_default());
        return Ok(false);
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(Failure::Config(e)) => {
            eprintln!("config error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
