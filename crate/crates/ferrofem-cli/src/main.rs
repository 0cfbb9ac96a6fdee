//! Command-line front end for the ferrofluid solver: convergence studies,
//! energy-decay series, and single diagnostic runs.

mod config;
mod experiments;
mod output;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};
use config::{read_config, set_key, Mode, PartialSpec};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ferrofem",
    about = "Energy-stable mixed finite elements for ferrofluid flow on the unit cube",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a mesh-refinement study and report errors and convergence orders
    Converge(CommonArgs),
    /// Record the discrete energy and dissipation over time for each (K, dt)
    Energy(CommonArgs),
    /// Integrate one configuration and dump final-state diagnostics
    Run(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Config file, flat `key = value` lines or a JSON object; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
    /// Test problem: 1 or 2 (manufactured solutions) or 3 (free decay)
    #[arg(long)]
    example: Option<usize>,
    /// Mesh resolutions, comma separated (cube split into K^3 subcubes)
    #[arg(long)]
    k: Option<String>,
    /// Step rule: `1/K`, or comma-separated values like `1/16,1/32`
    #[arg(long)]
    dt: Option<String>,
    /// Final time (accepts fractions)
    #[arg(long = "T")]
    t_end: Option<String>,
    /// Picard-type sweeps per time step
    #[arg(long)]
    sweeps: Option<usize>,
    /// Iterate each step's sweeps to a 1e-10 fixed point (energy-law mode)
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    strict_energy: Option<bool>,
    /// Output directory for CSV/JSON files
    #[arg(long)]
    out: Option<PathBuf>,
    /// Direct-solver residual acceptance threshold
    #[arg(long)]
    solver_tol: Option<f64>,
    /// Impose H·n = 0 on the magnetostatic field (on by default)
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    constrain_h: Option<bool>,
    /// Model parameter override, `name=value`; repeatable (e.g. --param chi0=0.5)
    #[arg(long = "param")]
    params: Vec<String>,
}

impl CommonArgs {
    fn to_partial(&self) -> Result<PartialSpec> {
        let mut p = PartialSpec::default();
        p.example = self.example;
        p.sweeps = self.sweeps;
        p.strict_energy = self.strict_energy;
        p.solver_tol = self.solver_tol;
        p.constrain_h = self.constrain_h;
        p.out = self.out.clone();
        if let Some(s) = &self.k {
            set_key(&mut p, "k", s)?;
        }
        if let Some(s) = &self.dt {
            set_key(&mut p, "dt", s)?;
        }
        if let Some(s) = &self.t_end {
            set_key(&mut p, "T", s)?;
        }
        for kv in &self.params {
            let (key, value) = kv
                .split_once('=')
                .ok_or_else(|| anyhow!("--param expects name=value, got `{kv}`"))?;
            set_key(&mut p, key.trim(), value.trim())?;
        }
        Ok(p)
    }
}

fn try_main() -> Result<()> {
    let cli = Cli::parse();
    let (mode, args) = match &cli.command {
        Command::Converge(a) => (Mode::Converge, a),
        Command::Energy(a) => (Mode::Energy, a),
        Command::Run(a) => (Mode::Run, a),
    };
    let file = match &args.config {
        Some(path) => read_config(path)?,
        None => PartialSpec::default(),
    };
    let spec = args.to_partial()?.merge_over(file).resolve(mode)?;
    eprintln!("resolved spec: {}", spec.emit());
    match mode {
        Mode::Converge => experiments::converge(&spec),
        Mode::Energy => experiments::energy_study(&spec),
        Mode::Run => experiments::single_run(&spec),
    }
}

fn main() -> ExitCode {
    match try_main() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
