use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tripent::fock::Statistics;
use tripent::scenario::{run, OutputFormat, RunConfig, Scenario};

#[derive(Parser)]
#[command(name = "tripent", version, about = "Tripartite entanglement scenarios for identical particles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Single particle spread over three modes: ε_G versus ε_T
    Chi(Common),
    /// ε_T and ε_G of the six-mode three-fermion family over (α, β)
    PhiScan(Common),
    /// Entanglement of particles along the quantum walk
    Walk(Common),
    /// Density, pair correlation and distance distribution at one τ
    Snapshot(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsArg {
    Bosons,
    Fermions,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "fermions")]
    stats: StatsArg,
    /// One-based pipe-separated groups, e.g. "1,2|3,4|5,6"
    #[arg(long)]
    partition: Option<String>,
    #[arg(long, default_value_t = 20.0)]
    tau_max: f64,
    /// Number of τ intervals
    #[arg(long, default_value_t = 400)]
    steps: usize,
    #[arg(long, default_value_t = 8.7)]
    tau: f64,
    #[arg(long, default_value_t = 101)]
    alpha_steps: usize,
    #[arg(long, default_value_t = 101)]
    beta_steps: usize,
    /// On-site energy G in units of the tunneling rate
    #[arg(long = "onsite", default_value_t = 0.0, allow_negative_numbers = true)]
    onsite: f64,
    #[arg(long, default_value_t = 6)]
    sites: usize,
    #[arg(long, default_value_t = 3)]
    particles: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

fn config(scenario: Scenario, c: Common) -> RunConfig {
    RunConfig {
        scenario,
        modes: c.sites,
        particles: c.particles,
        stats: match c.stats {
            StatsArg::Bosons => Statistics::Bosons,
            StatsArg::Fermions => Statistics::Fermions,
        },
        partition: c.partition,
        onsite: c.onsite,
        tunneling: 1.0,
        tau_max: c.tau_max,
        steps: c.steps,
        tau: c.tau,
        alpha_steps: c.alpha_steps,
        beta_steps: c.beta_steps,
        out: c.out,
        format: match c.format {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match cli.command {
        Command::Chi(c) => config(Scenario::Chi, c),
        Command::PhiScan(c) => config(Scenario::PhiScan, c),
        Command::Walk(c) => config(Scenario::Walk, c),
        Command::Snapshot(c) => config(Scenario::Snapshot, c),
    };
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let output = match run(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let sink: Box<dyn Write> = match &cfg.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match output.write(cfg.format, sink) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
