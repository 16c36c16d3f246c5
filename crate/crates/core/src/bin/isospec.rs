use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, ValueEnum};

use isospec::io::{self, OutputFormat, RunConfig, Subcommand};

#[derive(Parser)]
#[command(
    name = "isospec",
    version,
    about = "Radial potentials isospectral to hydrogen"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Subcommand)]
enum Command {
    /// Tabulate the deformed potentials next to the Coulomb channel
    Potential(Common),
    /// Tabulate the missing state and the transformed eigenstates
    States(Common),
    /// Lowest eigenvalues on a single grid
    Spectrum(Common),
    /// Richardson-extrapolated spectra against -1/n^2
    Verify(Common),
    /// Write fig1.csv, fig2.csv and manifest.json into --out
    Figures(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 1)]
    l: u32,
    /// Comma-separated gamma values
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    gamma: Vec<f64>,
    #[arg(long)]
    r_min: Option<f64>,
    #[arg(long)]
    r_max: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long, default_value_t = io::DEFAULT_K)]
    k: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    allow_singular: bool,
    #[arg(long, default_value_t = io::DEFAULT_TOLERANCE)]
    tolerance: f64,
}

fn config(cli: Cli) -> RunConfig {
    let (command, c) = match cli.command {
        Command::Potential(c) => (Subcommand::Potential, c),
        Command::States(c) => (Subcommand::States, c),
        Command::Spectrum(c) => (Subcommand::Spectrum, c),
        Command::Verify(c) => (Subcommand::Verify, c),
        Command::Figures(c) => (Subcommand::Figures, c),
    };
    RunConfig {
        command,
        l: c.l,
        gammas: c.gamma,
        r_min: c.r_min,
        r_max: c.r_max,
        points: c.points,
        k: c.k,
        format: match c.format {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        },
        out: c.out,
        allow_singular: c.allow_singular,
        tolerance: c.tolerance,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let first = e.to_string();
            let first = first
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            eprintln!(
                "error kind=invalid_config code={} message=\"{}\"",
                io::EXIT_INVALID_CONFIG,
                first.replace('"', "'")
            );
            return ExitCode::from(io::EXIT_INVALID_CONFIG as u8);
        }
    };
    match io::run(&config(cli)) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{}", io::error_line(&e));
            ExitCode::from(io::exit_code(&e) as u8)
        }
    }
}
