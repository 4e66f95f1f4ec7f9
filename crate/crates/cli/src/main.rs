use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use laplaceqm_cli::{config, run, Command, Failure, RunConfig};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Sub {
    Spectrum,
    Wavefunction,
    Validate,
}

/// Spectra, wavefunctions and cross-method checks for the Laplace contour method.
#[derive(Debug, Parser)]
#[command(name = "laplaceqm", version)]
struct Cli {
    #[arg(value_enum)]
    command: Sub,
    /// Problem kind, e.g. coulomb3d_cont
    #[arg(long)]
    kind: Option<String>,
    /// Problem or run parameter, repeatable: mu, omega, a0, a, V0, m, l, n, n_max, E, tol, grid_space
    #[arg(long = "param", value_name = "K=V", allow_hyphen_values = true)]
    params: Vec<String>,
    /// min,max,count
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// residue, real, circle, series or morse
    #[arg(long)]
    method: Option<String>,
    #[arg(long)]
    radius: Option<String>,
    #[arg(long)]
    steps: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat key=value file; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

fn merged(cli: &Cli) -> Result<BTreeMap<String, String>, Failure> {
    let mut map = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Config(format!("cannot read config {}: {e}", path.display())))?;
            config::parse_flat(&text)?
        }
        None => BTreeMap::new(),
    };
    for p in &cli.params {
        let (k, v) = config::split_pair(p)?;
        map.insert(k, v);
    }
    let flags = [("kind", &cli.kind), ("grid", &cli.grid), ("method", &cli.method), ("radius", &cli.radius), ("steps", &cli.steps)];
    for (k, v) in flags {
        if let Some(v) = v {
            map.insert(k.to_string(), v.clone());
        }
    }
    if let Some(out) = &cli.out {
        map.insert("out".to_string(), out.display().to_string());
    }
    Ok(map)
}

fn execute(cli: &Cli) -> Result<(), Failure> {
    let command = match cli.command {
        Sub::Spectrum => Command::Spectrum,
        Sub::Wavefunction => Command::Wavefunction,
        Sub::Validate => Command::Validate,
    };
    let cfg = RunConfig::from_map(command, &merged(cli)?)?;
    let table = run(&cfg)?;
    let written = match &cfg.out {
        Some(path) => fs::File::create(path).and_then(|f| table.write_to(io::BufWriter::new(f))),
        None => table.write_to(io::stdout().lock()),
    };
    written.map_err(|e| Failure::Config(format!("cannot write output: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let text = e.to_string();
            eprintln!("{}", text.lines().next().unwrap_or("invalid arguments"));
            return ExitCode::from(2);
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = writeln!(io::stderr(), "error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
