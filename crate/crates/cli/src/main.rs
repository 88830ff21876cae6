use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qbailey::catalog::{self, Side};
use qbailey::verifier::{
    self, default_jobs, parse_points, parse_range, EngineConfig, Format, IdentityFilter, RunConfig, VerifierError,
};

#[derive(Parser)]
#[command(name = "qbailey", version, about = "Exact verification of quantum q-series identities at roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify identities over a grid of root orders N and chain lengths m.
    Verify {
        /// Comma-separated identity ids, or `all`.
        #[arg(long, default_value = "all", value_parser = parse_filter)]
        identities: IdentityFilter,
        /// Root orders as `lo..hi` (inclusive) or a single value.
        #[arg(long = "N", default_value = "1..12", value_parser = range)]
        n: std::ops::RangeInclusive<u64>,
        /// Chain lengths as `lo..hi` (inclusive) or a single value.
        #[arg(long = "m", default_value = "1", value_parser = range)]
        m: std::ops::RangeInclusive<u64>,
        #[arg(long, default_value = "json", value_parser = parse_format)]
        format: Format,
        /// Worker threads; defaults to QBAILEY_JOBS or the CPU count.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall time per cell (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
        /// Print the theta specifications of the selected cells instead of verifying.
        #[arg(long)]
        dump_theta_spec: bool,
    },
    /// Check Bailey pairs, key lemmas, chains and the arithmetic substrate.
    EngineCheck {
        /// Largest index for pair checks.
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Comma-separated rational sample points.
        #[arg(long, default_value = "2/3,5/7,3/2")]
        points: String,
        #[arg(long, default_value = "human", value_parser = parse_format)]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the catalogued identities.
    ListIdentities,
}

fn range(s: &str) -> Result<std::ops::RangeInclusive<u64>, String> {
    parse_range(s).map_err(|e| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: VerifierError| e.to_string())
}

fn parse_filter(s: &str) -> Result<IdentityFilter, String> {
    s.parse().map_err(|e: VerifierError| e.to_string())
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn theta_dump(config: &RunConfig) -> Result<String, VerifierError> {
    let mut items = Vec::new();
    for (spec, n, m) in verifier::grid_cells(config)? {
        if !spec.applicability.admits(n) {
            continue;
        }
        for (name, side) in [("A", Side::A), ("B", Side::B)] {
            if let Some(t) = catalog::theta_spec(spec, side, n, m) {
                items.push(serde_json::json!({"id": spec.id, "N": n, "m": m, "side": name, "spec": t}));
            }
        }
    }
    Ok(serde_json::to_string_pretty(&items).expect("json") + "\n")
}

fn run(cli: Cli) -> Result<i32, VerifierError> {
    match cli.command {
        Command::Verify {
            identities,
            n,
            m,
            format,
            jobs,
            out,
            timings,
            dump_theta_spec,
        } => {
            let config = RunConfig {
                identities,
                n_range: n,
                m_range: m,
                format,
                jobs: jobs.unwrap_or_else(default_jobs),
                timings,
                ..RunConfig::default()
            };
            if dump_theta_spec {
                let text = theta_dump(&config)?;
                emit(&text, out.as_ref())?;
                return Ok(0);
            }
            let run = verifier::run_grid(&config)?;
            emit(&run.render(config.format), out.as_ref())?;
            Ok(run.exit_code())
        }
        Command::EngineCheck {
            n_max,
            points,
            format,
            jobs,
            out,
        } => {
            let config = EngineConfig {
                n_max,
                points: parse_points(&points)?,
                jobs: jobs.unwrap_or_else(default_jobs),
                ..EngineConfig::default()
            };
            let run = verifier::run_engine_checks(&config)?;
            emit(&run.render(format), out.as_ref())?;
            Ok(run.exit_code())
        }
        Command::ListIdentities => {
            let mut text = String::new();
            for spec in catalog::catalog() {
                let m = match spec.m_domain {
                    catalog::MDomain::One => "m=1",
                    catalog::MDomain::AtLeastOne => "m>=1",
                };
                text += &format!("{:<16} {:<5} {:<5} {}\n", spec.id, spec.applicability.to_string(), m, spec.statement);
            }
            emit(&text, None)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
