mod commands;
mod report;
mod session;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::Parser;
use tatecx::polyring::{Field, FieldSpec, PrimeField, Rationals};
use tatecx::qci::Splitting;

use commands::{default_deg_bound, Command, Settings};
use report::{envelope, Bounds, CommandEcho};
use session::{Loaded, SessionFile, DEFAULT_SEED};

/// Quasi-complete intersection checks, Tate complexes and Betti numbers
/// from session files.
#[derive(Debug, Parser)]
#[command(name = "tatecx", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Session file (JSON, schema 1).
    session: PathBuf,
    /// Write the machine-readable report instead of tables.
    #[arg(long)]
    json: bool,
    /// Homological bound N.
    #[arg(long = "bound-N")]
    bound_n: Option<usize>,
    /// Internal degree bound D.
    #[arg(long = "bound-D")]
    bound_d: Option<i64>,
    /// Also build and check the complete Tate complex.
    #[arg(long = "check-T")]
    check_t: bool,
    /// Also scan Lutz windows.
    #[arg(long)]
    lutz: bool,
    /// Seed for randomized grade probes; overrides the session.
    #[arg(long)]
    seed: Option<u64>,
    /// Coefficient field, `QQ` or `GF(p)`; overrides the session.
    #[arg(long)]
    field: Option<String>,
}

fn execute<F: Field>(cli: &Cli, session: &SessionFile, field_spec: FieldSpec, field: F) -> Result<u8> {
    let started = Instant::now();
    let loaded = Loaded::new(session, field)?;
    let o = &session.options;
    let settings = Settings {
        hom_bound: cli.bound_n.or(o.hom_bound),
        deg_bound: cli.bound_d.or(o.deg_bound).unwrap_or_else(|| default_deg_bound(&loaded.quotient)),
        trials: o.trials.unwrap_or(20),
        seed: cli.seed.or(o.seed).unwrap_or(DEFAULT_SEED),
        check_t: cli.check_t || o.check_t.unwrap_or(false),
        lutz: cli.lutz || o.lutz_mode.unwrap_or(false),
        t_window: o.t_window,
        splitting: o.splitting_seed.map_or(Splitting::LowestIndex, Splitting::Random),
    };
    let outcome = commands::run(cli.command, &loaded, &settings)?;
    if cli.json {
        let echo = CommandEcho {
            subcommand: cli.command.name().to_string(),
            session: cli.session.display().to_string(),
            field: field_spec.to_string(),
            seed: settings.seed,
            check_t: settings.check_t,
            lutz: settings.lutz,
        };
        let bounds = Bounds { n: outcome.hom_bound, d: settings.deg_bound };
        let doc = envelope(&echo, &bounds, outcome.result);
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        print!("{}", outcome.human);
        println!("field {field_spec}, D = {}, seed {}, {:.1} ms", settings.deg_bound, settings.seed, started.elapsed().as_secs_f64() * 1e3);
    }
    Ok(if outcome.inconclusive { 2 } else { 0 })
}

fn main_inner(cli: &Cli) -> Result<u8> {
    let session = SessionFile::load(&cli.session)?;
    let spec = match &cli.field {
        Some(f) => FieldSpec::parse(f).map_err(|e| anyhow::anyhow!("flag `--field`: {e}"))?,
        None => session.field_spec()?,
    };
    match spec {
        FieldSpec::Rationals => execute(cli, &session, spec, Rationals),
        FieldSpec::Prime(p) => execute(cli, &session, spec, PrimeField::new(p)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match main_inner(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
