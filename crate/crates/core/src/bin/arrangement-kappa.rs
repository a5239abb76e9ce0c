use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use arrangement_kappa::config::{glue_c13, maclane_c8, Configuration};
use arrangement_kappa::report::{self, C13Options, MaclaneOptions, RunReport};
use arrangement_kappa::{Error, Result};

/// Exact lower-central-series invariants of line-arrangement groups.
#[derive(Parser)]
#[command(version)]
struct Cli {
    /// Emit JSON (the only output format).
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; report through the exit code only.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the configuration axioms. PATH may be `builtin:c8` or `builtin:c13`.
    Validate { path: String },
    /// Run every C8 check.
    MaclaneReport {
        /// Compare ḡ⁺ with itself.
        #[arg(long)]
        swap_g: bool,
        /// Do not use the transcribed dual elements.
        #[arg(long)]
        no_hardcoded: bool,
    },
    /// Build C13, its realizations and the class computation.
    C13Report {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Try a degenerate gluing transform first.
        #[arg(long)]
        degenerate_first: bool,
    },
    /// κ for a configuration and two conjugator maps.
    Kappa { config: String, g: PathBuf, g_prime: PathBuf },
    /// Print all embedded data.
    DumpPaperData,
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn load_unchecked(path: &str) -> Result<Configuration> {
    match path {
        "builtin:c8" => Ok(maclane_c8()),
        "builtin:c13" => Ok(glue_c13()),
        _ => Configuration::from_json_unchecked(&read(Path::new(path))?),
    }
}

enum Outcome {
    Report(RunReport),
    Value(serde_json::Value, bool),
}

fn run(cli: &Cli) -> Result<Outcome> {
    Ok(match &cli.command {
        Command::Validate { path } => {
            let c = load_unchecked(path)?;
            let v = c.validate();
            let ok = v.valid;
            let messages: Vec<String> = v.violations.iter().map(ToString::to_string).collect();
            Outcome::Value(
                json!({"digest": report::config_digest(&c), "report": v, "messages": messages}),
                ok,
            )
        }
        Command::MaclaneReport { swap_g, no_hardcoded } => Outcome::Report(report::maclane_report(MaclaneOptions {
            swap_g: *swap_g,
            no_hardcoded: *no_hardcoded,
        })?),
        Command::C13Report { seed, degenerate_first } => Outcome::Report(report::c13_report(C13Options {
            seed: *seed,
            degenerate_first: *degenerate_first,
        })?),
        Command::Kappa { config, g, g_prime } => {
            let c = load_unchecked(config)?;
            let v = c.validate();
            if !v.valid {
                return Err(Error::Configuration(v.to_string()));
            }
            Outcome::Report(report::kappa_report(c, &read(g)?, &read(g_prime)?)?)
        }
        Command::DumpPaperData => Outcome::Value(report::embedded_data()?, true),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let (text, ok) = match outcome {
                Outcome::Report(r) => (r.to_json(), r.passed),
                Outcome::Value(v, ok) => (serde_json::to_string_pretty(&v).expect("serializable"), ok),
            };
            if !cli.quiet {
                println!("{text}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if !cli.quiet {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
    }
}
