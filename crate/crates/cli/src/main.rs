//! `j2coh`: reproduces the tables and runs the verification suites.
//!
//! Exit codes: 0 when every check passes, 1 on a failed check, 2 on a usage
//! or configuration error.

mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use j2coh_core::verify::{self, ConfigError, Session, Suite, TableKind, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "j2coh", version, about = "Exact mod-3 verification of the cohomology of J2")]
struct Cli {
    /// Largest total degree n+m computed.
    #[arg(long, global = true, default_value_t = 24)]
    max_total_degree: i32,
    /// Constant in the second d5 formula.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    k_d5: u8,
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory holding leary.pres and j2.pres.
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one of the dimension tables.
    Table {
        #[arg(value_enum)]
        which: TableArg,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Compare the four computations of the Poincaré series.
    Poincare {
        /// Last degree compared; defaults to the max total degree.
        degree: Option<i32>,
    },
    /// Every suite and every table.
    Report,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableArg {
    E6Corner,
    InvariantsCorner,
    #[value(name = "invariants-21")]
    Invariants21,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Ss,
    Invariants,
    Rings,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.downcast_ref::<ConfigError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let cfg = VerifyConfig { max_total_degree: cli.max_total_degree, k_d5: cli.k_d5, fixtures: cli.fixtures.clone() };
    let session = Session::new(cfg)?;
    let (text, ok) = match &cli.command {
        Command::Table { which } => {
            let kind = match which {
                TableArg::E6Corner => TableKind::E6Corner,
                TableArg::InvariantsCorner => TableKind::InvariantsCorner,
                TableArg::Invariants21 => TableKind::Invariants21,
            };
            let doc = verify::table(kind, &session).map_err(anyhow::Error::msg)?;
            let text = match cli.format {
                Format::Ascii => render::table(&doc),
                Format::Json => json(&doc)?,
            };
            (text, true)
        }
        Command::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Ss => Suite::Ss,
                SuiteArg::Invariants => Suite::Invariants,
                SuiteArg::Rings => Suite::Rings,
                SuiteArg::All => Suite::All,
            };
            let report = verify::run(suite, &session);
            let text = match cli.format {
                Format::Ascii => render::report(&report),
                Format::Json => json(&report)?,
            };
            (text, report.passed())
        }
        Command::Poincare { degree } => {
            let n = degree.unwrap_or(cli.max_total_degree);
            if n < 0 || n > cli.max_total_degree {
                return Err(ConfigError::BeyondMax { requested: n, max: cli.max_total_degree }.into());
            }
            let rows = verify::poincare_rows(&session, n as usize).map_err(anyhow::Error::msg)?;
            let text = match cli.format {
                Format::Ascii => render::poincare(&rows),
                Format::Json => json(&rows)?,
            };
            (text, rows.agree)
        }
        Command::Report => {
            let report = verify::full_report(&session);
            let text = match cli.format {
                Format::Ascii => render::full_report(&report),
                Format::Json => json(&report)?,
            };
            (text, report.passed())
        }
    };
    emit(cli.out.as_ref(), &text)?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}
