//! `defect`: analyze groups, verify the corpus, and sweep subgroups of `S_n`.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input error,
//! 3 cap exceeded.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use defect_core::families::{Family, GroupSpec};
use defect_core::harness;
use defect_core::{Error, Limits};

#[derive(Parser)]
#[command(name = "defect", version, about = "Deficient conjugacy classes and the defect of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest group order the engine will enumerate.
    #[arg(long, value_name = "N", global = true)]
    max_order: Option<usize>,

    /// Report wall-clock run times (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Report classes, defect, verdict and property checks for one group.
    Analyze {
        /// Group description, e.g. `psl2:7` or `gens:(1 2 3),(1 2)@3`.
        spec: String,
    },
    /// Check every corpus group against its expected defect and form.
    VerifyCorpus,
    /// Classify every subgroup of S_N.
    Sweep {
        /// Degree of the symmetric group, 1 to 6.
        #[arg(default_value_t = 5)]
        n: usize,
        /// Allow the S_6 sweep.
        #[arg(long)]
        include_s6: bool,
    },
    /// List the group families, or show the generators of one.
    Family {
        /// Group description; omit to list families.
        spec: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Mismatch,
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn emit(format: Format, json: serde_json::Value, text: String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&json).expect("JSON values serialize")),
        Format::Text => print!("{text}"),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = Limits {
        max_order: cli.max_order.unwrap_or(Limits::default().max_order),
        ..Limits::default()
    };
    let (format, timing) = (cli.format, cli.timing);
    match cli.command {
        Command::Analyze { spec } => {
            let spec: GroupSpec = spec.parse()?;
            let analysis = harness::analyze(&spec, limits)?;
            emit(format, analysis.to_json(timing), analysis.to_text(timing));
            if !analysis.result.violations.is_empty() {
                return Err(Failure::Mismatch);
            }
        }
        Command::VerifyCorpus => {
            let report = harness::verify_corpus(limits)?;
            emit(format, report.to_json(timing), report.to_text(timing));
            if !report.passed() {
                return Err(Failure::Mismatch);
            }
        }
        Command::Sweep { n, include_s6 } => {
            if n == 6 && !include_s6 {
                return Err(Error::InvalidParameter("the S_6 sweep is opt-in: pass --include-s6".into()).into());
            }
            let report = harness::sweep(n, limits)?;
            emit(format, report.to_json(timing), report.to_text(timing));
            if !report.violations.is_empty() {
                return Err(Failure::Mismatch);
            }
        }
        Command::Family { spec: None } => {
            let synopses: Vec<&str> = Family::ALL.iter().map(|f| f.synopsis()).collect();
            let json = serde_json::json!({ "families": synopses });
            emit(format, json, synopses.iter().map(|s| format!("{s}\n")).collect());
        }
        Command::Family { spec: Some(spec) } => {
            let spec: GroupSpec = spec.parse()?;
            let group = spec.build_with(limits)?;
            let gens: Vec<String> = group.generators().iter().map(ToString::to_string).collect();
            let json = serde_json::json!({
                "spec": spec.to_string(),
                "degree": group.degree(),
                "order": group.order(),
                "generators": gens,
            });
            let text = format!(
                "spec: {spec}\ndegree: {}\norder: {}\ngenerators:\n{}",
                group.degree(),
                group.order(),
                gens.iter().map(|g| format!("  {g}\n")).collect::<String>()
            );
            emit(format, json, text);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 3,
                Error::Inconsistency(_) => 1,
                _ => 2,
            })
        }
    }
}
