use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pearl_blowup::{builtin_example, parse_spec, run_report, Command, WorkbenchError};

/// Exact calculator for Lagrangian quantum and Floer homology on monotone
/// one-point blow-ups.
#[derive(Parser)]
#[command(name = "pearl-blowup", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Built-in example name (clifford-cp2, rp2-cp2, acyclic-pair,
    /// point-lagrangian).
    #[arg(long)]
    example: Option<String>,
    /// Path to a JSON input document.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Common {
    #[command(flatten)]
    source: Source,
    /// Emit the report as JSON instead of plain text.
    #[arg(long)]
    json: bool,
    /// Include differential dumps in the report.
    #[arg(long)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate the document and report the admissibility verdict.
    Check(Common),
    /// Lagrangian quantum homology on the base manifold.
    Qh(Common),
    /// Quantum homology of the proper transforms on the blow-up.
    Blowup(Common),
    /// Floer homology of the declared pairs on the base manifold.
    Hf(Common),
    /// Floer homology of the proper transforms on the blow-up.
    #[command(name = "hf-blowup")]
    HfBlowup(Common),
}

fn load_workspace(source: &Source) -> Result<(pearl_blowup::Workspace, String), WorkbenchError> {
    match (&source.example, &source.input) {
        (Some(name), None) => Ok((builtin_example(name)?, format!("example {}", name))),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                WorkbenchError::Parse(format!("cannot read {}: {}", path.display(), e))
            })?;
            Ok((parse_spec(&text)?, format!("file {}", path.display())))
        }
        _ => unreachable!("clap enforces exactly one source"),
    }
}

fn execute(command: Command, common: &Common) -> Result<bool, WorkbenchError> {
    let (workspace, source) = load_workspace(&common.source)?;
    let report = run_report(&workspace, command, &source, common.verbose)?;
    if common.json {
        println!("{}", report.render_json());
    } else {
        print!("{}", report.render_text());
    }
    Ok(report.refused)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = match &cli.command {
        Cmd::Check(c) => (Command::Check, c),
        Cmd::Qh(c) => (Command::Qh, c),
        Cmd::Blowup(c) => (Command::Blowup, c),
        Cmd::Hf(c) => (Command::Hf, c),
        Cmd::HfBlowup(c) => (Command::HfBlowup, c),
    };
    match execute(command, common) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
