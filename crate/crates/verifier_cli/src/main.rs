use std::path::{Path, PathBuf};
use std::process::ExitCode;

use catalog::{build, save, AlgebraSpec};
use clap::{Args, Parser, Subcommand};
use verifier_cli::{run_suite, search_open_question, CliError, Format, SuiteConfig, SuiteReport, USAGE_ERROR};

#[derive(Parser)]
#[command(name = "hopf-verify", version, about = "Exact verification of coideal subalgebra and factor coalgebra correspondences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra from a JSON spec and print its structure tables.
    Build {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the configured checks over every instance.
    Verify(RunArgs),
    /// Search for factor coalgebras over which H is injective but not a cogenerator.
    SearchOpenQuestion(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    config: PathBuf,
    /// `json` or `md`; overrides the config file.
    #[arg(long)]
    format: Option<Format>,
    /// Replaces every seed in the config file.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Omit the wall-clock block so that identical runs give identical bytes.
    #[arg(long)]
    no_metadata: bool,
}

fn write_output(out: Option<&Path>, text: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source }),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn build_command(spec: &Path, out: Option<&Path>) -> Result<i32, CliError> {
    let bytes = std::fs::read(spec).map_err(|source| CliError::Io { path: spec.to_owned(), source })?;
    let parsed: AlgebraSpec =
        serde_json::from_slice(&bytes).map_err(|source| CliError::Parse { path: spec.to_owned(), source })?;
    let h = build(&parsed).map_err(|source| CliError::Algebra { name: parsed.name(), source })?;
    write_output(out, &save(&h))?;
    Ok(0)
}

fn run_command(args: &RunArgs, search: bool) -> Result<i32, CliError> {
    let mut config = SuiteConfig::load(&args.config)?;
    if let Some(seed) = args.seed {
        config.reseed(seed);
    }
    let report = if search { search_open_question(&config)? } else { run_suite(&config)? };
    let report: SuiteReport = if args.no_metadata { report.without_metadata() } else { report };
    let text = match args.format.unwrap_or(config.format) {
        Format::Json => report.to_json(),
        Format::Markdown => report.to_markdown(),
    };
    write_output(args.out.as_deref(), text.as_bytes())?;
    if !report.passed() {
        eprintln!("{} failed checks", report.summary.verdicts.fail);
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build { spec, out } => build_command(spec, out.as_deref()),
        Command::Verify(args) => run_command(args, false),
        Command::SearchOpenQuestion(args) => run_command(args, true),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("hopf-verify: {e}");
            ExitCode::from(USAGE_ERROR as u8)
        }
    }
}
