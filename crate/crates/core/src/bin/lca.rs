use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lincell::cli::{report_path, run_experiment, run_suite, validate, Report, RunOptions};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "lca", version, about = "Exact experiments on linear cellular automata over groups")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Override the experiment seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Override the subgroup-closure budget.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Directory for report files.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Record wall-clock duration in reports.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run the experiments in one file and print their reports.
    Run { file: PathBuf },
    /// Run every experiment file in a directory (or a multi-experiment file).
    Suite { path: PathBuf },
    /// Parse and validate an experiment file without running it.
    Validate { file: PathBuf },
}

fn print_report(r: &Report, format: Format) {
    match format {
        Format::Json => print!("{}", r.to_json_string()),
        Format::Text => print!("{}", r.to_text()),
    }
}

fn run_one(file: &Path, cli: &Cli, opts: &RunOptions) -> Result<bool, String> {
    let experiments = validate(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let count = experiments.len();
    let mut ok = true;
    for (i, e) in experiments.iter().enumerate() {
        let report = run_experiment(e, opts).map_err(|err| format!("{}: {err}", e.name))?;
        if let Some(dir) = &cli.out {
            let path = report_path(file, Some(dir), i, count, &e.name);
            std::fs::create_dir_all(dir).map_err(|err| err.to_string())?;
            std::fs::write(&path, report.to_json_string())
                .map_err(|err| format!("{}: {err}", path.display()))?;
        }
        print_report(&report, cli.format);
        ok &= report.passed();
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = RunOptions {
        seed: cli.seed,
        budget: cli.budget,
        timing: cli.timing,
    };
    let result = match &cli.command {
        Cmd::Run { file } => run_one(file, &cli, &opts),
        Cmd::Suite { path } => run_suite(path, cli.out.as_deref(), &opts)
            .map(|summary| {
                match cli.format {
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string_pretty(&summary.to_json()).expect("summary serializes")
                    ),
                    Format::Text => print!("{}", summary.to_text()),
                }
                summary.success()
            })
            .map_err(|e| e.to_string()),
        Cmd::Validate { file } => validate(file)
            .map(|es| {
                println!("ok: {} experiment(s) in {}", es.len(), file.display());
                true
            })
            .map_err(|e| format!("{}: {e}", file.display())),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
