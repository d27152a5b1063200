use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hesse_lab::plot::parse_window;
use hesse_lab::report::DEFAULT_PRECISION;
use hesse_lab::{registry, report_json, run, write_plot, HarnessConfig, PlotConfig, Status};

#[derive(Parser)]
#[command(name = "hesse-lab", version, about = "Exact and numeric checks for the Hesse pencil")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks whose ids match the globs (all checks when none are given).
    Check {
        globs: Vec<String>,
        #[arg(long, env = "HESSE_LAB_PRECISION", default_value_t = DEFAULT_PRECISION)]
        precision: u32,
        /// λ samples for the numeric suites.
        #[arg(long = "lambda", num_args = 1.., allow_negative_numbers = true)]
        lambdas: Vec<String>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record runtime_ms as 0 so reports are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Render real members of the pencil to SVG.
    PlotPencil {
        #[arg(long = "lambda", num_args = 0.., allow_negative_numbers = true)]
        lambdas: Vec<String>,
        #[arg(long)]
        out: PathBuf,
        /// xmin,xmax,ymin,ymax
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// List check ids with their references.
    List {
        #[arg(long = "lambda", num_args = 1.., allow_negative_numbers = true)]
        lambdas: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(cmd: Command) -> hesse_lab::Result<ExitCode> {
    let default_lambdas = HarnessConfig::default().lambdas;
    match cmd {
        Command::Check { globs, precision, lambdas, json, no_timing } => {
            let config = HarnessConfig {
                precision_bits: precision,
                filters: globs,
                lambdas: if lambdas.is_empty() { default_lambdas } else { lambdas },
                json_path: json.clone(),
                timing: !no_timing,
            };
            let report = run(&config)?;
            for r in &report.results {
                let tag = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped => "skip",
                };
                println!("{tag:4}  {:<44} {:>7} ms", r.check_id, r.runtime_ms);
            }
            println!("{} checks, {} failed", report.results.len(), report.failures());
            if let Some(p) = &json {
                report_json(&report, p)?;
            }
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::PlotPencil { lambdas, out, window } => {
            let mut cfg = PlotConfig { lambdas, ..Default::default() };
            if let Some(w) = window {
                cfg.window = parse_window(&w)?;
            }
            write_plot(&cfg, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::List { lambdas } => {
            for c in registry(if lambdas.is_empty() { &default_lambdas } else { &lambdas }) {
                println!("{:<44} {}", c.id, c.paper_ref);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
