use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use jwverma_cli::commands::{self, DEFAULT_MAX_STRANDS};
use jwverma_cli::config::{parse_assignment, parse_checks, parse_weights};
use jwverma_cli::document::Timing;
use jwverma_cli::{CliError, JobConfig, Result, ResultDocument};

/// Exact Jones-Wenzl projectors on tensor products of U_q(sl2) Verma modules.
///
/// Exit status: 0 all checks pass, 1 a check failed, 2 invalid
/// configuration, 3 a specialization hit a pole, 4 I/O or document error.
/// Set RAYON_NUM_THREADS to limit the worker threads.
#[derive(Parser)]
#[command(name = "jwverma", version, about, long_about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the projector blocks for symbolic weights.
    Compute(Job),
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        job: Job,
        /// Comma-separated checks: idempotent, intertwiner, ef_identity,
        /// oracle, pascal, relations, coassoc, or all.
        #[arg(long)]
        checks: String,
    },
    /// Emit the classical projector on n strands and check it.
    Tl {
        n: usize,
        /// Refuse larger n.
        #[arg(long, default_value_t = DEFAULT_MAX_STRANDS)]
        max_strands: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Substitute integer weights into a stored document.
    Specialize {
        #[arg(long)]
        input: PathBuf,
        /// Assignments such as mu1=2,mu2=-1.
        #[arg(long)]
        at: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Job {
    /// Comma-separated weight symbol names in tensor order, e.g. mu1,mu2,mu3.
    #[arg(long, default_value = "")]
    weights: String,
    /// Compute every degree 0..=D.
    #[arg(long)]
    max_degree: i64,
    /// Specialize weights to integers, e.g. mu1=2,mu2=-1.
    #[arg(long)]
    at: Option<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Output {
    /// Write the document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall-clock time in the document (makes output non-reproducible).
    #[arg(long)]
    timing: bool,
}

impl Job {
    fn config(&self) -> Result<JobConfig> {
        let mut c = JobConfig::new(parse_weights(&self.weights), self.max_degree);
        if let Some(at) = &self.at {
            c.specialization = parse_assignment(at)?;
        }
        c.output_path = self.output.out.clone();
        Ok(c)
    }
}

fn progress(msg: &str) {
    eprintln!("jwverma: {msg}");
}

fn read_document(path: &Path) -> Result<ResultDocument> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    ResultDocument::from_json(&text)
}

fn emit(mut doc: ResultDocument, output: &Output, started: Instant) -> Result<bool> {
    if output.timing {
        doc.timing = Some(Timing {
            millis: started.elapsed().as_millis() as u64,
        });
    }
    let text = doc.to_json();
    match &output.out {
        Some(path) => {
            fs::write(path, text).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            progress(&format!("wrote {}", path.display()));
        }
        None => print!("{text}"),
    }
    for r in doc.reports.iter().filter(|r| !r.passed) {
        progress(&format!("{}: {} violation(s)", r.check, r.violations.len()));
    }
    Ok(doc.passed())
}

fn run(cli: Cli) -> Result<bool> {
    let started = Instant::now();
    let log: &dyn Fn(&str) = &progress;
    match cli.command {
        Command::Compute(job) => {
            let doc = commands::compute(&job.config()?, log)?;
            emit(doc, &job.output, started)
        }
        Command::Verify { job, checks } => {
            let mut config = job.config()?;
            config.checks = parse_checks(&checks)?;
            let doc = commands::verify(&config, log)?;
            emit(doc, &job.output, started)
        }
        Command::Tl {
            n,
            max_strands,
            output,
        } => emit(commands::tl(n, max_strands, log)?, &output, started),
        Command::Specialize { input, at, output } => {
            let doc = read_document(&input)?;
            let at = parse_assignment(&at)?;
            emit(commands::specialize(&doc, &at, log)?, &output, started)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("jwverma: error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
